use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactarith::{Field, Scalar};

use super::groebner::{self, TermOrder, Vector};
use super::monomial::{Monomial, MonomialOrder};
use super::poly::Poly;

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    modulus: Vec<Poly>,
}

/// A polynomial ring `k[x1..xn]` over the rationals or a prime field, with
/// a monomial order and an optional defining ideal. The defining ideal is
/// stored as a reduced Groebner basis in the declared order; an empty
/// basis means no quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing(Arc<Inner>);

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S], order: MonomialOrder) -> Result<Self> {
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            let ok = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::UnsupportedRing(format!("bad variable name {v:?}")));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::UnsupportedRing(format!("variable {v} declared twice")));
            }
        }
        if let MonomialOrder::Elim(k) = order {
            if k > vars.len() {
                return Err(Error::UnsupportedRing("elimination block too wide".into()));
            }
        }
        Ok(PolyRing(Arc::new(Inner {
            field,
            vars,
            order,
            modulus: Vec::new(),
        })))
    }

    /// `QQ[vars]` with graded reverse lex.
    pub fn rationals<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::new(Field::Rationals, vars, MonomialOrder::Grevlex).expect("valid variable names")
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Reduced Groebner basis of the defining ideal (empty when not a quotient).
    pub fn modulus(&self) -> &[Poly] {
        &self.0.modulus
    }

    pub fn is_quotient(&self) -> bool {
        !self.0.modulus.is_empty()
    }

    /// The polynomial ring this ring is a quotient of.
    pub fn ambient(&self) -> PolyRing {
        if !self.is_quotient() {
            return self.clone();
        }
        PolyRing(Arc::new(Inner {
            field: self.0.field,
            vars: self.0.vars.clone(),
            order: self.0.order,
            modulus: Vec::new(),
        }))
    }

    /// `self / (gens)`; the generators are read as ambient polynomials.
    pub fn quotient(&self, gens: &[Poly]) -> PolyRing {
        let mut all: Vec<Poly> = self.0.modulus.clone();
        all.extend(gens.iter().cloned());
        let basis = self.ambient().groebner(&all);
        PolyRing(Arc::new(Inner {
            field: self.0.field,
            vars: self.0.vars.clone(),
            order: self.0.order,
            modulus: basis,
        }))
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        let base = PolyRing(Arc::new(Inner {
            field: self.0.field,
            vars: self.0.vars.clone(),
            order,
            modulus: Vec::new(),
        }));
        let modulus: Vec<Poly> = self.0.modulus.iter().map(|f| base.resort(f)).collect();
        base.quotient(&modulus)
    }

    pub(crate) fn term_order(&self) -> TermOrder {
        TermOrder { order: self.0.order }
    }

    /// Reduced Groebner basis in the ambient ring (the modulus is not added).
    pub(crate) fn groebner(&self, gens: &[Poly]) -> Vec<Poly> {
        let ord = self.term_order();
        let vs: Vec<Vector> = gens.iter().map(|g| g.to_vector(0)).collect();
        groebner::reduced_basis(&ord, &vs)
            .iter()
            .map(|v| Poly::from_vector(v, 0))
            .collect()
    }

    /// Normal form against an ambient Groebner basis.
    pub(crate) fn normal_form_raw(&self, f: &Poly, basis: &[Poly]) -> Poly {
        if basis.is_empty() {
            return f.clone();
        }
        let ord = self.term_order();
        let vs: Vec<Vector> = basis.iter().map(|g| g.to_vector(0)).collect();
        Poly::from_vector(&groebner::reduce(&ord, &f.to_vector(0), &vs), 0)
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce(&self, f: &Poly) -> Poly {
        self.normal_form_raw(f, &self.0.modulus)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        self.reduce(&Poly {
            terms: vec![(Monomial::one(self.nvars()), c)],
        })
    }

    pub fn from_i64(&self, c: i64) -> Poly {
        self.constant(self.0.field.from_i64(c))
    }

    pub fn one(&self) -> Poly {
        self.from_i64(1)
    }

    pub fn var(&self, i: usize) -> Poly {
        self.reduce(&Poly {
            terms: vec![(Monomial::var(self.nvars(), i), self.0.field.one())],
        })
    }

    pub fn var_by_name(&self, name: &str) -> Option<Poly> {
        self.0.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }

    pub fn monomial(&self, c: Scalar, exps: &[u32]) -> Poly {
        assert_eq!(exps.len(), self.nvars());
        if c.is_zero() {
            return Poly::zero();
        }
        self.reduce(&Poly {
            terms: vec![(Monomial::from_exponents(exps), c)],
        })
    }

    /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(&self, terms: Vec<(Monomial, Scalar)>) -> Poly {
        self.reduce(&Poly::from_raw(&self.term_order(), terms))
    }

    /// Re-sorts a polynomial built under another order of the same width.
    pub(crate) fn resort(&self, f: &Poly) -> Poly {
        Poly::from_raw(&self.term_order(), f.terms.clone())
    }

    pub(crate) fn add_raw(&self, a: &Poly, b: &Poly) -> Poly {
        let ord = self.term_order();
        let one = Monomial::one(self.nvars());
        let v = ord.add_scaled(&a.to_vector(0), &self.0.field.one(), &one, &b.to_vector(0));
        Poly::from_vector(&v, 0)
    }

    pub(crate) fn mul_raw(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let ord = self.term_order();
        let bv = b.to_vector(0);
        let mut acc = Vector::default();
        for (m, c) in &a.terms {
            acc = ord.add_scaled(&acc, c, m, &bv);
        }
        Poly::from_vector(&acc, 0)
    }

    pub(crate) fn scale(&self, a: &Poly, c: &Scalar) -> Poly {
        Poly::from_vector(&a.to_vector(0).scale(c), 0)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_raw(a, b)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.scale(a, &self.0.field.from_i64(-1))
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_raw(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&self.mul_raw(a, b))
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Exact division in the ambient ring; `None` if `f` does not divide `g`.
    pub(crate) fn divide_exact(&self, g: &Poly, f: &Poly) -> Option<Poly> {
        if f.is_zero() {
            return if g.is_zero() { Some(Poly::zero()) } else { None };
        }
        let ord = self.term_order();
        let fv = f.to_vector(0);
        let (fm, fc) = (&f.terms[0].0, f.terms[0].1.inv()?);
        let mut rem = g.to_vector(0);
        let mut quot: Vec<(Monomial, Scalar)> = Vec::new();
        while let Some(lt) = rem.terms.first() {
            if !fm.divides(&lt.mono) {
                return None;
            }
            let m = fm.quotient_of(&lt.mono);
            let c = lt.coeff.mul_ref(&fc);
            rem = ord.add_scaled(&rem, &c.neg_ref(), &m, &fv);
            quot.push((m, c));
        }
        Some(Poly::from_raw(&ord, quot))
    }

    /// `k[t1..tk, x1..xn]` under an elimination order for the fresh variables.
    pub(crate) fn extend_front(&self, k: usize) -> PolyRing {
        let mut vars: Vec<String> = (0..k).map(|i| format!("_t{i}")).collect();
        vars.extend(self.0.vars.iter().cloned());
        PolyRing(Arc::new(Inner {
            field: self.0.field,
            vars,
            order: MonomialOrder::Elim(k),
            modulus: Vec::new(),
        }))
    }

    /// Image of an element of `self` in `ext = self.extend_front(k)`.
    pub(crate) fn embed_front(&self, f: &Poly, ext: &PolyRing, k: usize) -> Poly {
        Poly::from_raw(
            &ext.term_order(),
            f.terms
                .iter()
                .map(|(m, c)| (m.with_fresh_front(k), c.clone()))
                .collect(),
        )
    }

    /// Inverse of `embed_front` on polynomials free of the fresh variables.
    pub(crate) fn contract_front(&self, f: &Poly, k: usize) -> Option<Poly> {
        if f.terms
            .iter()
            .any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0))
        {
            return None;
        }
        Some(Poly::from_raw(
            &self.term_order(),
            f.terms
                .iter()
                .map(|(m, c)| (m.drop_front(k), c.clone()))
                .collect(),
        ))
    }

    pub fn is_graded(&self) -> bool {
        self.0.modulus.iter().all(Poly::is_homogeneous)
    }

    pub fn format(&self, f: &Poly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in f.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(&self.0.vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))?;
        if self.is_quotient() {
            let amb = self.ambient();
            let gens: Vec<String> = self.0.modulus.iter().map(|g| amb.format(g)).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        write!(f, " {}", self.0.order)
    }
}
