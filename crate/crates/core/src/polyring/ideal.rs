use std::fmt;

use crate::error::{Error, Result};

use super::poly::Poly;
use super::ring::PolyRing;

/// An ideal held as its reduced Groebner basis.
///
/// Over a quotient ring `k[x]/a` the basis is that of the preimage ideal in
/// `k[x]`, which always contains `a`. Two ideals are equal exactly when the
/// bases coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealGB {
    ring: PolyRing,
    basis: Vec<Poly>,
}

/// Which binary ideal operation to perform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Quotient,
}

/// Right operand of an [`IdealOp`]: colon ideals take a single polynomial.
pub enum Operand<'a> {
    Ideal(&'a IdealGB),
    Poly(&'a Poly),
}

impl IdealGB {
    /// Reduced Groebner basis of `(gens)` in `ring`.
    pub fn buchberger(gens: &[Poly], ring: &PolyRing) -> Self {
        let mut all: Vec<Poly> = gens.to_vec();
        all.extend(ring.modulus().iter().cloned());
        let basis = ring.ambient().groebner(&all);
        IdealGB {
            ring: ring.clone(),
            basis,
        }
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::buchberger(&[], ring)
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::buchberger(&[ring.one()], ring)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// The full basis of the preimage ideal in the ambient ring.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Basis elements that are nonzero in the ring itself.
    pub fn generators(&self) -> Vec<Poly> {
        self.basis
            .iter()
            .filter(|g| !self.ring.reduce(g).is_zero())
            .cloned()
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.generators().is_empty()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.ring.ambient().normal_form_raw(f, &self.basis)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealGB) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    fn check_ring(&self, other: &PolyRing) -> Result<()> {
        if &self.ring != other {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &IdealGB) -> Result<IdealGB> {
        self.check_ring(&other.ring)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Ok(Self::buchberger(&gens, &self.ring))
    }

    pub fn product(&self, other: &IdealGB) -> Result<IdealGB> {
        self.check_ring(&other.ring)?;
        let amb = self.ring.ambient();
        let mut gens = Vec::new();
        for f in &self.basis {
            for g in &other.basis {
                gens.push(amb.mul_raw(f, g));
            }
        }
        Ok(Self::buchberger(&gens, &self.ring))
    }

    /// Intersection by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersection(&self, other: &IdealGB) -> Result<IdealGB> {
        self.check_ring(&other.ring)?;
        let amb = self.ring.ambient();
        let basis = intersect_ambient(&amb, &self.basis, &other.basis);
        Ok(IdealGB {
            ring: self.ring.clone(),
            basis,
        })
    }

    /// The colon ideal `(I : f) = {g : g f in I}`.
    pub fn quotient(&self, f: &Poly) -> IdealGB {
        let amb = self.ring.ambient();
        if self.ring.reduce(f).is_zero() {
            return Self::unit(&self.ring);
        }
        let inter = intersect_ambient(&amb, &self.basis, &amb.groebner(std::slice::from_ref(f)));
        let gens: Vec<Poly> = inter
            .iter()
            .map(|g| amb.divide_exact(g, f).expect("f divides every element of (f)"))
            .collect();
        Self::buchberger(&gens, &self.ring)
    }

    pub fn op(&self, kind: IdealOp, rhs: Operand<'_>) -> Result<IdealGB> {
        match (kind, rhs) {
            (IdealOp::Sum, Operand::Ideal(b)) => self.sum(b),
            (IdealOp::Product, Operand::Ideal(b)) => self.product(b),
            (IdealOp::Intersection, Operand::Ideal(b)) => self.intersection(b),
            (IdealOp::Quotient, Operand::Poly(f)) => Ok(self.quotient(f)),
            (IdealOp::Quotient, Operand::Ideal(b)) => {
                // (I : J) = intersection of (I : g) over generators g of J.
                self.check_ring(&b.ring)?;
                let mut acc = Self::unit(&self.ring);
                for g in &b.basis {
                    acc = acc.intersection(&self.quotient(g))?;
                }
                Ok(acc)
            }
            (_, Operand::Poly(f)) => {
                let b = Self::buchberger(std::slice::from_ref(f), &self.ring);
                self.op(kind, Operand::Ideal(&b))
            }
        }
    }

    /// The same ambient generators read in another ring with the same
    /// variables, field and order (e.g. a quotient of this ring's ambient).
    pub fn transport(&self, ring: &PolyRing) -> Result<IdealGB> {
        if self.ring.ambient() != ring.ambient() {
            return Err(Error::RingMismatch);
        }
        Ok(Self::buchberger(&self.basis, ring))
    }

    /// Radical membership: `1` lies in `I + (1 - t f)` in `k[t, x]`.
    pub fn radical_member(&self, f: &Poly) -> bool {
        if self.contains(f) {
            return true;
        }
        let amb = self.ring.ambient();
        let ext = amb.extend_front(1);
        let mut gens: Vec<Poly> = self.basis.iter().map(|g| amb.embed_front(g, &ext, 1)).collect();
        let tf = ext.mul_raw(&ext.var(0), &amb.embed_front(f, &ext, 1));
        gens.push(ext.sub(&ext.one(), &tf));
        let gb = ext.groebner(&gens);
        gb.len() == 1 && gb[0].is_constant()
    }

    /// `V(self) ⊆ V(other)`, i.e. every generator of `other` lies in the radical of `self`.
    pub fn radical_contains_ideal(&self, other: &IdealGB) -> bool {
        other.basis.iter().all(|g| self.radical_member(g))
    }

    pub fn format(&self) -> String {
        let amb = self.ring.ambient();
        let gens: Vec<String> = self.generators().iter().map(|g| amb.format(g)).collect();
        if gens.is_empty() {
            return "(0)".to_string();
        }
        format!("({})", gens.join(", "))
    }
}

fn intersect_ambient(amb: &PolyRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let ext = amb.extend_front(1);
    let t = ext.var(0);
    let one_minus_t = ext.sub(&ext.one(), &t);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(ext.mul_raw(&t, &amb.embed_front(f, &ext, 1)));
    }
    for g in b {
        gens.push(ext.mul_raw(&one_minus_t, &amb.embed_front(g, &ext, 1)));
    }
    let eliminated: Vec<Poly> = ext
        .groebner(&gens)
        .iter()
        .filter_map(|g| amb.contract_front(g, 1))
        .collect();
    amb.groebner(&eliminated)
}

impl fmt::Display for IdealGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}
