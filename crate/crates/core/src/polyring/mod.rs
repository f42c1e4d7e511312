//! Multivariate polynomials over QQ or Fp, Buchberger's algorithm, ideal
//! operations, radical membership and quotient-ring arithmetic.

mod groebner;
mod ideal;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use ideal::{IdealGB, IdealOp, Operand};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::Poly;
pub use ring::PolyRing;

pub(crate) use parse::parse_expr;

use crate::base::BaseRing;
use crate::exactarith::Matrix;
use groebner::{reduce, reduced_basis, Vector};

impl PolyRing {
    /// Columns of `gens` plus `modulus * e_i`, as ambient module vectors.
    fn submodule_vectors(&self, gens: &Matrix<Poly>, shift: usize) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for j in 0..gens.cols() {
            out.push(column_vector(&gens.column(j), shift));
        }
        for g in self.modulus() {
            for i in 0..gens.rows() {
                out.push(g.to_vector(i + shift));
            }
        }
        out
    }

    /// Reduced Groebner basis of the submodule spanned by the columns of
    /// `gens` (and the defining ideal times the ambient free module).
    pub(crate) fn module_basis(&self, gens: &Matrix<Poly>) -> Vec<Vector> {
        let ord = self.term_order();
        reduced_basis(&ord, &self.submodule_vectors(gens, 0))
    }

    pub(crate) fn module_reduce(&self, basis: &[Vector], v: &[Poly]) -> Vec<Poly> {
        let ord = self.term_order();
        let r = reduce(&ord, &column_vector(v, 0), basis);
        (0..v.len()).map(|i| Poly::from_vector(&r, i)).collect()
    }
}

fn column_vector(col: &[Poly], shift: usize) -> Vector {
    let mut terms = Vec::new();
    for (i, p) in col.iter().enumerate() {
        terms.extend(p.to_vector(i + shift).terms);
    }
    // Components are already sorted and positions increase, so the
    // concatenation is sorted in position-over-term order.
    Vector { terms }
}

impl BaseRing for PolyRing {
    type Elem = Poly;
    type Ideal = IdealGB;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        PolyRing::one(self)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        PolyRing::add(self, a, b)
    }

    fn neg(&self, a: &Poly) -> Poly {
        PolyRing::neg(self, a)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        PolyRing::mul(self, a, b)
    }

    fn canon(&self, a: &Poly) -> Poly {
        self.reduce(a)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn is_unit(&self, a: &Poly) -> bool {
        a.is_constant()
    }

    fn syzygies(&self, a: &Matrix<Poly>) -> Matrix<Poly> {
        let (n, m) = (a.rows(), a.cols());
        let ord = self.term_order();
        let mut vs: Vec<Vector> = Vec::with_capacity(m);
        for j in 0..m {
            let mut v = column_vector(&a.column(j), 0);
            v.terms.extend(self.one().to_vector(n + j).terms);
            vs.push(v);
        }
        for g in self.modulus() {
            for i in 0..n {
                vs.push(g.to_vector(i));
            }
        }
        let gb = reduced_basis(&ord, &vs);
        let mut cols: Vec<Vec<Poly>> = Vec::new();
        for v in gb {
            if v.terms[0].pos < n {
                continue;
            }
            let col: Vec<Poly> = (0..m)
                .map(|j| self.reduce(&Poly::from_vector(&v, n + j)))
                .collect();
            if col.iter().any(|p| !p.is_zero()) && !cols.contains(&col) {
                cols.push(col);
            }
        }
        Matrix::from_columns(m, &cols, &Poly::zero())
    }

    fn submodule_contains(&self, gens: &Matrix<Poly>, v: &[Poly]) -> bool {
        let basis = self.module_basis(gens);
        self.module_reduce(&basis, v).iter().all(Poly::is_zero)
    }

    fn ideal(&self, gens: &[Poly]) -> IdealGB {
        IdealGB::buchberger(gens, self)
    }

    fn ideal_generators(&self, i: &IdealGB) -> Vec<Poly> {
        i.generators().iter().map(|g| self.reduce(g)).collect()
    }

    fn ideal_sum(&self, a: &IdealGB, b: &IdealGB) -> IdealGB {
        a.sum(b).expect("same ring")
    }

    fn ideal_product(&self, a: &IdealGB, b: &IdealGB) -> IdealGB {
        a.product(b).expect("same ring")
    }

    fn ideal_intersection(&self, a: &IdealGB, b: &IdealGB) -> IdealGB {
        a.intersection(b).expect("same ring")
    }

    fn radical_contains(&self, i: &IdealGB, f: &Poly) -> bool {
        i.radical_member(f)
    }

    fn from_int(&self, n: &num_bigint::BigInt) -> Poly {
        self.constant(self.field().from_bigint(n))
    }

    fn parse_elem(&self, c: &mut crate::text::Cursor<'_>) -> crate::error::Result<Poly> {
        parse_expr(self, c)
    }

    fn format_elem(&self, a: &Poly) -> String {
        self.format(a)
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::Field;

    fn qxy() -> PolyRing {
        PolyRing::rationals(&["x", "y"])
    }

    fn p(r: &PolyRing, s: &str) -> Poly {
        parse_poly(r, s).unwrap()
    }

    fn gb(r: &PolyRing, s: &str) -> IdealGB {
        IdealGB::buchberger(&parse_poly_list(r, s).unwrap(), r)
    }

    fn shown(i: &IdealGB) -> Vec<String> {
        i.generators().iter().map(|g| i.ring().format(g)).collect()
    }

    #[test]
    fn buchberger_examples() {
        let rx = PolyRing::rationals(&["x"]);
        assert_eq!(shown(&gb(&rx, "x")), vec!["x"]);
        let r = qxy();
        let i = gb(&r, "x^2 + y^2 - 1, x - y");
        assert_eq!(shown(&i), vec!["y^2 - 1/2", "x - y"]);
        // Both inputs reduce to zero, and the output is a fixed point.
        assert!(i.contains(&p(&r, "x^2 + y^2 - 1")));
        assert!(i.contains(&p(&r, "x - y")));
        assert_eq!(IdealGB::buchberger(i.basis(), &r), i);
        assert!(gb(&r, "0").basis().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = qxy();
        assert!(gb(&r, "x").normal_form(&p(&r, "x^2")).is_zero());
        let i = gb(&r, "x - y, 2*y^2 - 1");
        assert_eq!(r.format(&i.normal_form(&p(&r, "x^2"))), "1/2");
        assert_eq!(r.format(&IdealGB::zero(&r).normal_form(&r.one())), "1");
    }

    #[test]
    fn ideal_op_examples() {
        let r = qxy();
        let (x, y) = (gb(&r, "x"), gb(&r, "y"));
        assert_eq!(x.sum(&y).unwrap(), gb(&r, "x, y"));
        assert_eq!(x.intersection(&y).unwrap(), gb(&r, "x*y"));
        assert_eq!(gb(&r, "x*y").quotient(&p(&r, "x")), y);
        assert_eq!(x.product(&y).unwrap(), gb(&r, "x*y"));
        let a = gb(&r, "x^2, x*y");
        assert_eq!(a.quotient(&p(&r, "x")), gb(&r, "x, y"));
        assert_eq!(
            a.op(IdealOp::Quotient, Operand::Ideal(&gb(&r, "x, y"))).unwrap(),
            gb(&r, "x")
        );
    }

    #[test]
    fn radical_examples() {
        let r = qxy();
        assert!(gb(&r, "x^2").radical_member(&p(&r, "x")));
        assert!(!gb(&r, "x^2").radical_member(&p(&r, "y")));
        assert!(gb(&r, "x, y").radical_member(&p(&r, "x + y")));
        assert!(!gb(&r, "x^3, y").radical_member(&r.one()));
        assert!(gb(&r, "x^3*y^2 - 1, y").radical_member(&r.one()));
    }

    #[test]
    fn quotient_ring_arithmetic() {
        let base = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let r = base.quotient(&[p(&base, "x^2")]);
        let x = r.var(0);
        assert!(r.mul(&x, &x).is_zero());
        assert_eq!(r.to_string(), "Fp(2)[x]/(x^2) grevlex");
        let i = IdealGB::zero(&r);
        assert!(i.is_zero());
        assert!(i.radical_member(&x));
    }

    #[test]
    fn syzygy_of_row() {
        let r = qxy();
        let a = Matrix::from_rows(vec![vec![p(&r, "x"), p(&r, "y")]], 2).unwrap();
        let s = r.syzygies(&a);
        assert_eq!(s.cols(), 1);
        let prod = crate::base::mat_mul(&r, &a, &s);
        assert!(prod.entries().iter().all(Poly::is_zero));
        let id = crate::base::identity(&r, 2);
        assert_eq!(r.syzygies(&id).cols(), 0);
    }

    #[test]
    fn lex_order_basis() {
        let r = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Lex).unwrap();
        let i = gb(&r, "x^2 + y^2 - 1, x - y");
        assert_eq!(shown(&i), vec!["x - y", "y^2 - 1/2"]);
    }
}
