//! The commutative-ring interface shared by the module, complex and
//! subcategory layers. Two implementations exist: polynomial rings over a
//! field (optionally modulo an ideal) and the integers (optionally modulo n).

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactarith::Matrix;
use crate::text::Cursor;

pub trait BaseRing: Clone + Debug + PartialEq {
    /// Ring elements, always held as canonical representatives.
    type Elem: Clone + Debug + PartialEq + Eq + Hash;
    /// Ideals in a canonical form, so that `==` decides equality.
    type Ideal: Clone + Debug + PartialEq + Eq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Canonical representative of an arbitrary element.
    fn canon(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Nonzero constant with an inverse in the ring.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Generators of the kernel of `a: R^cols -> R^rows`, as columns.
    fn syzygies(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem>;

    /// Whether `v` lies in the submodule of `R^rows` spanned by the columns of `gens`.
    fn submodule_contains(&self, gens: &Matrix<Self::Elem>, v: &[Self::Elem]) -> bool;

    fn ideal(&self, gens: &[Self::Elem]) -> Self::Ideal;
    /// A generating set, without elements that vanish in the ring.
    fn ideal_generators(&self, i: &Self::Ideal) -> Vec<Self::Elem>;
    fn ideal_sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    fn ideal_product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    fn ideal_intersection(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    /// `f` in the radical of `i`.
    fn radical_contains(&self, i: &Self::Ideal, f: &Self::Elem) -> bool;

    fn zero_ideal(&self) -> Self::Ideal {
        self.ideal(&[])
    }

    fn unit_ideal(&self) -> Self::Ideal {
        self.ideal(&[self.one()])
    }

    /// The image of an integer.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// Reads one element; stops before `,`, `;`, `]`, `)` and `}`.
    fn parse_elem(&self, c: &mut Cursor<'_>) -> Result<Self::Elem>;

    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Ring literal in the command-line grammar.
    fn describe(&self) -> String;
}

pub(crate) fn mat_mul<R: BaseRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols(), b.rows(), "matrix product shape");
    let mut out = Matrix::filled(a.rows(), b.cols(), ring.zero());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if ring.is_zero(x) {
                continue;
            }
            for j in 0..b.cols() {
                let y = b.get(k, j);
                if ring.is_zero(y) {
                    continue;
                }
                let v = ring.add(out.get(i, j), &ring.mul(x, y));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub(crate) fn is_zero_matrix<R: BaseRing>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.entries().iter().all(|x| ring.is_zero(x))
}

pub(crate) fn identity<R: BaseRing>(ring: &R, n: usize) -> Matrix<R::Elem> {
    let mut m = Matrix::filled(n, n, ring.zero());
    for i in 0..n {
        m.set(i, i, ring.one());
    }
    m
}

/// Determinant by cofactor expansion along the first row. Intended for the
/// small square blocks that arise as Fitting minors.
pub(crate) fn determinant<R: BaseRing>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let n = a.rows();
    assert_eq!(n, a.cols());
    match n {
        0 => ring.one(),
        1 => a.get(0, 0).clone(),
        2 => ring.sub(
            &ring.mul(a.get(0, 0), a.get(1, 1)),
            &ring.mul(a.get(0, 1), a.get(1, 0)),
        ),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                let x = a.get(0, j);
                if ring.is_zero(x) {
                    continue;
                }
                let rows: Vec<usize> = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = determinant(ring, &a.select_rows(&rows).select_cols(&cols));
                let term = ring.mul(x, &minor);
                acc = if j % 2 == 0 {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            acc
        }
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
