use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix};
use super::snf::{integer_kernel, solve_linear_z};
use crate::base::BaseRing;
use crate::error::Result;
use crate::text::Cursor;

/// The integers, or the integers modulo `n` when `n > 0`.
///
/// Elements are canonical: reduced into `[0, n)` for `n > 0`. An ideal is
/// stored by its non-negative generator; over `ZZ/n` that generator is
/// taken to divide `n`, so `n` itself stands for the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntRing {
    modulus: BigInt,
}

impl IntRing {
    pub fn integers() -> Self {
        IntRing {
            modulus: BigInt::zero(),
        }
    }

    pub fn modulo(n: u64) -> Self {
        IntRing {
            modulus: BigInt::from(n),
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus.is_zero()
    }

    pub fn elem(&self, v: i64) -> BigInt {
        self.canon(&BigInt::from(v))
    }

    fn canon(&self, v: &BigInt) -> BigInt {
        if self.modulus.is_zero() {
            v.clone()
        } else {
            v.mod_floor(&self.modulus)
        }
    }

    /// Columns `n * e_i` that turn an integer presentation into one over `ZZ/n`.
    fn augment(&self, a: &IntMatrix) -> IntMatrix {
        if self.modulus.is_zero() || a.rows() == 0 {
            return a.clone();
        }
        let mut scaled = IntMatrix::identity(a.rows());
        for i in 0..a.rows() {
            scaled.set(i, i, self.modulus.clone());
        }
        a.hconcat(&scaled).expect("same row count")
    }
}

impl BaseRing for IntRing {
    type Elem = BigInt;
    type Ideal = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        self.canon(&BigInt::one())
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.canon(&(a + b))
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.canon(&-a)
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.canon(&(a * b))
    }

    fn canon(&self, a: &BigInt) -> BigInt {
        IntRing::canon(self, a)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        self.canon(a).is_zero()
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        if self.modulus.is_zero() {
            a.abs().is_one()
        } else {
            !self.modulus.is_one() && a.gcd(&self.modulus).is_one()
        }
    }

    fn syzygies(&self, a: &IntMatrix) -> IntMatrix {
        let m = a.cols();
        let k = integer_kernel(&self.augment(a));
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..k.cols() {
            let col: Vec<BigInt> = (0..m).map(|i| self.canon(k.get(i, j))).collect();
            if col.iter().any(|x| !x.is_zero()) && !cols.contains(&col) {
                cols.push(col);
            }
        }
        Matrix::from_columns(m, &cols, &BigInt::zero())
    }

    fn submodule_contains(&self, gens: &IntMatrix, v: &[BigInt]) -> bool {
        let full = self.augment(gens);
        if full.cols() == 0 {
            return v.iter().all(|x| self.is_zero(x));
        }
        solve_linear_z(&full, v).ok().flatten().is_some()
    }

    fn ideal(&self, gens: &[BigInt]) -> BigInt {
        gens.iter().fold(self.modulus.clone(), |acc, g| acc.gcd(g))
    }

    fn ideal_generators(&self, i: &BigInt) -> Vec<BigInt> {
        let g = self.canon(i);
        if g.is_zero() {
            Vec::new()
        } else {
            vec![g]
        }
    }

    fn ideal_sum(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }

    fn ideal_product(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.ideal(&[a * b])
    }

    fn ideal_intersection(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.lcm(b)
    }

    fn radical_contains(&self, i: &BigInt, f: &BigInt) -> bool {
        if i.is_zero() {
            return f.is_zero();
        }
        // Strip from the generator every prime that also divides f.
        let mut h = i.abs();
        loop {
            let d = h.gcd(f);
            if d.is_one() {
                break;
            }
            h /= d;
        }
        h.is_one()
    }

    fn from_int(&self, n: &BigInt) -> BigInt {
        self.canon(n)
    }

    fn parse_elem(&self, c: &mut Cursor<'_>) -> Result<BigInt> {
        let neg = c.eat('-');
        if !neg {
            c.eat('+');
        }
        let v = c.expect_unsigned()?;
        Ok(self.canon(&if neg { -v } else { v }))
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        if self.modulus.is_zero() {
            "ZZ".to_string()
        } else {
            format!("ZZ/{}", self.modulus)
        }
    }
}
