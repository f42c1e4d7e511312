//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// `d = u * a * v`, with `u` and `v` unimodular and `d` diagonal,
/// `d[0] | d[1] | ...`, all diagonal entries non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, k: &BigInt) {
    for j in 0..m.cols() {
        let v = m.get(target, j) + k * m.get(source, j);
        m.set(target, j, v);
    }
}

fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, k: &BigInt) {
    for i in 0..m.rows() {
        let v = m.get(i, target) + k * m.get(i, source);
        m.set(i, target, v);
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -m.get(r, j);
        m.set(r, j, v);
    }
}

/// Smallest nonzero absolute value in the trailing block, ties broken by
/// (row, col) order.
fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let a = d.get(i, j).abs();
            if a.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                return Smith { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                add_row_multiple(&mut d, i, t, &q);
                add_row_multiple(&mut u, i, t, &q);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                add_col_multiple(&mut d, j, t, &q);
                add_col_multiple(&mut v, j, t, &q);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // Row and column t are clean; enforce divisibility on the rest.
            let p = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    add_row_multiple(&mut d, t, i, &one);
                    add_row_multiple(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    Smith { u, d, v }
}

/// Columns generating the integer kernel of `a`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    let keep: Vec<usize> = (r..a.cols()).collect();
    s.v.select_cols(&keep)
}

/// Some integer `x` with `a * x = b`, or `None` when none exists.
pub fn solve_linear_z(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows()
        )));
    }
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b)?;
    let diag = s.diagonal();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !ci.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = ci.div_rem(&di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(s.v.mul_vec(&y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Smith {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.det().abs(), BigInt::from(1));
        assert_eq!(s.v.det().abs(), BigInt::from(1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn diag_two_three() {
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::from_i64(2, 3, &[0; 6]).unwrap();
        let s = check(&a);
        assert_eq!(s.d, a);
    }

    #[test]
    fn rectangular() {
        let a = IntMatrix::from_i64(2, 3, &[4, 6, 8, 2, 10, 14]).unwrap();
        check(&a);
        let b = a.transpose();
        check(&b);
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::from_i64(1, 1, &[2]).unwrap();
        assert_eq!(
            solve_linear_z(&a, &[BigInt::from(4)]).unwrap(),
            Some(vec![BigInt::from(2)])
        );
        assert_eq!(solve_linear_z(&a, &[BigInt::from(3)]).unwrap(), None);
        let a = IntMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        let x = solve_linear_z(&a, &[BigInt::from(5)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![BigInt::from(5)]);
        assert!(solve_linear_z(&a, &[BigInt::from(1), BigInt::from(2)]).is_err());
    }

    #[test]
    fn kernel_columns_vanish() {
        let a = IntMatrix::from_i64(2, 4, &[2, 4, 6, 8, 1, 3, 5, 7]).unwrap();
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 2);
        let prod = a.mul(&k).unwrap();
        assert!(prod.entries().iter().all(|x| x.is_zero()));
    }
}
