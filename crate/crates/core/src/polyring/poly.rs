use crate::exactarith::Scalar;

use super::groebner::{Term, TermOrder, Vector};
use super::monomial::Monomial;

/// Sparse polynomial: terms sorted strictly descending in the owning ring's
/// monomial order, no zero coefficients, exponent vectors of the ring's width.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub(crate) terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn to_vector(&self, pos: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| Term {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Component `pos` of a module vector.
    pub(crate) fn from_vector(v: &Vector, pos: usize) -> Poly {
        Poly {
            terms: v
                .terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| (t.mono.clone(), t.coeff.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_raw(ord: &TermOrder, terms: Vec<(Monomial, Scalar)>) -> Poly {
        let v = ord.normalize(
            terms
                .into_iter()
                .map(|(mono, coeff)| Term { pos: 0, mono, coeff })
                .collect(),
        );
        Poly::from_vector(&v, 0)
    }
}
