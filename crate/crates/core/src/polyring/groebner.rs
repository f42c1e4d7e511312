//! Buchberger's algorithm on submodules of a free module `k[x]^r`.
//!
//! Ideals are the rank-one case. Terms are ordered position-over-term:
//! a smaller position index dominates, then the monomial order decides.
//! Pairs are selected by degree of the lcm, then FIFO; the coprime and
//! chain criteria discard pairs.

use std::cmp::Ordering;
use std::collections::HashSet;

use super::monomial::{Monomial, MonomialOrder};
use crate::exactarith::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Element of `k[x]^r`, terms sorted strictly descending in the
/// position-over-term order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug)]
pub struct TermOrder {
    pub order: MonomialOrder,
}

impl TermOrder {
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp((a.pos, &a.mono), (b.pos, &b.mono))
    }

    /// Sorts and merges raw terms into a normalized vector.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = last.coeff.add_ref(&t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    /// `a + c * m * b`.
    pub fn add_scaled(&self, a: &Vector, c: &Scalar, m: &Monomial, b: &Vector) -> Vector {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut shifted = b.terms.iter().map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: t.coeff.mul_ref(c),
        });
        let mut next_b = shifted.next();
        while i < a.terms.len() || next_b.is_some() {
            match (a.terms.get(i), next_b.as_ref()) {
                (Some(x), Some(y)) => match self.cmp_terms(x, y) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = shifted.next();
                    }
                    Ordering::Equal => {
                        let s = x.coeff.add_ref(&y.coeff);
                        if !s.is_zero() {
                            out.push(Term {
                                pos: x.pos,
                                mono: x.mono.clone(),
                                coeff: s,
                            });
                        }
                        i += 1;
                        next_b = shifted.next();
                    }
                },
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = shifted.next();
                }
                (None, None) => unreachable!(),
            }
        }
        Vector { terms: out }
    }
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::default();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul_ref(c),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.leading() {
            Some(t) if !t.coeff.is_one() => {
                let inv = t.coeff.inv().expect("field coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn max_pos(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.pos).max()
    }
}

/// Full (top and tail) reduction of `f` against `basis`.
pub fn reduce(ord: &TermOrder, f: &Vector, basis: &[Vector]) -> Vector {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms.first().cloned() {
        let divisor = basis.iter().find(|g| {
            let g0 = &g.terms[0];
            g0.pos == lt.pos && g0.mono.divides(&lt.mono)
        });
        match divisor {
            Some(g) => {
                let g0 = &g.terms[0];
                let c = lt
                    .coeff
                    .mul_ref(&g0.coeff.inv().expect("field coefficient"))
                    .neg_ref();
                let m = g0.mono.quotient_of(&lt.mono);
                p = ord.add_scaled(&p, &c, &m, g);
            }
            None => {
                rem.push(lt);
                p.terms.remove(0);
            }
        }
    }
    Vector { terms: rem }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
    seq: usize,
}

fn s_vector(ord: &TermOrder, f: &Vector, g: &Vector, lcm: &Monomial) -> Vector {
    let (f0, g0) = (&f.terms[0], &g.terms[0]);
    let mf = f0.mono.quotient_of(lcm);
    let mg = g0.mono.quotient_of(lcm);
    let cf = f0.coeff.inv().expect("field coefficient");
    let cg = g0.coeff.inv().expect("field coefficient").neg_ref();
    let a = ord.add_scaled(&Vector::default(), &cf, &mf, f);
    ord.add_scaled(&a, &cg, &mg, g)
}

/// Reduced Groebner basis of the submodule generated by `gens`, sorted
/// descending by leading term. The result depends only on the submodule.
pub fn reduced_basis(ord: &TermOrder, gens: &[Vector]) -> Vec<Vector> {
    let rank_one = gens.iter().all(|g| g.max_pos().unwrap_or(0) == 0);
    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0usize;

    let mut add =
        |v: Vector, basis: &mut Vec<Vector>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| {
            let k = basis.len();
            let lt = v.terms[0].clone();
            for (i, g) in basis.iter().enumerate() {
                let g0 = &g.terms[0];
                if g0.pos != lt.pos {
                    continue;
                }
                let lcm = g0.mono.lcm(&lt.mono);
                pairs.push(Pair {
                    i,
                    j: k,
                    degree: lcm.degree(),
                    lcm,
                    seq,
                });
                seq += 1;
                pending.insert((i, k));
            }
            basis.push(v);
        };

    for g in gens {
        let r = reduce(ord, g, &basis);
        if !r.is_zero() {
            add(r.monic(), &mut basis, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        let idx = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.degree, p.seq))
            .map(|(i, _)| i)
            .unwrap();
        let pair = pairs.swap_remove(idx);
        pending.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (mi, mj) = (&fi.terms[0].mono, &fj.terms[0].mono);
        if rank_one && mi.coprime(mj) {
            continue;
        }
        let pos = fi.terms[0].pos;
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let gk = &basis[k].terms[0];
            gk.pos == pos
                && gk.mono.divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(ord, fi, fj, &pair.lcm);
        let r = reduce(ord, &s, &basis);
        if !r.is_zero() {
            add(r.monic(), &mut basis, &mut pairs, &mut pending);
        }
    }

    interreduce(ord, basis)
}

/// Minimal, monic, fully interreduced basis sorted descending by leading term.
pub fn interreduce(ord: &TermOrder, basis: Vec<Vector>) -> Vec<Vector> {
    let mut minimal: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = &g.terms[0];
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let h0 = &h.terms[0];
            j != i && h0.pos == lt.pos && h0.mono.divides(&lt.mono) && (h0.mono != lt.mono || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Vector> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vector> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let head = Vector {
            terms: vec![minimal[i].terms[0].clone()],
        };
        let tail = Vector {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let tail = reduce(ord, &tail, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        out.push(Vector { terms }.monic());
    }
    out.sort_by(|a, b| {
        let (x, y) = (&a.terms[0], &b.terms[0]);
        ord.cmp((y.pos, &y.mono), (x.pos, &x.mono))
    });
    out
}
