//! Classifying data: closed loci `V(a)` up to radical, their open
//! complements, and explicit point sets of `Spec ZZ`.

use std::collections::BTreeSet;
use std::fmt;

use crate::base::BaseRing;
use crate::error::{Error, Result};
use crate::exactarith::is_prime;
use crate::freemod::FPModule;
use crate::text::Cursor;

/// `V(ideal)`, compared up to radical.
#[derive(Clone, Debug)]
pub struct ClosedLocus<R: BaseRing> {
    ring: R,
    ideal: R::Ideal,
}

impl<R: BaseRing> ClosedLocus<R> {
    pub fn new(ring: R, ideal: R::Ideal) -> Self {
        ClosedLocus { ring, ideal }
    }

    pub fn of_elements(ring: R, gens: &[R::Elem]) -> Self {
        let ideal = ring.ideal(gens);
        ClosedLocus { ring, ideal }
    }

    /// `V(1)`.
    pub fn empty(ring: R) -> Self {
        let ideal = ring.unit_ideal();
        ClosedLocus { ring, ideal }
    }

    /// `V(0)`.
    pub fn whole(ring: R) -> Self {
        let ideal = ring.zero_ideal();
        ClosedLocus { ring, ideal }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ideal(&self) -> &R::Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> Vec<R::Elem> {
        self.ring.ideal_generators(&self.ideal)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `V(a) ∪ V(b) = V(a ∩ b) = V(ab)`. The intersection is used since
    /// products grow quickly under repeated unions.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClosedLocus {
            ring: self.ring.clone(),
            ideal: self.ring.ideal_intersection(&self.ideal, &other.ideal),
        })
    }

    /// `V(a) ∩ V(b) = V(a + b)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClosedLocus {
            ring: self.ring.clone(),
            ideal: self.ring.ideal_sum(&self.ideal, &other.ideal),
        })
    }

    /// `V(a) ⊆ V(b)` iff every generator of `b` lies in the radical of `a`.
    pub fn contained_in(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self
            .ring
            .ideal_generators(&other.ideal)
            .iter()
            .all(|g| self.ring.radical_contains(&self.ideal, g)))
    }

    pub fn same_locus(&self, other: &Self) -> Result<bool> {
        Ok(self.contained_in(other)? && other.contained_in(self)?)
    }

    pub fn is_empty(&self) -> bool {
        self.ring.radical_contains(&self.ideal, &self.ring.one())
    }

    pub fn is_whole(&self) -> bool {
        self.ring.ideal_generators(&self.ideal).is_empty()
    }

    /// `supp M = V(Fitt_0 M)`.
    pub fn support_of(module: &FPModule<R>) -> Self {
        ClosedLocus {
            ring: module.ring().clone(),
            ideal: module.fitting0(),
        }
    }

    /// The open complement `Spec R \ V(a)`.
    pub fn complement(&self) -> OrderIdealView<R> {
        OrderIdealView {
            complement: self.clone(),
        }
    }
}

impl<R: BaseRing> PartialEq for ClosedLocus<R> {
    fn eq(&self, other: &Self) -> bool {
        self.same_locus(other).unwrap_or(false)
    }
}

impl<R: BaseRing> fmt::Display for ClosedLocus<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators()
            .iter()
            .map(|g| self.ring.format_elem(g))
            .collect();
        if gens.is_empty() {
            write!(f, "V(0)")
        } else {
            write!(f, "V({})", gens.join(", "))
        }
    }
}

/// `Spec R \ V(a)`: the representable fragment of the order ideals, one
/// quasi-compact open at a time.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderIdealView<R: BaseRing> {
    complement: ClosedLocus<R>,
}

impl<R: BaseRing> OrderIdealView<R> {
    pub fn complement(&self) -> &ClosedLocus<R> {
        &self.complement
    }

    /// Back to the closed datum.
    pub fn into_locus(self) -> ClosedLocus<R> {
        self.complement
    }
}

impl<R: BaseRing> fmt::Display for OrderIdealView<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spec \\ {}", self.complement)
    }
}

/// A point of `Spec ZZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecZPoint {
    Generic,
    Prime(u64),
}

/// A subset of `Spec ZZ` that is finite or cofinite in the closed points,
/// plus a flag for the generic point `(0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecZSet {
    cofinite: bool,
    primes: BTreeSet<u64>,
    generic: bool,
}

impl SpecZSet {
    pub fn empty() -> Self {
        SpecZSet {
            cofinite: false,
            primes: BTreeSet::new(),
            generic: false,
        }
    }

    pub fn all() -> Self {
        Self::empty().complement()
    }

    /// Finite set of closed points.
    pub fn finite(primes: impl IntoIterator<Item = u64>, generic: bool) -> Self {
        SpecZSet {
            cofinite: false,
            primes: primes.into_iter().collect(),
            generic,
        }
    }

    /// All closed points except `excluded`.
    pub fn cofinite(excluded: impl IntoIterator<Item = u64>, generic: bool) -> Self {
        SpecZSet {
            cofinite: true,
            primes: excluded.into_iter().collect(),
            generic,
        }
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    /// Listed primes: members in finite mode, non-members in cofinite mode.
    pub fn listed(&self) -> &BTreeSet<u64> {
        &self.primes
    }

    pub fn contains_generic(&self) -> bool {
        self.generic
    }

    pub fn member(&self, point: SpecZPoint) -> bool {
        match point {
            SpecZPoint::Generic => self.generic,
            SpecZPoint::Prime(p) => self.primes.contains(&p) != self.cofinite,
        }
    }

    pub fn complement(&self) -> Self {
        SpecZSet {
            cofinite: !self.cofinite,
            primes: self.primes.clone(),
            generic: !self.generic,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let generic = self.generic || other.generic;
        let (cofinite, primes) = match (self.cofinite, other.cofinite) {
            (false, false) => (false, &self.primes | &other.primes),
            (true, true) => (true, &self.primes & &other.primes),
            (true, false) => (true, &self.primes - &other.primes),
            (false, true) => (true, &other.primes - &self.primes),
        };
        SpecZSet {
            cofinite,
            primes,
            generic,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersect(&other.complement()) == Self::empty()
    }

    /// Parses `{2,3}`, `~{2,3}`, optionally followed by `+generic`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut c = Cursor::new(src);
        let cofinite = c.eat('~');
        c.expect('{')?;
        let mut primes = BTreeSet::new();
        if !c.eat('}') {
            loop {
                let at = c.offset();
                let n = c.expect_unsigned()?;
                let p: u64 = u64::try_from(&n)
                    .ok()
                    .filter(|&p| is_prime(p))
                    .ok_or_else(|| c.error_at(at, format!("{n} is not a prime")))?;
                primes.insert(p);
                if c.eat('}') {
                    break;
                }
                c.expect(',')?;
            }
        }
        let generic = c.eat_str("+generic");
        c.finish()?;
        Ok(SpecZSet {
            cofinite,
            primes,
            generic,
        })
    }
}

impl fmt::Display for SpecZSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        if self.cofinite {
            write!(f, "~")?;
        }
        write!(f, "{{{}}}", list.join(","))?;
        if self.generic {
            write!(f, "+generic")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::IntRing;
    use crate::polyring::{parse_poly_list, PolyRing};

    fn v(r: &PolyRing, s: &str) -> ClosedLocus<PolyRing> {
        ClosedLocus::of_elements(r.clone(), &parse_poly_list(r, s).unwrap())
    }

    #[test]
    fn locus_algebra() {
        let r = PolyRing::rationals(&["x", "y"]);
        assert_eq!(v(&r, "x").union(&v(&r, "y")).unwrap(), v(&r, "x*y"));
        assert_eq!(v(&r, "x").intersect(&v(&r, "y")).unwrap(), v(&r, "x, y"));
        assert_eq!(v(&r, "x^2"), v(&r, "x"));
        assert!(v(&r, "x, y").contained_in(&v(&r, "x")).unwrap());
        assert!(v(&r, "x").contained_in(&v(&r, "x*y")).unwrap());
        assert!(!v(&r, "x").contained_in(&v(&r, "y")).unwrap());
        assert!(v(&r, "1").is_empty());
        assert!(v(&r, "0").is_whole());
        assert_eq!(v(&r, "x*y").to_string(), "V(x*y)");
        assert_eq!(v(&r, "0").to_string(), "V(0)");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = PolyRing::rationals(&["x", "y"]);
        let s = PolyRing::rationals(&["x"]);
        let err = v(&r, "x").union(&v(&s, "x")).unwrap_err();
        assert_eq!(err.name(), "ring-mismatch");
    }

    #[test]
    fn loci_over_integers() {
        let z = IntRing::integers();
        let l = |n: i64| ClosedLocus::of_elements(z.clone(), &[n.into()]);
        assert_eq!(l(4), l(2));
        assert!(l(2).contained_in(&l(6)).unwrap());
        assert!(!l(3).contained_in(&l(2)).unwrap());
        assert_eq!(l(2).union(&l(3)).unwrap(), l(6));
        assert!(l(2).intersect(&l(3)).unwrap().is_empty());
        assert!(l(0).is_whole());
    }

    #[test]
    fn spec_z_sets() {
        let a = SpecZSet::finite([2], false);
        let b = SpecZSet::finite([3], false);
        assert_eq!(a.union(&b), SpecZSet::finite([2, 3], false));
        let c = SpecZSet::empty().complement();
        assert!(c.is_cofinite() && c.contains_generic());
        assert!(SpecZSet::cofinite([], true).member(SpecZPoint::Generic));
        assert!(!SpecZSet::cofinite([5], false).member(SpecZPoint::Prime(5)));
        assert!(SpecZSet::cofinite([5], false).member(SpecZPoint::Prime(7)));
        assert!(a.is_subset(&SpecZSet::cofinite([3], false)));
    }

    #[test]
    fn spec_z_text_round_trip() {
        for s in ["{2,3}", "~{2,3}", "{}+generic", "~{}+generic", "{5}"] {
            assert_eq!(SpecZSet::parse(s).unwrap().to_string(), s);
        }
        let err = SpecZSet::parse("{4}").unwrap_err();
        assert!(err.is_parse());
    }
}
