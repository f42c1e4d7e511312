use std::fmt;

use crate::error::Result;
use crate::exactarith::is_prime;
use crate::pidoracle::factorize;
use crate::spectrum::{SpecZPoint, SpecZSet};
use crate::text::{split_top_level, Cursor};

/// A summand of an abelian group described by a closed-form tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZSummand {
    Integers,
    Rationals,
    /// `Z_(p)`, the integers localized at `p`.
    Local(u64),
    /// `Z/p^k`.
    Cyclic {
        p: u64,
        k: u32,
    },
}

impl ZSummand {
    /// Primes `q` (and the generic point) where `k_q ⊗ M` or `M_(0)` is nonzero.
    pub fn support(&self) -> SpecZSet {
        match *self {
            ZSummand::Integers => SpecZSet::all(),
            ZSummand::Rationals => SpecZSet::finite([], true),
            ZSummand::Local(p) => SpecZSet::finite([p], true),
            ZSummand::Cyclic { p, .. } => SpecZSet::finite([p], false),
        }
    }
}

impl fmt::Display for ZSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ZSummand::Integers => write!(f, "Z"),
            ZSummand::Rationals => write!(f, "Q"),
            ZSummand::Local(p) => write!(f, "Z_({p})"),
            ZSummand::Cyclic { p, k: 1 } => write!(f, "Z/{p}"),
            ZSummand::Cyclic { p, k } => write!(f, "Z/{p}^{k}"),
        }
    }
}

/// A direct sum of tagged summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZModuleDescriptor {
    summands: Vec<ZSummand>,
}

impl ZModuleDescriptor {
    pub fn new(summands: Vec<ZSummand>) -> Self {
        ZModuleDescriptor { summands }
    }

    pub fn summands(&self) -> &[ZSummand] {
        &self.summands
    }

    pub fn support(&self) -> SpecZSet {
        self.summands
            .iter()
            .fold(SpecZSet::empty(), |acc, s| acc.union(&s.support()))
    }

    /// `Z + Q + Z_(3) + Z/2^3 + Z/12`; `0` is the zero group.
    pub fn parse(src: &str) -> Result<Self> {
        let mut summands = Vec::new();
        for (offset, part) in split_top_level(src, '+') {
            let mut c = Cursor::starting_at(src, offset);
            c.skip_ws();
            if part.trim() == "0" {
                c.eat('0');
                c.skip_ws();
                if c.offset() < offset + part.len() {
                    return Err(c.error("unexpected input after 0"));
                }
                continue;
            }
            let s = parse_summand(&mut c)?;
            c.skip_ws();
            if c.offset() < offset + part.len() {
                return Err(c.error("unexpected input in summand"));
            }
            summands.extend(s);
        }
        Ok(ZModuleDescriptor { summands })
    }
}

fn prime_at(c: &mut Cursor<'_>) -> Result<u64> {
    let at = c.offset();
    let n = c.expect_unsigned()?;
    u64::try_from(&n)
        .ok()
        .filter(|&p| is_prime(p))
        .ok_or_else(|| c.error_at(at, format!("{n} is not a prime")))
}

/// One summand; `Z/n` splits into its primary parts and `Z/1` is empty.
fn parse_summand(c: &mut Cursor<'_>) -> Result<Vec<ZSummand>> {
    if c.eat('Q') {
        return Ok(vec![ZSummand::Rationals]);
    }
    if !c.eat('Z') {
        return Err(c.error("expected Z, Q, Z_(p) or Z/p^k"));
    }
    if c.eat('_') {
        c.expect('(')?;
        let p = prime_at(c)?;
        c.expect(')')?;
        return Ok(vec![ZSummand::Local(p)]);
    }
    if c.eat('/') {
        let at = c.offset();
        let n = c.expect_unsigned()?;
        let base = u64::try_from(&n).map_err(|_| c.error_at(at, "modulus too large"))?;
        if c.eat('^') {
            if !is_prime(base) {
                return Err(c.error_at(at, format!("{base} is not a prime")));
            }
            let k = c.expect_usize()?;
            if k == 0 {
                return Err(c.error("exponent must be at least 1"));
            }
            return Ok(vec![ZSummand::Cyclic { p: base, k: k as u32 }]);
        }
        if base == 0 {
            return Err(c.error_at(at, "Z/0 is written Z"));
        }
        return Ok(factorize(base).into_iter().map(|(p, k)| ZSummand::Cyclic { p, k }).collect());
    }
    Ok(vec![ZSummand::Integers])
}

impl fmt::Display for ZModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(ZSummand::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The coproduct-closed wide subcategory generated by the residue fields
/// `k_p` for `p` in a set of points of `Spec ZZ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoproductWideSubcatZ {
    points: SpecZSet,
}

impl CoproductWideSubcatZ {
    pub fn new(points: SpecZSet) -> Self {
        CoproductWideSubcatZ { points }
    }

    pub fn points(&self) -> &SpecZSet {
        &self.points
    }

    /// Every summand's support lies in the point set.
    pub fn member(&self, m: &ZModuleDescriptor) -> bool {
        m.summands().iter().all(|s| s.support().is_subset(&self.points))
    }

    pub fn contains_point(&self, point: SpecZPoint) -> bool {
        self.points.member(point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member(m: &str, a: &str) -> bool {
        CoproductWideSubcatZ::new(SpecZSet::parse(a).unwrap()).member(&ZModuleDescriptor::parse(m).unwrap())
    }

    #[test]
    fn membership_table() {
        assert!(member("Q", "{}+generic"));
        assert!(!member("Z", "{}+generic"));
        assert!(member("Z/5", "{5}"));
        assert!(member("Z_(3)", "{3}+generic"));
        assert!(!member("Z_(3)", "{}+generic"));
        assert!(member("Z", "~{}+generic"));
        assert!(member("0", "{}"));
        assert!(member("Z/2^3 + Z/4 + Q", "{2}+generic"));
        assert!(!member("Z/9", "{2}"));
    }

    #[test]
    fn descriptor_text() {
        let d = ZModuleDescriptor::parse("Z + Q + Z_(7) + Z/8 + Z/3^2").unwrap();
        assert_eq!(d.to_string(), "Z + Q + Z_(7) + Z/2^3 + Z/3^2");
        assert_eq!(ZModuleDescriptor::parse("Z/12").unwrap().to_string(), "Z/2^2 + Z/3");
        assert_eq!(ZModuleDescriptor::parse("Z/1 + Q").unwrap().to_string(), "Q");
        assert!(ZModuleDescriptor::parse("Z/0").unwrap_err().is_parse());
        assert!(ZModuleDescriptor::parse("Z_(4)").unwrap_err().is_parse());
    }

    #[test]
    fn integers_reach_every_residue_field() {
        // Z/qZ = k_q ⊗ Z is nonzero for every prime q, so Z needs all of them.
        let z = ZSummand::Integers.support();
        for q in [2u64, 3, 5, 7, 11, 101] {
            assert!(z.member(SpecZPoint::Prime(q)));
        }
        assert!(z.member(SpecZPoint::Generic));
    }
}
