use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::group::{enumerate_groups, FinAbGroup};
use super::hom::{cokernel_of, kernel_of, Hom};
use super::subgroups::{subgroup_profile, MAX_ORDER};
use crate::error::{Error, Result};

/// A bounded universe of finite abelian groups (optionally the finite
/// `ZZ/n`-modules) together with kernel, cokernel and extension queries.
#[derive(Clone, Debug)]
pub struct Oracle {
    bound: u64,
    modulus: Option<u64>,
    universe: Vec<FinAbGroup>,
}

/// `group` sits in `0 -> sub -> group -> quotient -> 0` with both ends in
/// level `level - 1` of the tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionWitness {
    pub group: FinAbGroup,
    pub sub: FinAbGroup,
    pub quotient: FinAbGroup,
    pub level: usize,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub generators: Vec<FinAbGroup>,
    pub bound: u64,
    pub modulus: Option<u64>,
    /// `D_0 ⊆ D_1 ⊆ ...`, ending at the first repeated level.
    pub tower: Vec<BTreeSet<FinAbGroup>>,
    pub stabilized: bool,
    pub predicted: BTreeSet<FinAbGroup>,
    pub equal: bool,
    /// Predicted but never reached.
    pub missing: Vec<FinAbGroup>,
    /// Reached but not predicted.
    pub unexpected: Vec<FinAbGroup>,
    pub witnesses: Vec<ExtensionWitness>,
}

impl ClosureReport {
    pub fn closure(&self) -> &BTreeSet<FinAbGroup> {
        self.tower.last().expect("tower starts with D_0")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeViolation {
    pub map: Hom,
    pub kernel: FinAbGroup,
    pub cokernel: FinAbGroup,
}

#[derive(Clone, Debug)]
pub struct SnakeReport {
    pub samples: usize,
    pub violations: Vec<SnakeViolation>,
}

impl Oracle {
    /// All groups of order at most `bound` (killed by `modulus` if given).
    pub fn new(bound: u64, modulus: Option<u64>) -> Result<Self> {
        if bound == 0 || bound > MAX_ORDER {
            return Err(Error::BoundExceeded(format!(
                "bound must lie in 1..={MAX_ORDER}, got {bound}"
            )));
        }
        if modulus == Some(0) {
            return Err(Error::UnsupportedRing(
                "the oracle needs a nonzero modulus".into(),
            ));
        }
        Ok(Oracle {
            bound,
            modulus,
            universe: enumerate_groups(bound, modulus),
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn universe(&self) -> &[FinAbGroup] {
        &self.universe
    }

    /// The group a generator literal denotes in this universe: `G ⊗ Z/n`.
    pub fn normalize(&self, g: &FinAbGroup) -> FinAbGroup {
        match self.modulus {
            Some(n) => g.tensor_mod(n),
            None => g.clone(),
        }
    }

    fn subgroup_types(g: &FinAbGroup) -> Result<BTreeSet<FinAbGroup>> {
        Ok(subgroup_profile(g)?.iter().map(|(h, _)| h.clone()).collect())
    }

    /// Isomorphism types of kernels of maps `a -> b`: `K ≤ a` with `a/K`
    /// embedding in `b`.
    pub fn kernels(&self, a: &FinAbGroup, b: &FinAbGroup) -> Result<BTreeSet<FinAbGroup>> {
        let subs_b = Self::subgroup_types(b)?;
        Ok(subgroup_profile(a)?
            .iter()
            .filter(|(_, q)| subs_b.contains(q))
            .map(|(k, _)| k.clone())
            .collect())
    }

    /// Isomorphism types of cokernels of maps `a -> b`: `b/H` with `H` a
    /// quotient (equivalently a subgroup type) of `a`.
    pub fn cokernels(&self, a: &FinAbGroup, b: &FinAbGroup) -> Result<BTreeSet<FinAbGroup>> {
        let subs_a = Self::subgroup_types(a)?;
        Ok(subgroup_profile(b)?
            .iter()
            .filter(|(h, _)| subs_a.contains(h))
            .map(|(_, q)| q.clone())
            .collect())
    }

    /// Middle terms `E` of `0 -> s -> E -> q -> 0` within the universe.
    pub fn all_extensions(&self, q: &FinAbGroup, s: &FinAbGroup) -> Result<BTreeSet<FinAbGroup>> {
        let order = q.order() * s.order();
        if order > self.bound {
            return Err(Error::BoundExceeded(format!(
                "extensions of order {order} exceed the bound {}",
                self.bound
            )));
        }
        let mut out = BTreeSet::new();
        for e in self.universe.iter().filter(|e| e.order() == order) {
            if subgroup_profile(e)?.iter().any(|(h, k)| h == s && k == q) {
                out.insert(e.clone());
            }
        }
        Ok(out)
    }

    /// Closure of `set` under kernels and cokernels of all maps between members.
    fn kernel_cokernel_closure(&self, set: &mut BTreeSet<FinAbGroup>) -> Result<()> {
        loop {
            let members: Vec<FinAbGroup> = set.iter().cloned().collect();
            let mut added = false;
            for a in &members {
                for b in &members {
                    for g in self.kernels(a, b)?.into_iter().chain(self.cokernels(a, b)?) {
                        added |= set.insert(g);
                    }
                }
            }
            if !added {
                return Ok(());
            }
        }
    }

    /// `D_0` is the kernel/cokernel closure of the generators (and `0`);
    /// `D_n` is every extension of two members of `D_{n-1}`. Iterates to the
    /// first repeat and compares with the groups whose order has only the
    /// generators' primes.
    pub fn closure_tower(&self, generators: &[FinAbGroup]) -> Result<ClosureReport> {
        let gens: Vec<FinAbGroup> = generators.iter().map(|g| self.normalize(g)).collect();
        if let Some(g) = gens.iter().find(|g| g.order() > self.bound) {
            return Err(Error::BoundExceeded(format!(
                "generator {g} exceeds the bound {}",
                self.bound
            )));
        }
        let mut d0: BTreeSet<FinAbGroup> = gens.iter().cloned().collect();
        d0.insert(FinAbGroup::trivial());
        self.kernel_cokernel_closure(&mut d0)?;

        let mut tower = vec![d0];
        let mut witnesses = Vec::new();
        let mut stabilized = false;
        for level in 1..=self.universe.len() + 1 {
            let prev = tower.last().expect("nonempty");
            let mut next = prev.clone();
            for e in &self.universe {
                if prev.contains(e) {
                    continue;
                }
                let profile = subgroup_profile(e)?;
                if let Some((h, q)) = profile.iter().find(|(h, q)| prev.contains(h) && prev.contains(q)) {
                    next.insert(e.clone());
                    witnesses.push(ExtensionWitness {
                        group: e.clone(),
                        sub: h.clone(),
                        quotient: q.clone(),
                        level,
                    });
                }
            }
            if next == *prev {
                stabilized = true;
                break;
            }
            tower.push(next);
        }

        let primes: BTreeSet<u64> = gens.iter().flat_map(FinAbGroup::primes).collect();
        let predicted: BTreeSet<FinAbGroup> = self
            .universe
            .iter()
            .filter(|g| g.primes().is_subset(&primes))
            .cloned()
            .collect();
        let reached = tower.last().expect("nonempty");
        let missing: Vec<FinAbGroup> = predicted.difference(reached).cloned().collect();
        let unexpected: Vec<FinAbGroup> = reached.difference(&predicted).cloned().collect();
        Ok(ClosureReport {
            generators: gens,
            bound: self.bound,
            modulus: self.modulus,
            equal: missing.is_empty() && unexpected.is_empty(),
            tower,
            stabilized,
            predicted,
            missing,
            unexpected,
            witnesses,
        })
    }

    /// Re-checks every stored extension witness against a fresh subgroup scan.
    pub fn verify_witnesses(&self, report: &ClosureReport) -> Result<bool> {
        for w in &report.witnesses {
            let prev = &report.tower[w.level - 1];
            if !prev.contains(&w.sub) || !prev.contains(&w.quotient) {
                return Ok(false);
            }
            let ok = subgroup_profile(&w.group)?
                .iter()
                .any(|(h, q)| *h == w.sub && *q == w.quotient);
            if !ok || !report.tower[w.level].contains(&w.group) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Samples random maps between members of `level` and checks that their
    /// kernels and cokernels (computed by Smith normal form) stay inside.
    pub fn snake_closure_checks(
        &self,
        level: &BTreeSet<FinAbGroup>,
        samples: usize,
        rng: &mut impl Rng,
    ) -> SnakeReport {
        let members: Vec<&FinAbGroup> = level.iter().collect();
        let mut violations = Vec::new();
        for _ in 0..samples {
            let a = members.choose(rng).expect("levels contain 0");
            let b = members.choose(rng).expect("levels contain 0");
            let f = Hom::random(a, b, rng);
            let (k, c) = (kernel_of(&f), cokernel_of(&f));
            if !level.contains(&k) || !level.contains(&c) {
                violations.push(SnakeViolation {
                    map: f,
                    kernel: k,
                    cokernel: c,
                });
            }
        }
        SnakeReport { samples, violations }
    }
}
