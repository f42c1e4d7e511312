use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactarith::{is_prime, smith_normal_form, IntRing, Matrix};
use crate::freemod::FPModule;
use crate::text::{split_top_level, Cursor};

/// A finite abelian group as its multiset of prime-power cyclic factors,
/// sorted by prime and then by size. The zero group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

/// `(p, k)` with `n = p^k`, for `n > 1` a prime power.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Prime factorization as `(p, k)` pairs in increasing `p`.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        out.push((p, k));
    }
    out
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new() }
    }

    /// From prime-power factor orders in any order.
    pub fn new(mut factors: Vec<u64>) -> Result<Self> {
        for &f in &factors {
            if prime_power(f).is_none() {
                return Err(Error::DimensionMismatch(format!("{f} is not a prime power > 1")));
            }
        }
        factors.sort_by_key(|&f| (prime_power(f).map(|(p, _)| p), f));
        Ok(FinAbGroup { factors })
    }

    /// `Z/n_1 + ... + Z/n_k` for arbitrary positive `n_i`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut factors = Vec::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::DimensionMismatch("Z/0 is not finite".into()));
            }
            factors.extend(factorize(n).into_iter().map(|(p, k)| p.pow(k)));
        }
        FinAbGroup::new(factors)
    }

    pub fn cyclic(n: u64) -> Self {
        FinAbGroup::from_cyclic_orders(&[n]).expect("n > 0")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> BTreeSet<u64> {
        self.factors
            .iter()
            .filter_map(|&f| prime_power(f).map(|(p, _)| p))
            .collect()
    }

    /// `G / nG`, i.e. `G ⊗ Z/n`: each `Z/p^e` becomes `Z/p^min(e, v_p(n))`.
    pub fn tensor_mod(&self, n: u64) -> Self {
        let factors = self
            .factors
            .iter()
            .map(|&f| num_integer::gcd(f, n))
            .filter(|&f| f > 1)
            .collect();
        FinAbGroup::new(factors).expect("gcds of prime powers are prime powers")
    }

    /// Whether `n` kills the group.
    pub fn exponent_divides(&self, n: u64) -> bool {
        self.factors.iter().all(|&f| n.is_multiple_of(f))
    }

    /// The group presented by a module over `ZZ` or `ZZ/n`; `None` when
    /// the module is infinite.
    pub fn of_module(m: &FPModule<IntRing>) -> Option<Self> {
        let n = m.num_generators();
        let mut rel = m.relations().clone();
        let modulus = m.ring().modulus().clone();
        if !modulus.is_zero() && n > 0 {
            let mut scaled = Matrix::filled(n, n, BigInt::zero());
            for i in 0..n {
                scaled.set(i, i, modulus.clone());
            }
            rel = rel.hconcat(&scaled).expect("same rows");
        }
        let diag = smith_normal_form(&rel).diagonal();
        if diag.len() < n || diag.iter().any(Zero::is_zero) {
            return None;
        }
        let orders: Vec<u64> = diag.iter().map(|d| d.to_u64()).collect::<Option<_>>()?;
        FinAbGroup::from_cyclic_orders(&orders).ok()
    }

    /// Diagonal presentation over `ring`.
    pub fn to_module(&self, ring: &IntRing) -> FPModule<IntRing> {
        let n = self.factors.len();
        let mut rel = Matrix::filled(n, n, BigInt::zero());
        for (i, &f) in self.factors.iter().enumerate() {
            rel.set(i, i, BigInt::from(f));
        }
        FPModule::new(ring.clone(), rel)
    }

    /// `0`, or summands `Z/n` separated by `+` (any `n > 0`).
    pub fn parse(src: &str) -> Result<Self> {
        if src.trim() == "0" {
            return Ok(FinAbGroup::trivial());
        }
        let mut orders = Vec::new();
        for (offset, _) in split_top_level(src, '+') {
            let mut c = Cursor::starting_at(src, offset);
            if !c.eat('Z') {
                return Err(c.error("expected Z/n"));
            }
            c.expect('/')?;
            let at = c.offset();
            let n = c.expect_unsigned()?;
            let n = n
                .to_u64()
                .filter(|&n| n > 0)
                .ok_or_else(|| c.error_at(at, "order must be a positive machine integer"))?;
            orders.push(n);
            c.skip_ws();
            if let Some(ch) = c.rest().chars().next() {
                if ch != '+' {
                    return Err(c.error(format!("unexpected '{ch}'")));
                }
            }
        }
        FinAbGroup::from_cyclic_orders(&orders)
    }
}

impl Ord for FinAbGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for FinAbGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Partitions of `n` with parts at most `max`, parts non-increasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order at most `bound`, once each, sorted. With a
/// modulus, only groups killed by it (the finite `ZZ/n`-modules).
pub fn enumerate_groups(bound: u64, modulus: Option<u64>) -> Vec<FinAbGroup> {
    let mut out = Vec::new();
    for order in 1..=bound {
        let mut groups = vec![Vec::new()];
        for (p, k) in factorize(order) {
            let cap = match modulus {
                Some(n) => factorize(n)
                    .into_iter()
                    .find(|&(q, _)| q == p)
                    .map_or(0, |(_, e)| e),
                None => k,
            };
            let mut next = Vec::new();
            for g in &groups {
                for part in partitions(k, cap) {
                    let mut h: Vec<u64> = g.clone();
                    h.extend(part.iter().map(|&e| p.pow(e)));
                    next.push(h);
                }
            }
            groups = next;
        }
        out.extend(
            groups
                .into_iter()
                .map(|f| FinAbGroup::new(f).expect("prime powers")),
        );
    }
    debug_assert!(out.iter().all(|g| g
        .factors
        .iter()
        .all(|&f| prime_power(f).is_some_and(|(p, _)| is_prime(p)))));
    out.sort();
    out
}
