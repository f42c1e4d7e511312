use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use super::group::{prime_power, FinAbGroup};
use crate::error::{Error, Result};

/// Largest group order the subgroup scan accepts.
pub const MAX_ORDER: u64 = 256;

type Bits = [u64; 4];

/// Elements of `Z/m_1 x ... x Z/m_r` indexed in mixed radix.
struct Table {
    moduli: Vec<u64>,
    order: usize,
    add: Vec<u16>,
    elem_order: Vec<u64>,
}

impl Table {
    fn new(g: &FinAbGroup) -> Table {
        let moduli = g.factors().to_vec();
        let order = g.order() as usize;
        let digits: Vec<Vec<u64>> = (0..order).map(|e| decode(&moduli, e)).collect();
        let mut add = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let sum: Vec<u64> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .zip(&moduli)
                    .map(|((x, y), m)| (x + y) % m)
                    .collect();
                add[a * order + b] = encode(&moduli, &sum) as u16;
            }
        }
        let mut t = Table {
            moduli,
            order,
            add,
            elem_order: Vec::new(),
        };
        t.elem_order = (0..order).map(|e| t.order_of(e)).collect();
        t
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    fn order_of(&self, e: usize) -> u64 {
        let mut k = 1;
        let mut cur = e;
        while cur != 0 {
            cur = self.add(cur, e);
            k += 1;
        }
        k
    }

    fn times(&self, k: u64, e: usize) -> usize {
        let d = decode(&self.moduli, e);
        let v: Vec<u64> = d
            .iter()
            .zip(&self.moduli)
            .map(|(x, m)| (x * (k % m)) % m)
            .collect();
        encode(&self.moduli, &v)
    }
}

fn decode(moduli: &[u64], mut e: usize) -> Vec<u64> {
    moduli
        .iter()
        .map(|&m| {
            let d = e as u64 % m;
            e /= m as usize;
            d
        })
        .collect()
}

fn encode(moduli: &[u64], digits: &[u64]) -> usize {
    let mut e = 0usize;
    for (d, m) in digits.iter().zip(moduli).rev() {
        e = e * *m as usize + *d as usize;
    }
    e
}

fn has(b: &Bits, e: usize) -> bool {
    b[e / 64] >> (e % 64) & 1 == 1
}

fn set(b: &mut Bits, e: usize) {
    b[e / 64] |= 1 << (e % 64);
}

fn members(b: &Bits, order: usize) -> Vec<usize> {
    (0..order).filter(|&e| has(b, e)).collect()
}

/// `<S, g>` for a subgroup `S`.
fn adjoin(t: &Table, s: &Bits, g: usize) -> Bits {
    let base = members(s, t.order);
    let mut out = *s;
    let mut coset = g;
    while !has(s, coset) {
        for &h in &base {
            set(&mut out, t.add(h, coset));
        }
        coset = t.add(coset, g);
    }
    out
}

fn check_order(g: &FinAbGroup) -> Result<()> {
    if g.order() > MAX_ORDER {
        return Err(Error::BoundExceeded(format!(
            "subgroup scan supports orders up to {MAX_ORDER}, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Every subgroup of `g`, as sorted element-index lists, in discovery order.
pub fn subgroups_of(g: &FinAbGroup) -> Result<Vec<Vec<usize>>> {
    check_order(g)?;
    let t = Table::new(g);
    Ok(scan(&t).iter().map(|b| members(b, t.order)).collect())
}

fn scan(t: &Table) -> Vec<Bits> {
    let mut zero = [0u64; 4];
    set(&mut zero, 0);
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(zero);
    queue.push_back(zero);
    while let Some(s) = queue.pop_front() {
        out.push(s);
        for g in 0..t.order {
            if has(&s, g) {
                continue;
            }
            let bigger = adjoin(t, &s, g);
            if seen.insert(bigger) {
                queue.push_back(bigger);
            }
        }
    }
    out
}

/// The group with `log_p |G[p^k]| = c[k]` for each prime.
fn type_from_counts(counts: &[(u64, Vec<u32>)]) -> FinAbGroup {
    let mut factors = Vec::new();
    for (p, c) in counts {
        // at_least[k] = number of cyclic factors of exponent >= k.
        let at_least: Vec<u32> = (1..c.len()).map(|k| c[k] - c[k - 1]).collect();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                factors.push(p.pow(k as u32 + 1));
            }
        }
    }
    FinAbGroup::new(factors).expect("prime powers")
}

fn log_p(p: u64, mut n: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// Isomorphism types of `(H, G/H)` over all subgroups `H`, deduplicated
/// and sorted.
fn profile_uncached(g: &FinAbGroup) -> Vec<(FinAbGroup, FinAbGroup)> {
    let t = Table::new(g);
    let mut exps: Vec<(u64, u32)> = Vec::new();
    for &f in g.factors() {
        let (p, k) = prime_power(f).expect("prime power");
        match exps.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e = (*e).max(k),
            None => exps.push((p, k)),
        }
    }
    let mut out = BTreeSet::new();
    for s in scan(&t) {
        let elems = members(&s, t.order);
        let size = elems.len() as u64;
        let mut sub_counts = Vec::new();
        let mut quo_counts = Vec::new();
        for &(p, e) in &exps {
            let mut sc = vec![0u32];
            let mut qc = vec![0u32];
            for k in 1..=e {
                let pk = p.pow(k);
                let killed = elems.iter().filter(|&&h| pk % t.elem_order[h] == 0).count() as u64;
                sc.push(log_p(p, killed));
                let into = (0..t.order).filter(|&x| has(&s, t.times(pk, x))).count() as u64;
                qc.push(log_p(p, into / size));
            }
            sub_counts.push((p, sc));
            quo_counts.push((p, qc));
        }
        out.insert((type_from_counts(&sub_counts), type_from_counts(&quo_counts)));
    }
    out.into_iter().collect()
}

type ProfileCache = Mutex<HashMap<FinAbGroup, Arc<Vec<(FinAbGroup, FinAbGroup)>>>>;

/// `(H, G/H)` types over all subgroups, memoized process-wide.
pub fn subgroup_profile(g: &FinAbGroup) -> Result<Arc<Vec<(FinAbGroup, FinAbGroup)>>> {
    check_order(g)?;
    static CACHE: OnceLock<ProfileCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(g) {
        return Ok(p.clone());
    }
    let p = Arc::new(profile_uncached(g));
    cache.lock().expect("cache lock").insert(g.clone(), p.clone());
    Ok(p)
}
