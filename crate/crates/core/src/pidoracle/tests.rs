use std::collections::BTreeSet;

use num_integer::gcd;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn g(s: &str) -> FinAbGroup {
    FinAbGroup::parse(s).unwrap()
}

fn set(items: &[&str]) -> BTreeSet<FinAbGroup> {
    items.iter().map(|s| g(s)).collect()
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_groups(1, None), vec![FinAbGroup::trivial()]);
    let four: BTreeSet<FinAbGroup> = enumerate_groups(4, None).into_iter().collect();
    assert_eq!(four, set(&["0", "Z/2", "Z/3", "Z/4", "Z/2 + Z/2"]));
    let eight = enumerate_groups(8, None)
        .into_iter()
        .filter(|h| h.order() == 8)
        .count();
    assert_eq!(eight, 3);
    // Partition numbers: p(6) = 11 groups of order 64.
    assert_eq!(
        enumerate_groups(64, None)
            .iter()
            .filter(|h| h.order() == 64)
            .count(),
        11
    );
    assert!(enumerate_groups(64, Some(6))
        .iter()
        .all(|h| h.exponent_divides(6)));
}

#[test]
fn canonical_form() {
    assert_eq!(g("Z/6"), g("Z/3 + Z/2"));
    assert_eq!(g("Z/12 + Z/2").to_string(), "Z/2 + Z/4 + Z/3");
    assert_eq!(g("0").to_string(), "0");
    assert_eq!(g("Z/12").tensor_mod(4), g("Z/4"));
    assert_eq!(g("Z/3").tensor_mod(4), FinAbGroup::trivial());
    assert!(FinAbGroup::parse("Z/0").unwrap_err().is_parse());
}

/// Brute force: images of generators range over all target elements and
/// the relation `a_i x = 0` is checked coordinate by coordinate.
fn count_homs_brute(a: &FinAbGroup, b: &FinAbGroup) -> usize {
    let fb = b.factors();
    let mut total = 1usize;
    for &ai in a.factors() {
        let count = (0..b.order())
            .filter(|&x| {
                let mut r = x;
                fb.iter().all(|&bj| {
                    let d = r % bj;
                    r /= bj;
                    (ai * d) % bj == 0
                })
            })
            .count();
        total *= count;
    }
    total
}

#[test]
fn hom_counts() {
    assert_eq!(all_homs(&g("Z/2"), &g("Z/3")).len(), 1);
    assert_eq!(all_homs(&g("Z/4"), &g("Z/2")).len(), 2);
    for (a, b) in [
        ("Z/4 + Z/2", "Z/8"),
        ("Z/2 + Z/2", "Z/4 + Z/2"),
        ("Z/9", "Z/3 + Z/27"),
    ] {
        let (a, b) = (g(a), g(b));
        let expected: u64 = a
            .factors()
            .iter()
            .flat_map(|&x| b.factors().iter().map(move |&y| gcd(x, y)))
            .product();
        let homs = all_homs(&a, &b);
        assert_eq!(homs.len() as u64, expected);
        assert_eq!(homs.len(), count_homs_brute(&a, &b));
        let distinct: BTreeSet<Vec<Vec<u64>>> = homs.iter().map(|h| h.matrix().to_vec()).collect();
        assert_eq!(distinct.len(), homs.len());
    }
}

#[test]
fn kernel_and_cokernel_by_snf() {
    let z4 = g("Z/4");
    let two = Hom::scalar(&z4, 2);
    assert_eq!(cokernel_of(&two), g("Z/2"));
    assert_eq!(kernel_of(&two), g("Z/2"));
    assert_eq!(kernel_of(&Hom::identity(&z4)), FinAbGroup::trivial());
    assert_eq!(cokernel_of(&Hom::scalar(&z4, 0)), z4);
}

#[test]
fn profile_kernels_match_all_homs() {
    let oracle = Oracle::new(16, None).unwrap();
    for (a, b) in [
        ("Z/4", "Z/2 + Z/2"),
        ("Z/2 + Z/4", "Z/4"),
        ("Z/6", "Z/2 + Z/3"),
        ("Z/8", "Z/4 + Z/2"),
    ] {
        let (a, b) = (g(a), g(b));
        let homs = all_homs(&a, &b);
        let ks: BTreeSet<FinAbGroup> = homs.iter().map(kernel_of).collect();
        let cs: BTreeSet<FinAbGroup> = homs.iter().map(cokernel_of).collect();
        assert_eq!(oracle.kernels(&a, &b).unwrap(), ks, "kernels {a} -> {b}");
        assert_eq!(oracle.cokernels(&a, &b).unwrap(), cs, "cokernels {a} -> {b}");
    }
}

#[test]
fn subgroup_counts() {
    // (Z/2)^3 has 1 + 7 + 7 + 1 subgroups; Z/2 + Z/4 has 8.
    assert_eq!(subgroups_of(&g("Z/2 + Z/2 + Z/2")).unwrap().len(), 16);
    assert_eq!(subgroups_of(&g("Z/2 + Z/4")).unwrap().len(), 8);
    assert_eq!(subgroups_of(&g("Z/12")).unwrap().len(), 6);
}

#[test]
fn extension_examples() {
    let oracle = Oracle::new(64, None).unwrap();
    let z2 = g("Z/2");
    assert_eq!(
        oracle.all_extensions(&z2, &z2).unwrap(),
        set(&["Z/2 + Z/2", "Z/4"])
    );
    assert_eq!(
        oracle.all_extensions(&g("Z/2"), &g("Z/3")).unwrap(),
        set(&["Z/6"])
    );
    let a = g("Z/4 + Z/2");
    assert_eq!(
        oracle.all_extensions(&a, &FinAbGroup::trivial()).unwrap(),
        set(&["Z/4 + Z/2"])
    );
    let err = oracle.all_extensions(&g("Z/16"), &g("Z/8")).unwrap_err();
    assert_eq!(err.name(), "bound-exceeded");
}

#[test]
fn split_extension_always_appears() {
    let oracle = Oracle::new(32, None).unwrap();
    for (q, s) in [
        ("Z/2", "Z/4"),
        ("Z/3", "Z/3"),
        ("Z/2 + Z/2", "Z/2"),
        ("Z/4", "Z/8"),
    ] {
        let (q, s) = (g(q), g(s));
        let mut sum = q.factors().to_vec();
        sum.extend_from_slice(s.factors());
        let split = FinAbGroup::new(sum).unwrap();
        assert!(oracle.all_extensions(&q, &s).unwrap().contains(&split));
    }
}

#[test]
fn tower_from_z2() {
    let oracle = Oracle::new(16, None).unwrap();
    let r = oracle.closure_tower(&[g("Z/2")]).unwrap();
    assert!(r.stabilized && r.equal);
    assert_eq!(r.tower[0], set(&["0", "Z/2"]));
    assert!(r.tower[1].contains(&g("Z/4")));
    let two_groups: BTreeSet<FinAbGroup> = enumerate_groups(16, None)
        .into_iter()
        .filter(|h| h.primes().iter().all(|&p| p == 2))
        .collect();
    assert_eq!(r.closure(), &two_groups);
    assert!(oracle.verify_witnesses(&r).unwrap());
}

#[test]
fn tower_from_zero_and_z6() {
    let oracle = Oracle::new(64, None).unwrap();
    let r = oracle.closure_tower(&[FinAbGroup::trivial()]).unwrap();
    assert!(r.equal);
    assert_eq!(r.closure(), &set(&["0"]));
    let oracle = Oracle::new(12, None).unwrap();
    let r = oracle.closure_tower(&[g("Z/6")]).unwrap();
    assert!(r.equal);
    for h in ["Z/2", "Z/3", "Z/4", "Z/9", "Z/12"] {
        assert!(r.closure().contains(&g(h)), "{h}");
    }
    assert!(r.tower[0].contains(&g("Z/2")) && r.tower[0].contains(&g("Z/3")));
}

#[test]
fn modulus_reads_generators_mod_n() {
    let oracle = Oracle::new(64, Some(4)).unwrap();
    let r = oracle.closure_tower(&[g("Z/6")]).unwrap();
    assert_eq!(r.generators, vec![g("Z/2")]);
    assert!(r.equal);
    assert!(r.closure().iter().all(|h| h.exponent_divides(4)));
}

#[test]
fn snake_checks_on_first_level() {
    let oracle = Oracle::new(16, None).unwrap();
    let r = oracle.closure_tower(&[g("Z/2")]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let report = oracle.snake_closure_checks(&r.tower[1], 200, &mut rng);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    let report = oracle.snake_closure_checks(&r.tower[0], 50, &mut rng);
    assert!(report.violations.is_empty());
}

#[test]
fn bound_limits() {
    assert_eq!(Oracle::new(0, None).unwrap_err().name(), "bound-exceeded");
    assert_eq!(Oracle::new(512, None).unwrap_err().name(), "bound-exceeded");
    let oracle = Oracle::new(8, None).unwrap();
    assert_eq!(
        oracle.closure_tower(&[g("Z/16")]).unwrap_err().name(),
        "bound-exceeded"
    );
}
