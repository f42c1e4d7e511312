//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use widecat::freemod::ModuleMap;
use widecat::pidoracle::{Hom, Oracle};
use widecat::spectrum::SpecZPoint;
use widecat::{
    BaseRing, ClosedLocus, CoproductWideSubcatZ, Error, FPModule, Field, FinAbGroup, FreeComplex, IntRing,
    Matrix, MonomialOrder, Poly, PolyRing, Scalar, SpecZSet, ThickSubcat, WideSubcat, ZModuleDescriptor,
};

type Outcome = std::result::Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn fail(e: Error) -> String {
    format!("unexpected error: {e}")
}

fn qq(vars: &[&str]) -> PolyRing {
    PolyRing::rationals(vars)
}

fn poly(r: &PolyRing, s: &str) -> Poly {
    widecat::polyring::parse_poly(r, s).expect("test literal")
}

fn polys(r: &PolyRing, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|p| poly(r, p)).collect()
}

// ---------------------------------------------------------------- 1

fn primes_of(mut k: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while k > 1 {
        if k.is_multiple_of(p) {
            out.insert(p);
            while k.is_multiple_of(p) {
                k /= p;
            }
        }
        p += 1;
    }
    out
}

/// Independent prediction: the groups whose primes all divide some
/// generator read over ZZ/n, i.e. `gcd(order, n)` for a cyclic generator.
fn predicted(universe: &[FinAbGroup], gens: &[FinAbGroup], n: u64) -> BTreeSet<FinAbGroup> {
    let primes: BTreeSet<u64> = gens
        .iter()
        .flat_map(|g| primes_of(num_integer::gcd(g.order(), n)))
        .collect();
    universe
        .iter()
        .filter(|g| primes_of(g.order()).is_subset(&primes))
        .cloned()
        .collect()
}

fn criterion_1() -> Outcome {
    let pool = [2u64, 3, 4, 6];
    let mut runs = 0;
    for n in [4u64, 6, 8, 12, 30] {
        let o = Oracle::new(64, Some(n)).map_err(fail)?;
        for mask in 1u32..16 {
            let gens: Vec<FinAbGroup> = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| FinAbGroup::cyclic(pool[i]))
                .collect();
            let rep = o.closure_tower(&gens).map_err(fail)?;
            let expect = predicted(o.universe(), &gens, n);
            let names = || gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
            check(rep.stabilized, || {
                format!("n={n} gens={} did not stabilize", names())
            })?;
            check(rep.equal, || format!("n={n} gens={} equal=false", names()))?;
            check(rep.closure() == &expect, || {
                format!(
                    "n={n} gens={} closure differs from the prime-support prediction",
                    names()
                )
            })?;
            check(o.verify_witnesses(&rep).map_err(fail)?, || {
                format!("n={n} gens={} has an invalid extension witness", names())
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} towers equal to prediction"))
}

// ---------------------------------------------------------------- 2

fn int_map(ring: &IntRing, f: &Hom) -> ModuleMap<IntRing> {
    let rows = f.target().factors().len();
    let cols = f.source().factors().len();
    let mut m = Matrix::filled(rows, cols, BigInt::from(0));
    for (j, row) in f.matrix().iter().enumerate() {
        for (i, &v) in row.iter().enumerate() {
            m.set(j, i, ring.canon(&BigInt::from(v)));
        }
    }
    ModuleMap::new(f.source().to_module(ring), f.target().to_module(ring), m).expect("admissible map")
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let moduli = [4u64, 6, 8, 12, 30];
    let oracles: Vec<Oracle> = moduli
        .iter()
        .map(|&n| Oracle::new(64, Some(n)).unwrap())
        .collect();
    let mut violations = 0;
    let mut nontrivial = 0;
    for _ in 0..1000 {
        let k = rng.gen_range(0..moduli.len());
        let (n, o) = (moduli[k], &oracles[k]);
        let ring = IntRing::modulo(n);
        let uni = o.universe();
        let ngens = rng.gen_range(1..=2);
        let gens: Vec<FPModule<IntRing>> = (0..ngens)
            .map(|_| uni.choose(&mut rng).unwrap().to_module(&ring))
            .collect();
        let w = WideSubcat::generated_by(ring.clone(), gens).map_err(fail)?;
        let members: Vec<&FinAbGroup> = uni
            .iter()
            .filter(|g| w.member(&g.to_module(&ring)).unwrap())
            .collect();
        let m = *members.choose(&mut rng).expect("0 is a member");
        let target = uni.choose(&mut rng).unwrap();
        let f = int_map(&ring, &Hom::random(m, target, &mut rng));
        let ker = f.kernel();
        if !w.member(&ker).map_err(fail)? {
            violations += 1;
        }
        // A map into M for the cokernel side.
        let source = uni.choose(&mut rng).unwrap();
        let g = int_map(&ring, &Hom::random(source, m, &mut rng));
        let coker = g.cokernel();
        if !w.member(&coker).map_err(fail)? {
            violations += 1;
        }
        if !ker.is_zero() || !coker.is_zero() {
            nontrivial += 1;
        }
    }
    check(violations == 0, || format!("{violations} violations"))?;
    Ok(format!(
        "1000 instances, {nontrivial} with a nonzero kernel or cokernel, 0 violations"
    ))
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Outcome {
    let r = qq(&["x", "y"]);
    let pool: Vec<Vec<Poly>> = vec![
        polys(&r, &["x"]),
        polys(&r, &["y"]),
        polys(&r, &["x", "y"]),
        polys(&r, &["x^2"]),
        polys(&r, &["x*y"]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    for _ in 0..200 {
        let picks: Vec<&Vec<Poly>> = pool.iter().filter(|_| rng.gen_bool(0.4)).collect();
        let mods = picks.iter().map(|g| FPModule::cyclic(r.clone(), g)).collect();
        let w = WideSubcat::generated_by(r.clone(), mods).map_err(fail)?;
        if !WideSubcat::g_map(&w.f_map()).same_as(&w).map_err(fail)? {
            bad += 1;
        }
        // Thick side: Koszul complexes, shifted, plus presentation complexes.
        let picks: Vec<&Vec<Poly>> = pool.iter().filter(|_| rng.gen_bool(0.4)).collect();
        let mut xs = Vec::new();
        for g in picks {
            let x = if rng.gen_bool(0.5) {
                FreeComplex::koszul(r.clone(), g)
            } else {
                FreeComplex::presentation_complex(&FPModule::cyclic(r.clone(), g))
            };
            xs.push(x.shift(rng.gen_range(-1..=1)));
        }
        let t = ThickSubcat::generated_by(r.clone(), xs).map_err(fail)?;
        let back = WideSubcat::g_map(&t).f_map();
        if !back.datum().same_locus(t.datum()).map_err(fail)? {
            bad += 1;
        }
    }
    check(bad == 0, || format!("{bad} roundtrip failures"))?;
    Ok("200 wide and 200 thick roundtrips".into())
}

// ---------------------------------------------------------------- 4

fn criterion_4() -> Outcome {
    let r = qq(&["x", "y"]);
    let pool = [
        "x",
        "y",
        "x^2",
        "x*y",
        "x + y",
        "x - 1",
        "y - x^2",
        "x*(x - 1)",
        "x - 2",
        "x + 1",
        "x - 3",
        "x + 2",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut distinct = Vec::new();
    for a_src in [&["y"][..], &["y^2"], &["x", "y"]] {
        let a = polys(&r, a_src);
        let q = r.quotient(&a);
        let random_wide = |rng: &mut ChaCha8Rng| {
            let mods: Vec<FPModule<PolyRing>> = pool
                .iter()
                .filter(|_| rng.gen_bool(0.3))
                .map(|g| FPModule::cyclic(q.clone(), &[poly(&q, g)]))
                .collect();
            WideSubcat::generated_by(q.clone(), mods)
        };
        for _ in 0..50 {
            let w = random_wide(&mut rng).map_err(fail)?;
            let vu = w.inflate_u().and_then(|u| u.restrict_v(&a)).map_err(fail)?;
            check(vu.same_as(&w).map_err(fail)?, || {
                format!("v(u(W)) != W over {} for datum {}", q, w.datum())
            })?;
        }
        // A 20-element lattice closed under join and meet where possible.
        let mut lattice: Vec<WideSubcat<PolyRing>> =
            vec![WideSubcat::zero(q.clone()), WideSubcat::everything(q.clone())];
        let mut attempts = 0;
        while lattice.len() < 20 && attempts < 2000 {
            attempts += 1;
            let cand = match rng.gen_range(0..3) {
                0 => random_wide(&mut rng).map_err(fail)?,
                1 => {
                    let a = lattice.choose(&mut rng).unwrap();
                    let b = lattice.choose(&mut rng).unwrap();
                    a.join(b).map_err(fail)?
                }
                _ => {
                    let a = lattice.choose(&mut rng).unwrap();
                    let b = lattice.choose(&mut rng).unwrap();
                    a.meet(b).map_err(fail)?
                }
            };
            let mut fresh = true;
            for l in &lattice {
                if l.same_as(&cand).map_err(fail)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                lattice.push(cand);
            }
        }
        // Only two loci exist over a point; pad with repeats to 20 data.
        let unique = lattice.len();
        let mut k = 0;
        while lattice.len() < 20 {
            lattice.push(lattice[k % unique].clone());
            k += 1;
        }
        let us: Vec<WideSubcat<PolyRing>> = lattice
            .iter()
            .map(|w| w.inflate_u())
            .collect::<widecat::Result<_>>()
            .map_err(fail)?;
        for i in 0..20 {
            for j in 0..20 {
                let same = lattice[i].same_as(&lattice[j]).map_err(fail)?;
                let same_u = us[i].same_as(&us[j]).map_err(fail)?;
                check(same == same_u, || {
                    format!(
                        "u not injective over {q}: {} vs {}",
                        lattice[i].datum(),
                        lattice[j].datum()
                    )
                })?;
            }
        }
        distinct.push(format!("{}:{}", a_src.join(","), unique));
    }
    Ok(format!(
        "150 roundtrips; distinct lattice sizes {}",
        distinct.join(" ")
    ))
}

// ---------------------------------------------------------------- 5

fn random_homogeneous(r: &PolyRing, degree: u32, rng: &mut impl Rng) -> Poly {
    let n = r.nvars();
    let mut acc = r.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        acc = r.add(&acc, &r.monomial(r.field().from_i64(c), &exps));
    }
    acc
}

fn mat_mul(r: &PolyRing, a: &Matrix<Poly>, b: &Matrix<Poly>) -> Matrix<Poly> {
    let mut out = Matrix::filled(a.rows(), b.cols(), r.zero());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = r.zero();
            for k in 0..a.cols() {
                s = r.add(&s, &r.mul(a.get(i, k), b.get(k, j)));
            }
            out.set(i, j, s);
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rings = [qq(&["x"]), qq(&["x", "y"]), qq(&["x", "y", "z"])];
    let mut max_pd = [0usize; 3];
    for i in 0..30 {
        let k = i % 3;
        let r = &rings[k];
        let gens: Vec<Poly> = (0..rng.gen_range(1..=3))
            .map(|_| random_homogeneous(r, rng.gen_range(1..=2), &mut rng))
            .collect();
        let m = FPModule::cyclic(r.clone(), &gens)
            .graded_standard()
            .map_err(fail)?;
        let res = m.minimal_free_resolution(16).map_err(fail)?;
        check(res.length() <= r.nvars(), || {
            format!("pd {} > {} for R/({:?})", res.length(), r.nvars(), gens)
        })?;
        for w in res.maps().windows(2) {
            let dd = mat_mul(r, &w[0], &w[1]);
            check(dd.entries().iter().all(Poly::is_zero), || "d∘d != 0".to_string())?;
        }
        max_pd[k] = max_pd[k].max(res.length());
    }
    let f2 = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
    let dual = f2.quotient(&polys(&f2, &["x^2"]));
    let k = FPModule::cyclic(dual.clone(), &[dual.var(0)])
        .graded_standard()
        .map_err(fail)?;
    match k.minimal_free_resolution(10) {
        Err(Error::PdBoundExceeded { cap: 10 }) => {}
        other => {
            return Err(format!(
                "k over F2[x]/(x^2): expected pd-bound-exceeded, got {other:?}"
            ))
        }
    }
    Ok(format!(
        "30 modules, max pd per ring {max_pd:?}; dual numbers hit the cap"
    ))
}

// ---------------------------------------------------------------- 6

fn random_graded_module(r: &PolyRing, rng: &mut impl Rng) -> FPModule<PolyRing> {
    if rng.gen_bool(0.5) {
        let gens: Vec<Poly> = (0..rng.gen_range(1..=2))
            .map(|_| random_homogeneous(r, rng.gen_range(1..=2), rng))
            .collect();
        return FPModule::cyclic(r.clone(), &gens).graded_standard().unwrap();
    }
    let cols = rng.gen_range(1..=3);
    let mut a = Matrix::filled(2, cols, r.zero());
    for j in 0..cols {
        let d = rng.gen_range(1..=2);
        for i in 0..2 {
            if rng.gen_bool(0.7) {
                a.set(i, j, random_homogeneous(r, d, rng));
            }
        }
    }
    FPModule::new(r.clone(), a).graded(vec![0, 0]).unwrap()
}

fn criterion_6() -> Outcome {
    let r = qq(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let m = random_graded_module(&r, &mut rng);
        let ann = m.annihilator();
        let p = FreeComplex::presentation_complex(&m);
        check(p.homology(0).annihilator() == ann, || {
            "presentation H0 annihilator differs".into()
        })?;
        let x = FreeComplex::perfectize(&m, 16).map_err(fail)?;
        check(x.homology(0).annihilator() == ann, || {
            "perfectized H0 annihilator differs".into()
        })?;
        for n in 1..=x.high() {
            check(x.homology(n).is_zero(), || format!("perfectized H{n} is nonzero"))?;
        }
    }
    let k = FreeComplex::koszul(r.clone(), &polys(&r, &["x", "y"]));
    let xy = r.ideal(&polys(&r, &["x", "y"]));
    check(k.homology(0).annihilator() == xy, || {
        "Koszul H0 is not R/(x,y)".into()
    })?;
    check(k.homology(0).num_generators() == 1, || {
        "Koszul H0 is not cyclic".into()
    })?;
    check(k.homology(1).is_zero() && k.homology(2).is_zero(), || {
        "Koszul H1 or H2 nonzero".into()
    })?;
    Ok("50 modules; Koszul(x, y) resolves R/(x, y)".into())
}

// ---------------------------------------------------------------- 7

fn criterion_7() -> Outcome {
    let table: [(&str, SpecZSet, bool); 5] = [
        ("Q", SpecZSet::finite([], true), true),
        ("Z", SpecZSet::finite([], true), false),
        ("Z/5", SpecZSet::finite([5], false), true),
        ("Z_(5)", SpecZSet::finite([5], true), true),
        ("Z_(5)", SpecZSet::finite([], true), false),
    ];
    for (m, set, expect) in table {
        let d = ZModuleDescriptor::parse(m).map_err(fail)?;
        let got = CoproductWideSubcatZ::new(set.clone()).member(&d);
        check(got == expect, || {
            format!("{m} in alpha({set}): got {got}, expected {expect}")
        })?;
    }
    // Every prime, not just one sample.
    for p in [2u64, 3, 7, 11, 101] {
        let w = CoproductWideSubcatZ::new(SpecZSet::finite([p], false));
        check(
            w.contains_point(SpecZPoint::Prime(p)) && !w.contains_point(SpecZPoint::Generic),
            || format!("points of alpha({{{p}}})"),
        )?;
        let d = ZModuleDescriptor::parse(&format!("Z/{p}")).map_err(fail)?;
        check(w.member(&d), || format!("Z/{p} not in alpha({{{p}}})"))?;
    }
    Ok("5 table rows match".into())
}

// ---------------------------------------------------------------- 8

fn eval(r: &PolyRing, f: &Poly, pt: &[i64]) -> Scalar {
    let field = r.field();
    let mut s = field.zero();
    for (m, c) in f.terms() {
        let mut t = c.clone();
        for (e, &v) in m.exponents().iter().zip(pt) {
            for _ in 0..*e {
                t = t.mul_ref(&field.from_i64(v));
            }
        }
        s = s.add_ref(&t);
    }
    s
}

fn on_locus(l: &ClosedLocus<PolyRing>, pt: &[i64]) -> bool {
    l.generators().iter().all(|g| eval(l.ring(), g, pt).is_zero())
}

fn criterion_8() -> Outcome {
    let r = qq(&["x", "y"]);
    let pool = [
        "x",
        "y",
        "x - 1",
        "y - 2",
        "x - y",
        "x + y",
        "x*y",
        "x^2 - y",
        "x^2",
        "y*(x - 1)",
        "x^2 + y^2",
        "1",
        "0",
    ];
    let grid: Vec<[i64; 2]> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| [a, b])).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut random_locus = || {
        let k = rng.gen_range(1..=2);
        let gens: Vec<Poly> = (0..k).map(|_| poly(&r, pool.choose(&mut rng).unwrap())).collect();
        ClosedLocus::of_elements(r.clone(), &gens)
    };
    let mut bad = 0;
    for _ in 0..500 {
        let (a, b, c) = (random_locus(), random_locus(), random_locus());
        let u = |x: &ClosedLocus<PolyRing>, y: &ClosedLocus<PolyRing>| x.union(y).unwrap();
        let i = |x: &ClosedLocus<PolyRing>, y: &ClosedLocus<PolyRing>| x.intersect(y).unwrap();
        let laws = [
            u(&a, &a) == a,
            i(&a, &a) == a,
            u(&a, &i(&a, &b)) == a,
            i(&a, &u(&a, &b)) == a,
            i(&a, &u(&b, &c)) == u(&i(&a, &b), &i(&a, &c)),
            u(&a, &i(&b, &c)) == i(&u(&a, &b), &u(&a, &c)),
            a.contained_in(&u(&a, &b)).unwrap(),
            i(&a, &b).contained_in(&a).unwrap(),
            a.contained_in(&b).unwrap() == (u(&a, &b) == b),
            a.contained_in(&b).unwrap() == (i(&a, &b) == a),
        ];
        bad += laws.iter().filter(|ok| !**ok).count();
        // Independent check on rational points.
        let (ab_u, ab_i) = (u(&a, &b), i(&a, &b));
        for pt in &grid {
            let (pa, pb) = (on_locus(&a, pt), on_locus(&b, pt));
            if on_locus(&ab_u, pt) != (pa || pb) || on_locus(&ab_i, pt) != (pa && pb) {
                bad += 1;
            }
        }
        if a.contained_in(&b).unwrap() && grid.iter().any(|pt| on_locus(&a, pt) && !on_locus(&b, pt)) {
            bad += 1;
        }
    }
    check(bad == 0, || format!("{bad} violations"))?;
    Ok("500 triples, 10 laws each plus point checks".into())
}

// ---------------------------------------------------------------- 9

fn corpus() -> Vec<Vec<&'static str>> {
    let base: Vec<Vec<&str>> = vec![
        vec!["gb", "--ring", "QQ[x,y] grevlex", "x^2+y^2-1, x-y"],
        vec!["gb", "--ring", "Fp(7)[x,y] lex", "x^3 - y, x*y - 1"],
        vec!["gb", "--ring", "ZZ/12", "8, 6"],
        vec!["nf", "--ring", "QQ[x,y]", "--ideal", "x^2 - y", "x^3 + y"],
        vec!["ideal", "--ring", "QQ[x,y]", "--op", "intersection", "x", "y"],
        vec!["ideal", "--ring", "QQ[x,y]", "--op", "quotient", "x*y, x^2", "x"],
        vec![
            "ideal",
            "--ring",
            "QQ[x,y]",
            "--op",
            "radical-member",
            "x^2, y^3",
            "x + y",
        ],
        vec!["syz", "--ring", "QQ[x,y,z]", "[[x, y, z]]"],
        vec!["resolve", "--ring", "QQ[x,y,z]", "--module", "R/(x, y, z)"],
        vec![
            "resolve",
            "--ring",
            "Fp(2)[x]/(x^2)",
            "--module",
            "R/(x)",
            "--cap",
            "10",
        ],
        vec!["supp", "--ring", "QQ[x,y]", "--module", "coker [[x, 0], [0, y]]"],
        vec!["homology", "--ring", "ZZ", "--complex", "complex(0: 1, 1){[[6]]}"],
        vec!["koszul", "--ring", "QQ[x,y]", "x, y"],
        vec!["classify", "--wide", "wide[QQ[x,y]]{R/(x); R/(y)}"],
        vec!["member", "--ring", "ZZ", "--module", "Z/4", "--wide", "Z/2"],
        vec![
            "fg",
            "--ring",
            "QQ[x,y]",
            "--wide",
            "R/(x^2)",
            "--thick",
            "complex(0: 1, 1){[[x*y]]}",
        ],
        vec![
            "uv",
            "--ring",
            "QQ[x,y]",
            "--ideal",
            "y^2",
            "--wide",
            "R/(x); R/(y)",
        ],
        vec![
            "oracle",
            "--modulus",
            "12",
            "--gens",
            "Z/2",
            "--bound",
            "64",
            "--snake",
            "20",
            "--seed",
            "1",
        ],
        vec!["specz", "coproduct-member", "{3}+generic", "Z_(3) + Q"],
        vec!["specz", "union", "{2}", "~{3}"],
        vec!["gb", "--ring", "QQ[x,y", "x"],
    ];
    let mut all = base.clone();
    for mut c in base {
        c.push("--json");
        all.push(c);
    }
    all
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_widecat");
    let mut runs = 0;
    for args in corpus() {
        let run = || Command::new(bin).args(&args).output().expect("binary runs");
        let (a, b) = (run(), run());
        check(
            a.stdout == b.stdout && a.stderr == b.stderr && a.status == b.status,
            || format!("outputs differ for {args:?}"),
        )?;
        check(a.status.code().is_some(), || format!("{args:?} was killed"))?;
        runs += 1;
    }
    Ok(format!("{runs} commands byte-identical across two runs"))
}

fn main() {
    let criteria: [Check; 9] = [
        ("1 oracle vs classification", criterion_1),
        ("2 kernel/cokernel closure", criterion_2),
        ("3 wide/thick roundtrips", criterion_3),
        ("4 quotient transfer", criterion_4),
        ("5 resolution suite", criterion_5),
        ("6 derived-side homology", criterion_6),
        ("7 coproduct membership table", criterion_7),
        ("8 lattice laws", criterion_8),
        ("9 determinism", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
