use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use widecat::exactarith::smith_normal_form;
use widecat::pidoracle::{FinAbGroup, Oracle};
use widecat::polyring::parse_poly_list;
use widecat::{BaseRing, FPModule, IdealGB, Matrix, PolyRing};

fn groebner(c: &mut Criterion) {
    let r = PolyRing::rationals(&["x", "y", "z"]);
    // cyclic-3
    let gens = parse_poly_list(&r, "x + y + z, x*y + y*z + z*x, x*y*z - 1").unwrap();
    c.bench_function("buchberger cyclic-3", |b| {
        b.iter(|| IdealGB::buchberger(black_box(&gens), &r))
    });
}

fn smith(c: &mut Criterion) {
    let data: Vec<i64> = (0..36).map(|i: i64| (i * 37 + 11) % 23 - 11).collect();
    let a = Matrix::from_i64(6, 6, &data).unwrap();
    c.bench_function("smith normal form 6x6", |b| {
        b.iter(|| smith_normal_form(black_box(&a)))
    });
}

fn syzygies(c: &mut Criterion) {
    let r = PolyRing::rationals(&["x", "y", "z", "w"]);
    let row = parse_poly_list(&r, "x*y, y*z, z*w, w*x, x^2 - z^2").unwrap();
    let m = Matrix::from_rows(vec![row], 5).unwrap();
    c.bench_function("syzygies of 5 quadrics", |b| b.iter(|| r.syzygies(black_box(&m))));
    let gens = parse_poly_list(&r, "x, y, z, w").unwrap();
    let k = FPModule::cyclic(r.clone(), &gens).graded_standard().unwrap();
    c.bench_function("minimal resolution of k over 4 variables", |b| {
        b.iter(|| k.minimal_free_resolution(black_box(8)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let o = Oracle::new(64, Some(12)).unwrap();
    let gens = [FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)];
    c.bench_function("closure tower ZZ/12, bound 64", |b| {
        b.iter(|| o.closure_tower(black_box(&gens)).unwrap())
    });
}

criterion_group!(benches, groebner, smith, syzygies, oracle);
criterion_main!(benches);
