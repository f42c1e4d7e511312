use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use widecat::derived::FreeComplex;
use widecat::literal::{
    format_complex, format_matrix, format_module, parse_complex, parse_elem, parse_elem_list, parse_matrix,
    parse_module, parse_module_list, parse_ring, wide_ring, AnyRing,
};
use widecat::pidoracle::Oracle;
use widecat::spectrum::SpecZPoint;
use widecat::text::split_top_level;
use widecat::{
    BaseRing, ClosedLocus, CoproductWideSubcatZ, Error, FinAbGroup, IntRing, Matrix, PolyRing, Result,
    SpecZSet, ThickSubcat, WideSubcat, ZModuleDescriptor,
};

use crate::report::Report;

/// Runs `body` with the concrete ring type behind an [`AnyRing`].
macro_rules! with_ring {
    ($ring:expr, $r:ident => $body:expr) => {
        match $ring {
            AnyRing::Poly($r) => $body,
            AnyRing::Int($r) => $body,
        }
    };
}

fn ideal_gens<R: BaseRing>(ring: &R, i: &R::Ideal) -> Vec<String> {
    ring.ideal_generators(i)
        .iter()
        .map(|g| ring.format_elem(g))
        .collect()
}

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".to_string()
    } else {
        format!("({})", gens.join(", "))
    }
}

fn locus_json<R: BaseRing>(l: &ClosedLocus<R>) -> Value {
    let gens: Vec<String> = l.generators().iter().map(|g| l.ring().format_elem(g)).collect();
    json!({ "ideal": gens, "text": l.to_string() })
}

fn need_poly(ring: AnyRing, what: &str) -> Result<PolyRing> {
    match ring {
        AnyRing::Poly(r) => Ok(r),
        AnyRing::Int(r) => Err(Error::UnsupportedRing(format!(
            "{what} needs a polynomial ring, got {}",
            r.describe()
        ))),
    }
}

/// The ring from `--ring`, or the one named inside a `wide[...]` literal.
fn resolve_ring(ring: Option<&str>, wide: Option<&str>) -> Result<AnyRing> {
    let named = match wide {
        Some(w) => wide_ring(w)?,
        None => None,
    };
    match (ring, named) {
        (Some(r), Some(n)) => {
            let r = parse_ring(r)?;
            if r != n {
                return Err(Error::RingMismatch);
            }
            Ok(r)
        }
        (Some(r), None) => parse_ring(r),
        (None, Some(n)) => Ok(n),
        (None, None) => Err(Error::UnsupportedRing(
            "no ring given; pass --ring or write wide[RING]{...}".into(),
        )),
    }
}

pub fn gb(ring: &str, gens: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("gb");
    with_ring!(ring, r => {
        let elems = parse_elem_list(&r, gens)?;
        let basis = ideal_gens(&r, &r.ideal(&elems));
        rep.field("ring", r.describe());
        for g in &basis {
            rep.line(g.clone());
        }
        rep.field("basis", basis);
    });
    Ok(rep)
}

pub fn nf(ring: &str, ideal: &str, f: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("nf");
    let text = match ring {
        AnyRing::Poly(r) => {
            let gens = parse_elem_list(&r, ideal)?;
            let f = parse_elem(&r, f)?;
            let i = r.ideal(&gens);
            r.format(&r.reduce(&i.normal_form(&f)))
        }
        AnyRing::Int(r) => {
            let gens = parse_elem_list(&r, ideal)?;
            let f = parse_elem(&r, f)?;
            let g = r.ideal(&gens);
            let nf = if g.is_zero() { f } else { r.canon(&f.mod_floor(&g)) };
            r.format_elem(&nf)
        }
    };
    rep.line(text.clone());
    rep.field("normal_form", text);
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum IdealCmd {
    Sum,
    Product,
    Intersection,
    Quotient,
    RadicalMember,
    Contains,
}

pub fn ideal(ring: &str, op: IdealCmd, a: &str, b: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("ideal");
    with_ring!(ring, r => {
        let ia = r.ideal(&parse_elem_list(&r, a)?);
        match op {
            IdealCmd::RadicalMember => {
                let f = parse_elem(&r, b)?;
                let yes = r.radical_contains(&ia, &f);
                rep.line(yes.to_string());
                rep.field("result", yes);
            }
            IdealCmd::Contains => {
                let gens = parse_elem_list(&r, b)?;
                let ib = r.ideal(&gens);
                let yes = r.ideal_sum(&ia, &ib) == ia;
                rep.line(yes.to_string());
                rep.field("result", yes);
            }
            _ => {
                let ib = r.ideal(&parse_elem_list(&r, b)?);
                let out = match op {
                    IdealCmd::Sum => r.ideal_sum(&ia, &ib),
                    IdealCmd::Product => r.ideal_product(&ia, &ib),
                    IdealCmd::Intersection => r.ideal_intersection(&ia, &ib),
                    _ => colon(&r, &ia, &ib)?,
                };
                let gens = ideal_gens(&r, &out);
                rep.line(ideal_text(&gens));
                rep.field("ideal", gens);
            }
        }
    });
    Ok(rep)
}

/// Ring-specific colon ideal `(a : b)`.
trait Colon: BaseRing {
    fn colon_ideal(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
}

impl Colon for PolyRing {
    fn colon_ideal(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal> {
        a.op(
            widecat::polyring::IdealOp::Quotient,
            widecat::polyring::Operand::Ideal(b),
        )
    }
}

impl Colon for IntRing {
    fn colon_ideal(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        // x*b in (a) iff a/gcd(a, b) divides x.
        let g = a.gcd(b);
        if g.is_zero() {
            return Ok(self.unit_ideal());
        }
        Ok(self.ideal(&[a / g]))
    }
}

fn colon<R: Colon>(r: &R, a: &R::Ideal, b: &R::Ideal) -> Result<R::Ideal> {
    r.colon_ideal(a, b)
}

pub fn syz(ring: &str, matrix: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("syz");
    with_ring!(ring, r => {
        let m = parse_matrix(&r, matrix)?;
        let s = r.syzygies(&m);
        let text = format_matrix(&r, &s);
        rep.pair("syzygies", text.clone(), text);
        rep.pair("count", s.cols().to_string(), s.cols());
    });
    Ok(rep)
}

fn parse_degrees(src: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for (offset, piece) in split_top_level(src, ',') {
        let t = piece.trim();
        let v = t.parse::<i64>().map_err(|_| Error::Parse {
            line: 1,
            column: offset + piece.len() - piece.trim_start().len() + 1,
            message: format!("expected an integer degree, got '{t}'"),
        })?;
        out.push(v);
    }
    Ok(out)
}

pub fn resolve(ring: &str, module: &str, degrees: Option<&str>, cap: usize) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("resolve");
    match ring {
        AnyRing::Poly(r) => {
            let m = parse_module(&r, module)?;
            let degs = match degrees {
                Some(d) => parse_degrees(d)?,
                None => vec![0; m.num_generators()],
            };
            let res = m.graded(degs)?.minimal_free_resolution(cap)?;
            write_resolution(&mut rep, &r, res.ranks(), res.maps(), true);
            if let Some(ds) = res.degrees() {
                let txt: Vec<String> = ds
                    .iter()
                    .map(|d| {
                        format!(
                            "[{}]",
                            d.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
                        )
                    })
                    .collect();
                rep.pair("degrees", txt.join(" "), ds.to_vec());
            }
        }
        AnyRing::Int(r) => {
            if degrees.is_some() {
                return Err(Error::NotGraded("gradings need a polynomial ring".into()));
            }
            let m = parse_module(&r, module)?;
            let res = m.free_resolution(cap)?;
            write_resolution(&mut rep, &r, res.ranks(), res.maps(), false);
        }
    }
    Ok(rep)
}

fn write_resolution<R: BaseRing>(
    rep: &mut Report,
    r: &R,
    ranks: &[usize],
    maps: &[Matrix<R::Elem>],
    minimal: bool,
) {
    let ranks_txt: Vec<String> = ranks.iter().map(usize::to_string).collect();
    rep.pair("ranks", ranks_txt.join(" "), ranks.to_vec());
    rep.pair("length", maps.len().to_string(), maps.len());
    rep.pair("minimal", minimal.to_string(), minimal);
    let mut ds = Vec::new();
    for (k, m) in maps.iter().enumerate() {
        let t = format_matrix(r, m);
        rep.line(format!("d{}: {}", k + 1, t));
        ds.push(t);
    }
    rep.field("maps", ds);
}

pub fn supp(ring: &str, module: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("supp");
    with_ring!(ring, r => {
        let m = parse_module(&r, module)?;
        let ann = ideal_gens(&r, &m.annihilator());
        let fit = ideal_gens(&r, &m.fitting0());
        let s = ClosedLocus::support_of(&m);
        rep.pair("module", format_module(&m), format_module(&m));
        rep.pair("annihilator", ideal_text(&ann), ann);
        rep.pair("fitting0", ideal_text(&fit), fit);
        rep.pair("support", s.to_string(), locus_json(&s));
    });
    Ok(rep)
}

fn write_homology<R: BaseRing>(rep: &mut Report, x: &FreeComplex<R>, only: Option<i64>) {
    let r = x.ring();
    let degrees: Vec<i64> = match only {
        Some(n) => vec![n],
        None => (x.low()..=x.high()).collect(),
    };
    let mut hs = Vec::new();
    for n in degrees {
        let h = x.homology(n).trimmed();
        let ann = ideal_gens(r, &h.annihilator());
        let text = if h.is_zero() {
            "0".to_string()
        } else {
            format_module(&h)
        };
        rep.line(format!("H{}: {}  ann {}", n, text, ideal_text(&ann)));
        hs.push(json!({ "degree": n, "module": text, "zero": h.is_zero(), "annihilator": ann }));
    }
    rep.field("homology", hs);
    let s = x.support();
    rep.pair("support", s.to_string(), locus_json(&s));
}

pub fn homology(ring: &str, complex: &str, degree: Option<i64>) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("homology");
    with_ring!(ring, r => {
        let x = parse_complex(&r, complex)?;
        rep.pair("complex", format_complex(&x), format_complex(&x));
        write_homology(&mut rep, &x, degree);
    });
    Ok(rep)
}

pub fn koszul(ring: &str, elems: &str) -> Result<Report> {
    let ring = parse_ring(ring)?;
    let mut rep = Report::new("koszul");
    with_ring!(ring, r => {
        let es = parse_elem_list(&r, elems)?;
        let x = FreeComplex::koszul(r.clone(), &es);
        rep.pair("complex", format_complex(&x), format_complex(&x));
        write_homology(&mut rep, &x, None);
    });
    Ok(rep)
}

fn wide_of<R: BaseRing>(r: &R, src: &str) -> Result<WideSubcat<R>> {
    WideSubcat::generated_by(r.clone(), parse_module_list(r, src)?)
}

pub fn classify(ring: Option<&str>, wide: &str) -> Result<Report> {
    let ring = resolve_ring(ring, Some(wide))?;
    let mut rep = Report::new("classify");
    with_ring!(ring, r => {
        let w = wide_of(&r, wide)?;
        rep.field("ring", r.describe());
        rep.pair("generators", w.generators().len().to_string(), w.generators().len());
        rep.pair("datum", w.datum().to_string(), locus_json(w.datum()));
        rep.pair("complement", w.r_map().to_string(), w.r_map().to_string());
        rep.pair("zero", w.datum().is_empty().to_string(), w.datum().is_empty());
        rep.pair("everything", w.datum().is_whole().to_string(), w.datum().is_whole());
        let thick = w.f_map();
        rep.pair("thick", thick.datum().to_string(), locus_json(thick.datum()));
    });
    Ok(rep)
}

pub fn member(ring: Option<&str>, module: &str, wide: &str) -> Result<Report> {
    let ring = resolve_ring(ring, Some(wide))?;
    let mut rep = Report::new("member");
    with_ring!(ring, r => {
        let w = wide_of(&r, wide)?;
        let m = parse_module(&r, module)?;
        let yes = w.member(&m)?;
        rep.line(yes.to_string());
        rep.field("member", yes);
        rep.field("support", locus_json(&ClosedLocus::support_of(&m)));
        rep.field("datum", locus_json(w.datum()));
    });
    Ok(rep)
}

pub fn fg(ring: Option<&str>, wide: Option<&str>, thick: &[String]) -> Result<Report> {
    let ring = resolve_ring(ring, wide)?;
    let mut rep = Report::new("fg");
    with_ring!(ring, r => {
        if let Some(src) = wide {
            let w = wide_of(&r, src)?;
            let f = w.f_map();
            let back = WideSubcat::g_map(&f);
            let same = back.same_as(&w)?;
            rep.pair("wide", w.datum().to_string(), locus_json(w.datum()));
            rep.pair("f", f.datum().to_string(), locus_json(f.datum()));
            rep.pair("gf", back.datum().to_string(), locus_json(back.datum()));
            rep.pair("gf_equal", same.to_string(), same);
        }
        if !thick.is_empty() {
            let xs = thick.iter().map(|s| parse_complex(&r, s)).collect::<Result<Vec<_>>>()?;
            let t = ThickSubcat::generated_by(r.clone(), xs)?;
            let g = WideSubcat::g_map(&t);
            let back = g.f_map();
            let same = back.datum().same_locus(t.datum())?;
            rep.pair("thick", t.datum().to_string(), locus_json(t.datum()));
            rep.pair("g", g.datum().to_string(), locus_json(g.datum()));
            rep.pair("fg", back.datum().to_string(), locus_json(back.datum()));
            rep.pair("fg_equal", same.to_string(), same);
        }
        if wide.is_none() && thick.is_empty() {
            return Err(Error::DimensionMismatch("fg needs --wide or --thick".into()));
        }
    });
    Ok(rep)
}

/// `wide` lives over `ring/(ideal)`; reports u(W) over `ring` and v(u(W)).
pub fn uv(ring: &str, ideal: &str, wide: &str) -> Result<Report> {
    let ambient = need_poly(parse_ring(ring)?, "uv")?;
    let a = parse_elem_list(&ambient, ideal)?;
    let q = ambient.quotient(&a);
    if let Some(named) = wide_ring(wide)? {
        if named != AnyRing::Poly(q.clone()) {
            return Err(Error::RingMismatch);
        }
    }
    let w = wide_of(&q, wide)?;
    let u = w.inflate_u()?;
    let vu = u.restrict_v(&a)?;
    let same = vu.same_as(&w)?;
    let mut rep = Report::new("uv");
    rep.field("ring", ambient.describe());
    rep.pair("quotient", q.describe(), q.describe());
    rep.pair("datum", w.datum().to_string(), locus_json(w.datum()));
    rep.pair("u", u.datum().to_string(), locus_json(u.datum()));
    rep.pair("vu", vu.datum().to_string(), locus_json(vu.datum()));
    rep.pair("vu_equal", same.to_string(), same);
    Ok(rep)
}

fn parse_groups(src: &str) -> Result<Vec<FinAbGroup>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (offset, piece) in split_top_level(src, ',') {
        out.push(FinAbGroup::parse(piece).map_err(|e| shift_parse(e, offset))?);
    }
    Ok(out)
}

/// Moves a single-line parse error `offset` columns to the right.
fn shift_parse(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse {
            line: 1,
            column,
            message,
        } => Error::Parse {
            line: 1,
            column: column + offset,
            message,
        },
        other => other,
    }
}

fn group_list(set: impl IntoIterator<Item = FinAbGroup>) -> Vec<String> {
    set.into_iter().map(|g| g.to_string()).collect()
}

pub fn oracle(modulus: Option<u64>, gens: &str, bound: u64, snake: usize, seed: u64) -> Result<Report> {
    let gens = parse_groups(gens)?;
    let o = Oracle::new(bound, modulus)?;
    let report = o.closure_tower(&gens)?;
    let mut rep = Report::new("oracle");
    let m = modulus.map_or("none".to_string(), |n| n.to_string());
    rep.pair("modulus", m, modulus.map_or(Value::Null, |n| json!(n)));
    rep.pair("bound", bound.to_string(), bound);
    rep.pair("universe", o.universe().len().to_string(), o.universe().len());
    let g = group_list(report.generators.iter().cloned());
    rep.pair("generators", g.join(", "), g);
    let mut levels = Vec::new();
    for (k, level) in report.tower.iter().enumerate() {
        let l = group_list(level.iter().cloned());
        rep.line(format!("D{} ({}): {}", k, l.len(), l.join(", ")));
        levels.push(l);
    }
    rep.field("tower", levels);
    rep.pair("stabilized", report.stabilized.to_string(), report.stabilized);
    let p = group_list(report.predicted.iter().cloned());
    rep.pair("predicted", format!("{} groups", p.len()), p);
    let missing = group_list(report.missing.iter().cloned());
    let unexpected = group_list(report.unexpected.iter().cloned());
    rep.pair("missing", missing.join(", "), missing);
    rep.pair("unexpected", unexpected.join(", "), unexpected);
    let verified = o.verify_witnesses(&report)?;
    rep.pair("witnesses_verified", verified.to_string(), verified);
    if snake > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = o.snake_closure_checks(report.closure(), snake, &mut rng);
        rep.pair("snake_samples", s.samples.to_string(), s.samples);
        rep.pair(
            "snake_violations",
            s.violations.len().to_string(),
            s.violations.len(),
        );
    }
    rep.pair("equal", report.equal.to_string(), report.equal);
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SpecOp {
    Union,
    Intersect,
    Complement,
    Member,
    CoproductMember,
}

fn parse_point(src: &str) -> Result<SpecZPoint> {
    let t = src.trim();
    if t == "generic" || t == "0" || t == "(0)" {
        return Ok(SpecZPoint::Generic);
    }
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    match inner.parse::<u64>() {
        Ok(p) if widecat::exactarith::is_prime(p) => Ok(SpecZPoint::Prime(p)),
        _ => Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected a prime or 'generic', got '{t}'"),
        }),
    }
}

pub fn specz(op: SpecOp, a: &str, b: Option<&str>) -> Result<Report> {
    let set = SpecZSet::parse(a)?;
    let need_b =
        || b.ok_or_else(|| Error::DimensionMismatch("this operation takes a second argument".into()));
    let mut rep = Report::new("specz");
    match op {
        SpecOp::Union | SpecOp::Intersect => {
            let other = SpecZSet::parse(need_b()?)?;
            let out = if op == SpecOp::Union {
                set.union(&other)
            } else {
                set.intersect(&other)
            };
            rep.line(out.to_string());
            rep.field("set", out.to_string());
        }
        SpecOp::Complement => {
            let out = set.complement();
            rep.line(out.to_string());
            rep.field("set", out.to_string());
        }
        SpecOp::Member => {
            let yes = set.member(parse_point(need_b()?)?);
            rep.line(yes.to_string());
            rep.field("member", yes);
        }
        SpecOp::CoproductMember => {
            let m = ZModuleDescriptor::parse(need_b()?)?;
            let w = CoproductWideSubcatZ::new(set);
            let yes = w.member(&m);
            rep.line(yes.to_string());
            rep.field("member", yes);
            rep.field("support", m.support().to_string());
        }
    }
    Ok(rep)
}
