//! Text forms shared by the command line: ring literals, matrices,
//! module presentations, complexes and subcategory lists.
//!
//! ```text
//! ring     := "ZZ" | "ZZ/" n | field "[" vars "]" ["/(" polys ")"] [order]
//! field    := "QQ" | "Fp(" p ")"
//! order    := "grevlex" | "lex"
//! matrix   := "[" row ("," row)* "]"        row := "[" elem ("," elem)* "]"
//! module   := summand ("+" summand)*
//! summand  := "0" | ("R" | "Z") ["^" n] | ("R" | "Z") "/" (n | "(" elems ")")
//!           | ["coker"] matrix
//! complex  := "complex(" low ":" rank ("," rank)* ")" "{" [diff (";" diff)*] "}"
//! diff     := matrix | "0"
//! wide     := "wide[" ring "]{" module (";" module)* "}" | module (";" module)*
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::base::BaseRing;
use crate::derived::FreeComplex;
use crate::error::{Error, Result};
use crate::exactarith::{Field, IntRing, Matrix};
use crate::freemod::FPModule;
use crate::polyring::{MonomialOrder, PolyRing};
use crate::text::{split_top_level, Cursor};

/// Any ring the engine supports.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRing {
    Poly(PolyRing),
    Int(IntRing),
}

impl fmt::Display for AnyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyRing::Poly(r) => write!(f, "{r}"),
            AnyRing::Int(r) => write!(f, "{}", r.describe()),
        }
    }
}

pub fn parse_ring(src: &str) -> Result<AnyRing> {
    parse_ring_at(src, 0, src.len())
}

/// Parses the ring literal occupying `src[start..end]`.
fn parse_ring_at(src: &str, start: usize, end: usize) -> Result<AnyRing> {
    let text = &src[..end];
    let mut c = Cursor::starting_at(text, start);
    let at = {
        c.skip_ws();
        c.offset()
    };
    let name = c
        .ident()
        .ok_or_else(|| c.error("expected a ring such as QQ[x,y], Fp(7)[x], ZZ or ZZ/12"))?;
    let field = match name {
        "ZZ" => {
            if c.eat('/') {
                let at = c.offset();
                let n = c.expect_unsigned()?;
                let n = n
                    .to_u64()
                    .filter(|&n| n >= 2)
                    .ok_or_else(|| c.error_at(at, "modulus must be an integer >= 2"))?;
                c.finish()?;
                return Ok(AnyRing::Int(IntRing::modulo(n)));
            }
            c.finish()?;
            return Ok(AnyRing::Int(IntRing::integers()));
        }
        "QQ" => Field::Rationals,
        "Fp" => {
            c.expect('(')?;
            let at = c.offset();
            let p = c.expect_unsigned()?;
            c.expect(')')?;
            let p = p
                .to_u64()
                .ok_or_else(|| c.error_at(at, "characteristic too large"))?;
            Field::prime(p)?
        }
        other => {
            return Err(Error::UnsupportedRing(format!(
                "'{other}' (at column {}) is not one of QQ, Fp(p), ZZ",
                crate::error::line_col(src, at).1
            )))
        }
    };
    c.expect('[')?;
    let mut vars = Vec::new();
    if !c.eat(']') {
        loop {
            let v = c.ident().ok_or_else(|| c.error("expected a variable name"))?;
            vars.push(v.to_string());
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    // The modulus is read after the order is known.
    let mut modulus_span = None;
    if c.eat('/') {
        c.expect('(')?;
        let open = c.offset();
        let close = matching_paren(text, open).ok_or_else(|| c.error("unbalanced parenthesis"))?;
        modulus_span = Some((open, close));
        c = Cursor::starting_at(text, close + 1);
    }
    let order = if c.eat_str("grevlex") {
        MonomialOrder::Grevlex
    } else if c.eat_str("lex") {
        MonomialOrder::Lex
    } else {
        MonomialOrder::Grevlex
    };
    c.finish()?;
    let ring = PolyRing::new(field, &vars, order)?;
    match modulus_span {
        None => Ok(AnyRing::Poly(ring)),
        Some((open, close)) => {
            let mut c = Cursor::starting_at(&text[..close], open);
            let gens = if c.at_end() {
                Vec::new()
            } else {
                parse_elems_until_end(&ring, &mut c)?
            };
            Ok(AnyRing::Poly(ring.quotient(&gens)))
        }
    }
}

fn parse_elems_until_end<R: BaseRing>(ring: &R, c: &mut Cursor<'_>) -> Result<Vec<R::Elem>> {
    let mut out = Vec::new();
    loop {
        out.push(ring.parse_elem(c)?);
        if !c.eat(',') {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}

/// Byte offset of the `)` closing the group that starts at `open`.
fn matching_paren(src: &str, open: usize) -> Option<usize> {
    let mut depth = 1i32;
    for (i, ch) in src[open..].char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Comma-separated elements up to (not including) `close`.
fn parse_elems<R: BaseRing>(ring: &R, c: &mut Cursor<'_>, close: char) -> Result<Vec<R::Elem>> {
    let mut out = Vec::new();
    if c.eat(close) {
        return Ok(out);
    }
    loop {
        out.push(ring.parse_elem(c)?);
        if c.eat(close) {
            return Ok(out);
        }
        c.expect(',')?;
    }
}

pub fn parse_elem_list<R: BaseRing>(ring: &R, src: &str) -> Result<Vec<R::Elem>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_elems_until_end(ring, &mut Cursor::new(src))
}

pub fn parse_elem<R: BaseRing>(ring: &R, src: &str) -> Result<R::Elem> {
    let mut c = Cursor::new(src);
    let e = ring.parse_elem(&mut c)?;
    c.finish()?;
    Ok(e)
}

fn matrix_at<R: BaseRing>(ring: &R, c: &mut Cursor<'_>) -> Result<Matrix<R::Elem>> {
    let start = c.offset();
    c.expect('[')?;
    let mut rows: Vec<Vec<R::Elem>> = Vec::new();
    if !c.eat(']') {
        loop {
            let row_at = c.offset();
            c.expect('[')?;
            let row = parse_elems(ring, c, ']')?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(c.error_at(row_at, "rows have different lengths"));
                }
            }
            rows.push(row);
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(rows, cols).map_err(|_| c.error_at(start, "malformed matrix"))
}

pub fn parse_matrix<R: BaseRing>(ring: &R, src: &str) -> Result<Matrix<R::Elem>> {
    let mut c = Cursor::new(src);
    let m = matrix_at(ring, &mut c)?;
    c.finish()?;
    Ok(m)
}

fn summand_at<R: BaseRing>(ring: &R, c: &mut Cursor<'_>) -> Result<FPModule<R>> {
    match c.peek() {
        Some('[') => return Ok(FPModule::new(ring.clone(), matrix_at(ring, c)?)),
        Some('0') => {
            c.eat('0');
            return Ok(FPModule::zero(ring.clone()));
        }
        _ => {}
    }
    let at = c.offset();
    let word = c
        .ident()
        .ok_or_else(|| c.error("expected a module: R, R^n, R/(...), Z/n or a matrix"))?;
    match word {
        "coker" => Ok(FPModule::new(ring.clone(), matrix_at(ring, c)?)),
        "R" | "Z" => {
            if c.eat('^') {
                let n = c.expect_usize()?;
                Ok(FPModule::free(ring.clone(), n))
            } else if c.eat('/') {
                let gens = if c.eat('(') {
                    parse_elems(ring, c, ')')?
                } else {
                    let n: BigInt = c.expect_unsigned()?;
                    vec![ring.from_int(&n)]
                };
                Ok(FPModule::cyclic(ring.clone(), &gens))
            } else {
                Ok(FPModule::free(ring.clone(), 1))
            }
        }
        other => Err(c.error_at(at, format!("unknown module form '{other}'"))),
    }
}

fn module_at<R: BaseRing>(ring: &R, c: &mut Cursor<'_>) -> Result<FPModule<R>> {
    let mut m = summand_at(ring, c)?;
    while c.eat('+') {
        m = m.direct_sum(&summand_at(ring, c)?)?;
    }
    Ok(m)
}

pub fn parse_module<R: BaseRing>(ring: &R, src: &str) -> Result<FPModule<R>> {
    let mut c = Cursor::new(src);
    let m = module_at(ring, &mut c)?;
    c.finish()?;
    Ok(m)
}

/// Modules separated by `;`, or the body of a `wide[ring]{...}` literal.
/// Returns the ring text span if the literal names one.
pub fn parse_module_list<R: BaseRing>(ring: &R, src: &str) -> Result<Vec<FPModule<R>>> {
    let (start, end) = wide_body(src)?.1;
    let body = &src[start..end];
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (offset, part) in split_top_level(body, ';') {
        if part.trim().is_empty() {
            continue;
        }
        let limit = start + offset + part.len();
        let mut c = Cursor::starting_at(&src[..limit], start + offset);
        out.push(module_at(ring, &mut c)?);
        c.finish()?;
    }
    Ok(out)
}

/// The ring named by a `wide[ring]{...}` literal, if any.
pub fn wide_ring(src: &str) -> Result<Option<AnyRing>> {
    match wide_body(src)?.0 {
        Some((s, e)) => Ok(Some(parse_ring_at(src, s, e)?)),
        None => Ok(None),
    }
}

type Span = (usize, usize);

fn wide_body(src: &str) -> Result<(Option<Span>, Span)> {
    let mut c = Cursor::new(src);
    if !c.eat_str("wide") {
        return Ok((None, (0, src.len())));
    }
    c.expect('[')?;
    let ring_start = c.offset();
    let mut depth = 1i32;
    let mut ring_end = None;
    for (i, ch) in src[ring_start..].char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    ring_end = Some(ring_start + i);
                    break;
                }
            }
            _ => {}
        }
    }
    let ring_end = ring_end.ok_or_else(|| c.error("unclosed '['"))?;
    let mut c = Cursor::starting_at(src, ring_end + 1);
    c.expect('{')?;
    let body_start = c.offset();
    let body_end = src
        .rfind('}')
        .filter(|&e| e >= body_start)
        .ok_or_else(|| c.error("expected '}'"))?;
    let mut tail = Cursor::starting_at(src, body_end + 1);
    tail.finish()?;
    Ok((Some((ring_start, ring_end)), (body_start, body_end)))
}

pub fn parse_complex<R: BaseRing>(ring: &R, src: &str) -> Result<FreeComplex<R>> {
    let mut c = Cursor::new(src);
    if !c.eat_str("complex") {
        return Err(c.error("expected complex(low: ranks){...}"));
    }
    c.expect('(')?;
    let neg = c.eat('-');
    let low = c.expect_usize()? as i64;
    let low = if neg { -low } else { low };
    c.expect(':')?;
    let mut ranks = Vec::new();
    loop {
        ranks.push(c.expect_usize()?);
        if c.eat(')') {
            break;
        }
        c.expect(',')?;
    }
    c.expect('{')?;
    let mut diffs = Vec::new();
    if !c.eat('}') {
        loop {
            let at = c.offset();
            let k = diffs.len();
            let (rows, cols) = match (ranks.get(k), ranks.get(k + 1)) {
                (Some(&r), Some(&s)) => (r, s),
                _ => return Err(c.error_at(at, "more differentials than ranks allow")),
            };
            let d = if c.peek() == Some('0') {
                c.eat('0');
                Matrix::filled(rows, cols, ring.zero())
            } else {
                matrix_at(ring, &mut c)?
            };
            if d.rows() != rows || d.cols() != cols {
                return Err(c.error_at(at, format!("expected a {rows}x{cols} matrix")));
            }
            diffs.push(d);
            if c.eat('}') {
                break;
            }
            c.expect(';')?;
        }
    }
    c.finish()?;
    if diffs.len() + 1 != ranks.len() {
        // Missing trailing differentials are zero.
        while diffs.len() + 1 < ranks.len() {
            let k = diffs.len();
            diffs.push(Matrix::filled(ranks[k], ranks[k + 1], ring.zero()));
        }
    }
    FreeComplex::new(ring.clone(), low, ranks, diffs)
}

pub fn format_matrix<R: BaseRing>(ring: &R, m: &Matrix<R::Elem>) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return "0".to_string();
    }
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = m.row(i).iter().map(|e| ring.format_elem(e)).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// `0`, `R^n`, `R/(...)` for cyclic modules, otherwise `coker [[...]]`.
pub fn format_module<R: BaseRing>(m: &FPModule<R>) -> String {
    let ring = m.ring();
    let n = m.num_generators();
    let rel = m.relations();
    let nonzero: Vec<usize> = (0..rel.cols())
        .filter(|&j| (0..n).any(|i| !ring.is_zero(rel.get(i, j))))
        .collect();
    if n == 0 {
        return "0".to_string();
    }
    if nonzero.is_empty() {
        return if n == 1 { "R".to_string() } else { format!("R^{n}") };
    }
    if n == 1 {
        let gens: Vec<String> = nonzero.iter().map(|&j| ring.format_elem(rel.get(0, j))).collect();
        return format!("R/({})", gens.join(", "));
    }
    format!("coker {}", format_matrix(ring, &rel.select_cols(&nonzero)))
}

pub fn format_complex<R: BaseRing>(x: &FreeComplex<R>) -> String {
    let ring = x.ring();
    if x.ranks().is_empty() {
        return "complex(0: 0){}".to_string();
    }
    let ranks: Vec<String> = x.ranks().iter().map(usize::to_string).collect();
    let diffs: Vec<String> = x
        .differentials()
        .iter()
        .map(|d| {
            if d.entries().iter().all(|e| ring.is_zero(e)) {
                "0".to_string()
            } else {
                format_matrix(ring, d)
            }
        })
        .collect();
    format!(
        "complex({}: {}){{{}}}",
        x.low(),
        ranks.join(", "),
        diffs.join("; ")
    )
}
