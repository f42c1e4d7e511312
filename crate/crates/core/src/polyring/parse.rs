use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::Result;
use crate::text::{split_top_level, Cursor};

use super::poly::Poly;
use super::ring::PolyRing;

/// Parses `x^2 + 3/2*x*y - 1` style input. Coefficients are integers or
/// quotients of integers; powers take non-negative integer exponents;
/// parentheses nest.
pub fn parse_poly(ring: &PolyRing, src: &str) -> Result<Poly> {
    let mut c = Cursor::new(src);
    let p = parse_expr(ring, &mut c)?;
    c.finish()?;
    Ok(p)
}

/// Comma-separated list; an empty or blank input is the empty list.
pub fn parse_poly_list(ring: &PolyRing, src: &str) -> Result<Vec<Poly>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (offset, piece) in split_top_level(src, ',') {
        // Anchored in the full input so error positions stay meaningful.
        let mut c = Cursor::starting_at(&src[..offset + piece.len()], offset);
        let p = parse_expr(ring, &mut c)?;
        c.finish()?;
        out.push(p);
    }
    Ok(out)
}

pub(crate) fn parse_expr(ring: &PolyRing, c: &mut Cursor<'_>) -> Result<Poly> {
    let mut acc = if c.eat('-') {
        ring.neg(&parse_term(ring, c)?)
    } else {
        c.eat('+');
        parse_term(ring, c)?
    };
    loop {
        if c.eat('+') {
            acc = ring.add(&acc, &parse_term(ring, c)?);
        } else if c.eat('-') {
            acc = ring.sub(&acc, &parse_term(ring, c)?);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(ring: &PolyRing, c: &mut Cursor<'_>) -> Result<Poly> {
    let mut acc = parse_power(ring, c)?;
    loop {
        if c.eat('*') {
            acc = ring.mul(&acc, &parse_power(ring, c)?);
        } else if c.peek() == Some('/') {
            let at = c.offset();
            c.eat('/');
            let den = c
                .unsigned()
                .ok_or_else(|| c.error("only division by an integer literal is supported"))?;
            let inv = ring
                .field()
                .from_ratio(&BigInt::one(), &den)
                .ok_or_else(|| c.error_at(at, "division by zero in the coefficient field"))?;
            acc = ring.mul(&acc, &ring.constant(inv));
        } else {
            return Ok(acc);
        }
    }
}

fn parse_power(ring: &PolyRing, c: &mut Cursor<'_>) -> Result<Poly> {
    let base = parse_atom(ring, c)?;
    if c.eat('^') {
        let at = c.offset();
        let e = c.expect_unsigned()?;
        let e = e
            .to_u32()
            .filter(|&e| e <= 10_000)
            .ok_or_else(|| c.error_at(at, "exponent too large"))?;
        Ok(ring.pow(&base, e))
    } else {
        Ok(base)
    }
}

fn parse_atom(ring: &PolyRing, c: &mut Cursor<'_>) -> Result<Poly> {
    if c.eat('(') {
        let p = parse_expr(ring, c)?;
        c.expect(')')?;
        return Ok(p);
    }
    if c.eat('-') {
        return Ok(ring.neg(&parse_power(ring, c)?));
    }
    if let Some(n) = c.unsigned() {
        return Ok(ring.constant(ring.field().from_bigint(&n)));
    }
    let at = c.offset();
    match c.ident() {
        Some(name) => ring
            .var_by_name(name)
            .ok_or_else(|| c.error_at(at, format!("unknown variable '{name}'"))),
        None => match c.peek() {
            Some(ch) => Err(c.error(format!("unexpected '{ch}'"))),
            None => Err(c.error("unexpected end of input")),
        },
    }
}
