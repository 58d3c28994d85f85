use super::{BaseField, KElem};
use crate::error::{Error, Result};
use crate::zlattice::Q;
use num_traits::{One, Signed, Zero};

pub(crate) fn format_kelem(e: &KElem) -> String {
    if e.y.is_zero() {
        return e.x.to_string();
    }
    let coef = |y: &Q| -> String {
        if y.abs().is_one() {
            String::new()
        } else {
            format!("{}*", y.abs())
        }
    };
    let wterm = format!("{}w", coef(&e.y));
    if e.x.is_zero() {
        let sign = if e.y.is_negative() { "-" } else { "" };
        format!("{sign}{wterm}")
    } else {
        let sign = if e.y.is_negative() { "-" } else { "+" };
        format!("{}{sign}{wterm}", e.x)
    }
}

fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    s.parse::<Q>().map_err(|_| bad())
}

/// Parses `x`, `y*w`, `x+y*w`, `x-w` and similar; the inverse of `Display`.
pub fn parse_kelem(k: &BaseField, s: &str) -> Result<KElem> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !s.ends_with('w') {
        return Ok(k.rat(parse_q(&s)?));
    }
    if k.is_rational() {
        return Err(Error::Parse(format!("{s:?} has a w-part but the base field is Q")));
    }
    let split = s
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    // a sign directly after '/' or '*' cannot start the w-term
    let split = split.filter(|&i| !matches!(s.as_bytes()[i - 1], b'/' | b'*'));
    let (xs, ws) = match split {
        Some(i) => (&s[..i], &s[i..]),
        None => ("", s.as_str()),
    };
    let x = if xs.is_empty() { Q::zero() } else { parse_q(xs)? };
    let body = &ws[..ws.len() - 1];
    let (neg, body) = match body.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, body.strip_prefix('+').unwrap_or(body)),
    };
    let y = if body.is_empty() {
        Q::one()
    } else {
        let c = body
            .strip_suffix('*')
            .ok_or_else(|| Error::Parse(format!("expected '*' before w in {s:?}")))?;
        parse_q(c)?
    };
    let y = if neg { -y } else { y };
    if y.is_zero() {
        return Err(Error::Parse(format!("zero w-coefficient written explicitly in {s:?}")));
    }
    Ok(k.elem(x, y))
}
