//! Text and JSON forms of polynomials, and `S=...; T=...` subset pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::monomial::GridMonomial;
use crate::ring::polynomial::Polynomial;
use crate::scalar::{parse_rational, Field};
use crate::schensted::Cell;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string parses"))
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.digits()?;
        usize::try_from(v).map_err(|_| Error::parse(start, "number too large"))
    }
}

/// Parses the text form `3*x[2,4]*x[5,5] - x[1,1]^2 + 1/2`. Every variable
/// must lie on the `n×n` grid; coefficients are exact integers or `p/q`.
pub fn parse_polynomial(text: &str, n: usize, field: Field) -> Result<Polynomial> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut out = Polynomial::zero(n, field);
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(Error::parse(cur.pos, "empty polynomial"));
            }
            break;
        }
        let mut negative = false;
        if cur.eat(b'-') {
            negative = true;
        } else if !cur.eat(b'+') && !first {
            return Err(Error::parse(cur.pos, "expected '+' or '-' between terms"));
        }
        first = false;
        let (coeff, factors) = parse_term(&mut cur, n)?;
        let coeff = if negative { -coeff } else { coeff };
        let m = GridMonomial::from_factors(n, factors)?;
        out.add_term(m, field.from_rational(&coeff)?);
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, n: usize) -> Result<(BigRational, Vec<(Cell, u32)>)> {
    let mut coeff = BigRational::one();
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'x') => {
                let start = cur.pos;
                cur.pos += 1;
                cur.expect(b'[')?;
                let i = cur.small()?;
                cur.expect(b',')?;
                let j = cur.small()?;
                cur.expect(b']')?;
                let e = if cur.eat(b'^') {
                    u32::try_from(cur.small()?).map_err(|_| Error::parse(cur.pos, "exponent too large"))?
                } else {
                    1
                };
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(Error::parse(start, format!("variable x[{i},{j}] outside the {n}x{n} grid")));
                }
                factors.push((Cell::new(i, j), e));
            }
            Some(b) if b.is_ascii_digit() => {
                let num = cur.digits()?;
                let den = if cur.eat(b'/') { cur.digits()? } else { BigInt::one() };
                if den == BigInt::from(0) {
                    return Err(Error::parse(cur.pos, "zero denominator"));
                }
                coeff *= BigRational::new(num, den);
            }
            Some(b'.') | Some(b'e') | Some(b'E') => {
                return Err(Error::parse(cur.pos, "floating point coefficients are not accepted"));
            }
            Some(_) => return Err(Error::parse(cur.pos, "expected a coefficient or a variable x[i,j]")),
            None => return Err(Error::parse(cur.pos, "unexpected end of input")),
        }
        cur.skip_ws();
        if cur.peek() == Some(b'.') {
            return Err(Error::parse(cur.pos, "floating point coefficients are not accepted"));
        }
        if !cur.eat(b'*') {
            return Ok((coeff, factors));
        }
    }
}

/// One term of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    /// Exact coefficient `"p/q"` (or an integer).
    pub coeff: String,
    /// Factors `[i, j, exponent]`.
    pub monomial: Vec<[usize; 3]>,
}

/// Terms of `f`, largest first.
pub fn polynomial_to_json(f: &Polynomial) -> Vec<JsonTerm> {
    f.terms()
        .map(|(m, c)| JsonTerm {
            coeff: c.to_string(),
            monomial: m.factors().iter().map(|&(cell, e)| [cell.i, cell.j, e as usize]).collect(),
        })
        .collect()
}

pub fn polynomial_from_json(terms: &[JsonTerm], n: usize, field: Field) -> Result<Polynomial> {
    let mut out = Polynomial::zero(n, field);
    for t in terms {
        let c = field.from_rational(&parse_rational(&t.coeff)?)?;
        let mut factors = Vec::with_capacity(t.monomial.len());
        for &[i, j, e] in &t.monomial {
            let e = u32::try_from(e).map_err(|_| Error::domain("exponent too large"))?;
            factors.push((Cell::new(i, j), e));
        }
        out.add_term(GridMonomial::from_factors(n, factors)?, c);
    }
    Ok(out)
}

/// Parses `"S=2,4; T=1,3,4"` into sorted, duplicate-free subsets of `[n]`.
pub fn parse_subset_pair(text: &str, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut s = None;
    let mut t = None;
    let mut offset = 0;
    for part in text.split(';') {
        let here = offset;
        offset += part.len() + 1;
        let trimmed = part.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (name, list) = trimmed
            .split_once('=')
            .ok_or_else(|| Error::parse(here, "expected S=... or T=..."))?;
        let set = parse_index_list(list, n, here)?;
        match name.trim() {
            "S" if s.is_none() => s = Some(set),
            "T" if t.is_none() => t = Some(set),
            other => return Err(Error::parse(here, format!("unexpected or repeated set name {other:?}"))),
        }
    }
    match (s, t) {
        (Some(s), Some(t)) => Ok((s, t)),
        _ => Err(Error::parse(text.len(), "both S and T are required")),
    }
}

fn parse_index_list(list: &str, n: usize, at: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in list.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let v: usize = item
            .parse()
            .map_err(|_| Error::parse(at, format!("invalid index {item:?}")))?;
        if v == 0 || v > n {
            return Err(Error::domain(format!("index {v} outside [1, {n}]")));
        }
        out.push(v);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("repeated index in subset"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let q = Field::Rationals;
        let f = parse_polynomial("3*x[2,4]*x[5,5] - x[1,1]^2", 5, q).unwrap();
        assert_eq!(f.to_string(), "-x[1,1]^2 + 3*x[2,4]*x[5,5]");
        assert_eq!(parse_polynomial(&f.to_string(), 5, q).unwrap(), f);
        let g = parse_polynomial("1/2 * x[1,2] + 2*x[1,2] - 7/3", 3, q).unwrap();
        assert_eq!(g.to_string(), "5/2*x[1,2] - 7/3");
        assert!(parse_polynomial("0", 2, q).unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed_text() {
        let q = Field::Rationals;
        assert!(matches!(parse_polynomial("x[3,1]", 2, q), Err(Error::Parse { position: 0, .. })));
        assert!(parse_polynomial("1.5*x[1,1]", 2, q).is_err());
        assert!(parse_polynomial("x[1,1] x[2,2]", 2, q).is_err());
        assert!(parse_polynomial("", 2, q).is_err());
        assert!(parse_polynomial("1/0", 2, q).is_err());
        assert!(parse_polynomial("1/3", 2, Field::Prime(3)).is_err());
    }

    #[test]
    fn round_trip_json() {
        let q = Field::Rationals;
        let f = parse_polynomial("-2/3*x[1,2]*x[2,1] + x[2,2]^3 + 4", 2, q).unwrap();
        let json = polynomial_to_json(&f);
        let text = serde_json::to_string(&json).unwrap();
        let back: Vec<JsonTerm> = serde_json::from_str(&text).unwrap();
        assert_eq!(polynomial_from_json(&back, 2, q).unwrap(), f);
        assert_eq!(json[0].coeff, "-2/3");
    }

    #[test]
    fn subsets() {
        assert_eq!(parse_subset_pair("S=2,4; T=1,3,4", 5).unwrap(), (vec![2, 4], vec![1, 3, 4]));
        assert_eq!(parse_subset_pair("S=; T=1", 2).unwrap(), (vec![], vec![1]));
        assert!(parse_subset_pair("S=2,2; T=1", 3).is_err());
        assert!(parse_subset_pair("S=1", 3).is_err());
        assert!(parse_subset_pair("S=4; T=1", 3).is_err());
    }
}
