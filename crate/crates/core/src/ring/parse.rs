//! Ring element syntax and the line-oriented presentation format.
//!
//! ```text
//! ring NAME
//! topdeg D
//! gen NAME DEGREE
//! sq NAME I = ELEMENT
//! rel NAME^K = ELEMENT
//! cover NAME by ELEMENT
//! ```
//! `#` starts a comment. Elements are sums of monomials such as
//! `alpha^3*beta`, or the literals `0` and `1`.

use super::monomial::{toggle, Monomial, Terms};
use super::{RingBuilder, RingError, RingPresentation};
use crate::syntax::{Cursor, ParseError};

/// Parses an element over generators resolved by `lookup` (name to index
/// and degree). The result is not normalized.
pub(crate) fn parse_terms(
    text: &str,
    lookup: &dyn Fn(&str) -> Option<(u32, u32)>,
) -> Result<Terms, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Terms::new();
    loop {
        cur.skip_ws();
        if let Some(m) = parse_monomial(&mut cur, lookup)? {
            toggle(&mut out, m);
        }
        cur.skip_ws();
        if cur.at_end() {
            return Ok(out);
        }
        if !cur.eat('+') {
            return Err(cur.error("expected '+' or end of input"));
        }
    }
}

fn parse_monomial(
    cur: &mut Cursor<'_>,
    lookup: &dyn Fn(&str) -> Option<(u32, u32)>,
) -> Result<Option<Monomial>, ParseError> {
    if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        let col = cur.column();
        return match cur.integer()? {
            0 => Ok(None),
            1 => Ok(Some(Monomial::one())),
            _ => Err(ParseError::at(col, "only the literals 0 and 1 are allowed")),
        };
    }
    let mut factors = Vec::new();
    let mut degrees = Vec::new();
    loop {
        cur.skip_ws();
        let col = cur.column();
        let name = cur.ident().ok_or_else(|| cur.error("expected a generator name"))?;
        let (g, d) = lookup(name).ok_or_else(|| ParseError::at(col, format!("unknown generator '{name}'")))?;
        cur.skip_ws();
        let mut e = 1u32;
        if cur.eat('^') {
            cur.skip_ws();
            let ecol = cur.column();
            e = u32::try_from(cur.integer()?).map_err(|_| ParseError::at(ecol, "exponent out of range"))?;
            cur.skip_ws();
        }
        factors.push((g, e));
        degrees.push((g, d));
        if !cur.eat('*') {
            break;
        }
    }
    let degree_of = |g: u32| degrees.iter().find(|(h, _)| *h == g).map(|(_, d)| *d).unwrap_or(0);
    Ok(Some(Monomial::from_factors(factors, degree_of)))
}

impl RingPresentation {
    /// Parses and normalizes an element of this ring.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let lookup = |name: &str| self.generator_index(name).map(|g| (g, self.generator_degree(g)));
        Ok(self.normalize(parse_terms(text, &lookup)?))
    }
}

use super::RingElement;

/// Parses a presentation file. Errors carry the 1-based line number.
pub fn parse_presentation(text: &str) -> Result<RingPresentation, RingError> {
    let mut builder: Option<RingBuilder> = None;
    let mut covered = false;
    let mut top_set = false;
    for (n, raw_line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw_line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let at = |e: RingError| e.at_line(line_no);
        let indent = line.len() - line.trim_start().len();
        let line = line.trim();
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest_offset = indent + line.len() - rest.len();
        let syntax = |msg: String, col: usize| RingError::Parse(ParseError::at(col, msg).on_line(line_no, 0));

        if keyword == "ring" {
            if builder.is_some() {
                return Err(syntax("duplicate 'ring' line".into(), 1));
            }
            let name = single_ident(rest).ok_or_else(|| syntax("expected: ring NAME".into(), rest_offset + 1))?;
            builder = Some(RingBuilder::new(name));
            continue;
        }
        let b = builder
            .as_mut()
            .ok_or_else(|| syntax("presentation must start with 'ring NAME'".into(), 1))?;
        let terms_at = |b: &RingBuilder, text: &str, offset: usize| {
            b.parse_terms(text).map_err(|e| RingError::Parse(e.on_line(line_no, offset)))
        };
        match keyword {
            "topdeg" => {
                if top_set {
                    return Err(syntax("duplicate 'topdeg' line".into(), 1));
                }
                if covered {
                    return Err(at(RingError::TopDegreeAfterCover));
                }
                let d = rest.trim().parse::<u32>().map_err(|_| syntax("expected: topdeg D".into(), rest_offset + 1))?;
                b.set_top_degree(Some(d));
                top_set = true;
            }
            "gen" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, degree] = parts[..] else {
                    return Err(syntax("expected: gen NAME DEGREE".into(), rest_offset + 1));
                };
                if single_ident(name).is_none() {
                    return Err(syntax(format!("invalid generator name '{name}'"), rest_offset + 1));
                }
                let degree = degree
                    .parse::<u32>()
                    .map_err(|_| syntax(format!("invalid degree '{degree}'"), rest_offset + 1))?;
                b.add_generator(name, degree).map_err(at)?;
            }
            "sq" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax("expected: sq NAME I = ELEMENT".into(), rest_offset + 1))?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                let [name, i] = parts[..] else {
                    return Err(syntax("expected: sq NAME I = ELEMENT".into(), rest_offset + 1));
                };
                let i = i.parse::<u32>().map_err(|_| syntax(format!("invalid index '{i}'"), rest_offset + 1))?;
                let value = terms_at(b, rhs, rest_offset + lhs.len() + 1)?;
                b.add_sq_entry(name, i, value).map_err(at)?;
            }
            "rel" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax("expected: rel NAME^K = ELEMENT".into(), rest_offset + 1))?;
                let (name, k) = lhs
                    .trim()
                    .split_once('^')
                    .ok_or_else(|| syntax("expected: rel NAME^K = ELEMENT".into(), rest_offset + 1))?;
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| syntax(format!("invalid exponent '{}'", k.trim()), rest_offset + 1))?;
                let value = terms_at(b, rhs, rest_offset + lhs.len() + 1)?;
                b.add_power_rule(name.trim(), k, value).map_err(at)?;
            }
            "cover" => {
                let (name, eps) = rest
                    .split_once(" by ")
                    .ok_or_else(|| syntax("expected: cover NAME by ELEMENT".into(), rest_offset + 1))?;
                let name = name.trim();
                if single_ident(name).is_none() {
                    return Err(syntax(format!("invalid generator name '{name}'"), rest_offset + 1));
                }
                let eps = terms_at(b, eps, rest_offset + rest.find(" by ").unwrap_or(0) + 4)?;
                b.add_cover(name, eps).map_err(at)?;
                covered = true;
            }
            other => return Err(syntax(format!("unknown keyword '{other}'"), indent + 1)),
        }
    }
    builder.ok_or(RingError::Parse(ParseError::at(1, "empty presentation").on_line(1, 0)))?.build()
}

fn single_ident(s: &str) -> Option<&str> {
    let s = s.trim();
    let mut cur = Cursor::new(s);
    let id = cur.ident()?;
    cur.at_end().then_some(id)
}
