//! Text syntax for Steenrod algebra elements.
//!
//! ```text
//! word  := factor+            factor := "Sq" INT | "S" INT
//! elem  := word ("+" word)* | "0" | "1"
//! ```
//! `S j` expands to `S_j`; exponent 0 is rejected.

use super::{s_element, AdemElement, SquareWord};
use crate::syntax::{Cursor, ParseError};

pub fn parse_adem(text: &str) -> Result<AdemElement, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = AdemElement::zero();
    loop {
        cur.skip_ws();
        out += parse_term(&mut cur)?;
        cur.skip_ws();
        if cur.at_end() {
            return Ok(out);
        }
        if !cur.eat('+') {
            return Err(cur.error("expected '+' or end of input"));
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<AdemElement, ParseError> {
    match cur.peek() {
        Some('0') | Some('1') => {
            let col = cur.column();
            let n = cur.integer()?;
            return match n {
                0 => Ok(AdemElement::zero()),
                1 => Ok(AdemElement::unit()),
                _ => Err(ParseError::at(col, "only the literals 0 and 1 may stand alone")),
            };
        }
        None => return Err(cur.error("expected a term")),
        _ => {}
    }
    let mut exponents: Vec<u32> = Vec::new();
    loop {
        let col = cur.column();
        let Some(name) = cur.ident() else {
            if exponents.is_empty() {
                return Err(cur.error("expected 'Sq' or 'S'"));
            }
            break;
        };
        // "Sq12" lexes as one identifier; split the trailing digits off.
        let (head, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
        let (head, digits) = match (head, digits) {
            (h, "") => {
                cur.eat('^');
                (h, None)
            }
            (h, d) => (h, Some(d)),
        };
        let n = match digits {
            Some(d) if d.chars().all(|c| c.is_ascii_digit()) => d
                .parse::<u64>()
                .map_err(|_| ParseError::at(col, "integer out of range"))?,
            Some(_) => return Err(ParseError::at(col, format!("unexpected token '{name}'"))),
            None => cur.integer()?,
        };
        let n = u32::try_from(n).map_err(|_| ParseError::at(col, "exponent out of range"))?;
        match head {
            "Sq" => {
                if n == 0 {
                    return Err(ParseError::at(col, "exponent 0 is not allowed"));
                }
                exponents.push(n);
            }
            "S" => {
                let s = s_element(n).map_err(|e| ParseError::at(col, e.to_string()))?;
                let word = s.words().next().cloned().unwrap_or_default();
                exponents.extend_from_slice(word.exponents());
            }
            _ => return Err(ParseError::at(col, format!("unknown operation '{head}'"))),
        }
        cur.skip_ws();
        if !matches!(cur.peek(), Some('S')) {
            break;
        }
    }
    Ok(SquareWord::new(exponents).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_words_and_sums() {
        assert_eq!(parse_adem("Sq7 Sq3").unwrap(), AdemElement::from_exponents([7, 3]));
        assert_eq!(parse_adem("Sq^7 Sq^3").unwrap(), AdemElement::from_exponents([7, 3]));
        assert_eq!(
            parse_adem("Sq3+Sq2 Sq1").unwrap(),
            &AdemElement::sq(3) + &AdemElement::from_exponents([2, 1])
        );
        assert_eq!(parse_adem(" 0 ").unwrap(), AdemElement::zero());
        assert_eq!(parse_adem("1").unwrap(), AdemElement::unit());
        assert_eq!(parse_adem("Sq3 + Sq3").unwrap(), AdemElement::zero());
    }

    #[test]
    fn aliases_expand() {
        assert_eq!(parse_adem("S3").unwrap(), AdemElement::from_exponents([7, 3]));
        assert_eq!(parse_adem("S1").unwrap(), AdemElement::unit());
        assert_eq!(parse_adem("S2 Sq1").unwrap(), AdemElement::from_exponents([3, 1]));
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_adem("Sq2 Sq0").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(e.message.contains("exponent 0"));
        assert_eq!(parse_adem("Sq2 +").unwrap_err().column, 6);
        assert!(parse_adem("Sq2 Sqx").is_err());
        assert!(parse_adem("Foo3").is_err());
        assert!(parse_adem("").is_err());
        assert!(parse_adem("S0").is_err());
        assert!(parse_adem("2").is_err());
        assert!(parse_adem("Sq2 Sq2 junk").is_err());
    }
}
