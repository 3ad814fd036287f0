//! Text syntax for polynomials.
//!
//! ```text
//! expr := term ("+" term)*
//! term := nat | [nat] "y" ["^" nat]
//! nat  := digit+
//! ```
//!
//! Whitespace may appear between any two tokens. A term `c y^e` contributes
//! `c` positions of exponent `e`; a bare `nat` is `nat · y^0`.

use std::fmt;

use thiserror::Error;

use crate::poly::FinPoly;

/// Largest number of positions a parsed expression may describe.
pub const MAX_PARSED_POSITIONS: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
    pub found: Found,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Found {
    Char(char),
    End,
    Overflow,
}

impl fmt::Display for Found {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Found::Char(c) => write!(f, "{c:?}"),
            Found::End => f.write_str("end of input"),
            Found::Overflow => f.write_str("a number that is too large"),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<FinPoly, ParseError> {
    let mut parser = Parser {
        text,
        pos: 0,
        exponents: Vec::new(),
    };
    parser.expr()?;
    Ok(FinPoly::canonicalize(parser.exponents))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    exponents: Vec<usize>,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        let rest = &self.text[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.chars().next()
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        let found = self.peek().map_or(Found::End, Found::Char);
        ParseError {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn expr(&mut self) -> Result<(), ParseError> {
        self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    self.term()?;
                }
                None => return Ok(()),
                Some(_) => return Err(self.error("'+' or end of input")),
            }
        }
    }

    fn term(&mut self) -> Result<(), ParseError> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.nat()?),
            Some('y') => None,
            _ => return Err(self.error("a number or 'y'")),
        };
        let exponent = if self.peek() == Some('y') {
            self.pos += 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => self.nat()?,
                    _ => return Err(self.error("an exponent")),
                }
            } else {
                1
            }
        } else {
            0
        };
        let start = self.pos;
        let count = coefficient.unwrap_or(1);
        if self.exponents.len().saturating_add(count) > MAX_PARSED_POSITIONS {
            return Err(ParseError {
                offset: start,
                expected: "a polynomial of manageable size",
                found: Found::Overflow,
            });
        }
        self.exponents.extend(std::iter::repeat_n(exponent, count));
        Ok(())
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let digits = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += digits;
        self.text[start..self.pos].parse().map_err(|_| ParseError {
            offset: start,
            expected: "a number",
            found: Found::Overflow,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(text: &str) -> Vec<usize> {
        parse_poly(text).unwrap().exponents().to_vec()
    }

    #[test]
    fn parses_worked_sample() {
        assert_eq!(exps("y^4 + 4y"), vec![4, 1, 1, 1, 1]);
        assert_eq!(exps("  y ^ 4+4 y "), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn parses_constants() {
        assert_eq!(exps("0"), Vec::<usize>::new());
        assert_eq!(exps("1"), vec![0]);
        assert_eq!(exps("3 + 0y^2"), vec![0, 0, 0]);
    }

    #[test]
    fn expands_coefficients() {
        assert_eq!(exps("2y^3+5y^2+1"), vec![3, 3, 2, 2, 2, 2, 2, 0]);
        assert_eq!(exps("y^0"), vec![0]);
    }

    #[test]
    fn reports_offsets() {
        let err = parse_poly("y^4 + ").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.found, Found::End);

        let err = parse_poly("y^4 * 2").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.expected, "'+' or end of input");
        assert_eq!(err.found, Found::Char('*'));

        let err = parse_poly("y^").unwrap_err();
        assert_eq!(err.expected, "an exponent");

        assert_eq!(parse_poly("").unwrap_err().offset, 0);
        assert_eq!(parse_poly("x").unwrap_err().found, Found::Char('x'));
        assert_eq!(parse_poly("(y+1)").unwrap_err().offset, 0);
    }

    #[test]
    fn rejects_huge_inputs() {
        let err = parse_poly("99999999999999999999999y").unwrap_err();
        assert_eq!(err.found, Found::Overflow);
        assert_eq!(parse_poly("100000000y").unwrap_err().found, Found::Overflow);
    }

    #[test]
    fn error_message() {
        let err = parse_poly("y + + y").unwrap_err();
        assert_eq!(
            err.to_string(),
            "syntax error at byte 4: expected a number or 'y', found '+'"
        );
    }
}
