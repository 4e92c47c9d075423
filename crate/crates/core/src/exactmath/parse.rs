//! Parser for the polynomial text format produced by `Display for Polynomial`.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! poly  := sign? term (('+' | '-') term)*
//! term  := coeff ('*'? 'x' power?)? | 'x' power?
//! coeff := digits ('/' digits)?
//! power := '^' digits
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Polynomial;

/// Parse failure with the character offset of the offending input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The input followed by a caret under the failing column.
    pub fn caret_display(&self) -> String {
        format!("{}\n{}^", self.input, " ".repeat(self.position))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at column {}\n{}",
            self.message,
            self.position + 1,
            self.caret_display()
        )
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input,
            chars: input.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.input.to_string(),
            position: self.pos.min(self.chars.len()),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("ascii digits parse as BigInt"))
    }

    fn coefficient(&mut self) -> Result<BigRational, ParseError> {
        let num = self.digits()?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                self.pos = at;
                self.skip_ws();
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn power(&mut self) -> Result<usize, ParseError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let at = self.pos;
        let exp = self.digits()?;
        usize::try_from(exp).map_err(|_| {
            self.pos = at;
            self.error("exponent too large")
        })
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                let n = self.power()?;
                Ok(Polynomial::monomial(BigRational::one(), n))
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                let explicit_mul = self.eat('*');
                if self.peek() == Some('x') {
                    self.pos += 1;
                    let n = self.power()?;
                    Ok(Polynomial::monomial(c, n))
                } else if explicit_mul {
                    Err(self.error("expected 'x' after '*'"))
                } else {
                    Ok(Polynomial::constant(c))
                }
            }
            Some(_) => Err(self.error("expected a coefficient or 'x'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = Polynomial::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                None => return Ok(acc),
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(_) => return Err(self.error("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }
}

/// Parses text such as `1/3*x^3 - 1/2*x^2 + 1/6*x`.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    Parser::new(input).polynomial()
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}
