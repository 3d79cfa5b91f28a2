//! Text form of magma polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr     := ['-'] term | expr '+' term | expr '-' term
//! term     := [coeff] monomial
//! monomial := atom | '(' monomial ')' '(' monomial ')' | atom '(' monomial ')'
//!           | gen gen
//! atom     := gen | atom '^' integer
//! gen      := 'x' | 'y'
//! coeff    := integer | integer '/' integer
//! ```
//!
//! `g^n` is sugar for the principal power. Two bare generators may be
//! juxtaposed (`xx`, `xy`), which is how nested forms like
//! `x(x((xx)(xx)))` are written; any other juxtaposition needs explicit
//! grouping — `x^2 x^2` is a syntax error, the binary form `(x^2)(x^2)` is
//! required. The bare string `0` denotes the zero polynomial. Rendering (in
//! [`crate::magma`]) emits only forms this grammar accepts, so
//! `parse(render(p)) == p`.

use crate::linalg::Rat;
use crate::magma::{Generator, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{}', found '{}'", c as char, got as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .to_string())
    }

    /// `integer | integer '/' integer`, digits only; the sign is handled by
    /// the expression level.
    fn coeff(&mut self) -> Result<Rat, ParseError> {
        let numer = self.integer()?;
        let mut text = numer;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = self.integer()?;
            text.push('/');
            text.push_str(&denom);
        }
        text.parse::<Rat>().map_err(|e| ParseError {
            position: self.pos,
            message: e.to_string(),
        })
    }

    fn generator(&mut self) -> Result<Generator, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Generator::X)
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Generator::Y)
            }
            Some(c) => self.err(format!("expected 'x' or 'y', found '{}'", c as char)),
            None => self.err("expected 'x' or 'y', found end of input"),
        }
    }

    /// `atom := ('x'|'y') ('^' integer)*`, powers associating leftwards.
    /// Two bare generators in a row form their product: `xy`, `xx`.
    fn atom(&mut self) -> Result<Monomial, ParseError> {
        let g = self.generator()?;
        if matches!(self.peek(), Some(b'x') | Some(b'y')) {
            let h = self.generator()?;
            return Ok(Monomial::product(
                Monomial::generator(g),
                Monomial::generator(h),
            ));
        }
        let mut m = Monomial::generator(g);
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let pos = self.pos;
            let n: u32 = self.integer()?.parse().map_err(|_| ParseError {
                position: pos,
                message: "power out of range".into(),
            })?;
            if n == 0 {
                return Err(ParseError {
                    position: pos,
                    message: "powers start at 1".into(),
                });
            }
            m = Monomial::power(&m, n);
        }
        Ok(m)
    }

    fn parenthesized(&mut self) -> Result<Monomial, ParseError> {
        self.expect(b'(')?;
        let m = self.monomial()?;
        self.expect(b')')?;
        Ok(m)
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        let head = match self.peek() {
            Some(b'(') => self.parenthesized()?,
            _ => self.atom()?,
        };
        if self.peek() == Some(b'(') {
            let tail = self.parenthesized()?;
            return Ok(Monomial::product(head, tail));
        }
        Ok(head)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.coeff()?,
            _ => Rat::one(),
        };
        // A lone "0" is the zero polynomial; any other bare coefficient
        // needs a monomial (the algebra has no constants).
        match self.peek() {
            Some(b'x') | Some(b'y') | Some(b'(') => {
                let m = self.monomial()?;
                Ok(Polynomial::term(m, coeff))
            }
            _ if coeff.is_zero() => Ok(Polynomial::zero()),
            _ => self.err("expected a monomial"),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
                None => return Ok(acc),
            }
        }
    }
}

/// Parses a polynomial from its text form.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    if cur.pos == cur.input.len() {
        return cur.err("empty input");
    }
    cur.expr()
}

/// Parses a single monomial (no coefficient, no sums).
pub fn parse_monomial(input: &str) -> Result<Monomial, ParseError> {
    let mut cur = Cursor::new(input);
    let m = cur.monomial()?;
    if cur.peek().is_some() {
        return cur.err("trailing input after monomial");
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{Generator, Monomial};

    fn xp(n: u32) -> Monomial {
        Monomial::principal_power(Generator::X, n)
    }

    #[test]
    fn principal_power_sugar() {
        assert_eq!(parse_monomial("x^4").unwrap(), xp(4));
        assert_eq!(parse_monomial("x^3").unwrap(), xp(3));
        assert_eq!(parse_monomial("x(x(xx))").unwrap(), xp(4));
        assert_eq!(parse_monomial("x(x((x)(x)))").unwrap(), xp(4));
    }

    #[test]
    fn nested_form_of_the_degree_six_word() {
        let b4 = Monomial::product(xp(2), xp(2));
        let expected = Monomial::product(Monomial::x(), Monomial::product(Monomial::x(), b4));
        assert_eq!(parse_monomial("x(x((xx)(xx)))").unwrap(), expected);
        assert_eq!(parse_monomial("x(x((x^2)(x^2)))").unwrap(), expected);
    }

    #[test]
    fn bare_generator_pairs() {
        assert_eq!(
            parse_monomial("xy").unwrap(),
            Monomial::product(Monomial::x(), Monomial::y())
        );
        assert_eq!(parse_monomial("xx").unwrap(), xp(2));
        assert_eq!(
            parse_monomial("x^2(xy)").unwrap(),
            Monomial::product(xp(2), Monomial::product(Monomial::x(), Monomial::y()))
        );
        // Powers do not attach to a juxtaposed pair.
        assert!(parse_polynomial("xy^2").is_err());
    }

    #[test]
    fn juxtaposition_of_powers_requires_grouping() {
        let err = parse_polynomial("x^2 x^2").unwrap_err();
        assert!(err.position >= 3);
        assert!(parse_polynomial("(x^2)(x^2)").is_ok());
        assert!(parse_polynomial("x^2(x^2)").is_ok());
    }

    #[test]
    fn unbalanced_parentheses_are_reported() {
        assert!(parse_polynomial("x(x(x)").is_err());
        assert!(parse_polynomial("x)").is_err());
    }

    #[test]
    fn coefficients_and_signs() {
        let p = parse_polynomial("2x^2 - 1/2 y + x(y)").unwrap();
        assert_eq!(p.coeff(&xp(2)), crate::linalg::Rat::from_int(2));
        assert_eq!(
            p.coeff(&Monomial::y()),
            crate::linalg::Rat::new(-1, 2).unwrap()
        );
        assert_eq!(
            p.coeff(&Monomial::product(Monomial::x(), Monomial::y())),
            crate::linalg::Rat::one()
        );
        assert_eq!(
            parse_polynomial("0").unwrap(),
            crate::magma::Polynomial::zero()
        );
        assert_eq!(
            parse_polynomial("-x + x").unwrap(),
            crate::magma::Polynomial::zero()
        );
    }

    #[test]
    fn render_parse_round_trip_on_fixed_cases() {
        for s in [
            "x^2",
            "(x^2)(x^3)",
            "x(y)",
            "2(x(y))(x(y)) + (x^2)(y^2)",
            "y(x^3) + x(y(x^2)) + 2x(x(x(y)))",
            "0",
            "-x^4 + 1/2x^2",
        ] {
            let p = parse_polynomial(s).unwrap();
            assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p, "via {s}");
        }
    }
}
