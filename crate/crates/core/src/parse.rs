//! Parser for monic monomial sums in `x, y, z, w`.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*'? factor)*
//! factor := var ('^' uint)?
//! var    := 'x' | 'y' | 'z' | 'w'
//! ```
//!
//! Whitespace is ignored. Coefficients are not part of the grammar.

use std::fmt;

use crate::error::{Error, Result};

pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

/// Exponents of `x, y, z, w`.
pub type Monomial = [u32; 4];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialAst {
    pub monomials: Vec<Monomial>,
}

impl PolynomialAst {
    pub fn degrees(&self) -> Vec<u32> {
        self.monomials.iter().map(|m| m.iter().sum()).collect()
    }
}

pub fn format_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (v, &e) in VARIABLES.iter().zip(m) {
        match e {
            0 => {}
            1 => s.push(*v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for PolynomialAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.monomials.iter().map(format_monomial).collect();
        write!(f, "{}", terms.join("+"))
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset, message: message.into() })
    }

    fn factor(&mut self, mono: &mut Monomial) -> Result<()> {
        let start = self.pos;
        let Some(c) = self.peek() else {
            return self.syntax(self.pos, "expected a variable, found end of input");
        };
        let at = self.pos;
        let var = match c {
            b'x' => 0,
            b'y' => 1,
            b'z' => 2,
            b'w' => 3,
            c if c.is_ascii_alphabetic() => {
                return Err(Error::UnknownVariable { name: c as char, offset: at });
            }
            c if c.is_ascii_digit() => return self.syntax(at, "coefficients are not supported"),
            c => return self.syntax(at, format!("expected a variable, found '{}'", c as char)),
        };
        self.pos += 1;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let num_start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if num_start == self.pos {
                return self.syntax(num_start, "expected an exponent after '^'");
            }
            let text = std::str::from_utf8(&self.src[num_start..self.pos]).expect("ascii digits");
            exp = text.parse().or_else(|_| self.syntax(num_start, "exponent too large"))?;
            if exp == 0 {
                return Err(Error::ZeroExponent { offset: num_start });
            }
        }
        debug_assert!(self.pos > start);
        mono[var] = mono[var]
            .checked_add(exp)
            .map_or_else(|| self.syntax(at, "exponent too large"), Ok)?;
        Ok(())
    }

    fn term(&mut self) -> Result<Monomial> {
        let mut mono = [0u32; 4];
        self.factor(&mut mono)?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.factor(&mut mono)?;
                }
                Some(c) if c.is_ascii_alphanumeric() => self.factor(&mut mono)?,
                _ => return Ok(mono),
            }
        }
    }
}

pub fn parse(text: &str) -> Result<PolynomialAst> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut monomials = vec![lx.term()?];
    loop {
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                monomials.push(lx.term()?);
            }
            Some(c) => return lx.syntax(lx.pos, format!("unexpected '{}'", c as char)),
        }
    }
    Ok(PolynomialAst { monomials })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn juxtaposition_and_stars() {
        let ast = parse("yzw^3+xyz^3+wxy^3+zwx^3").unwrap();
        assert_eq!(ast.monomials, vec![[0, 1, 1, 3], [1, 1, 3, 0], [1, 3, 0, 1], [3, 0, 1, 1]]);
        assert_eq!(ast.degrees(), vec![5; 4]);
        let starred = parse("y*z*w^3 + x*y*z^3 + w*x*y^3 + z*w*x^3").unwrap();
        assert_eq!(starred, ast);
    }

    #[test]
    fn fermat() {
        let ast = parse("x^5 + y^5 + z^5 + w^5").unwrap();
        assert_eq!(ast.monomials, vec![[5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]]);
        assert_eq!(ast.to_string(), "x^5+y^5+z^5+w^5");
    }

    #[test]
    fn repeated_variables_accumulate() {
        assert_eq!(parse("x x^2 y").unwrap().monomials, vec![[3, 1, 0, 0]]);
        assert_eq!(parse(" x ^ 2 ").unwrap().monomials, vec![[2, 0, 0, 0]]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse("x^5 + + y^5"),
            Err(Error::Syntax { offset: 6, message: "expected a variable, found '+'".into() })
        );
        assert_eq!(parse("x^5 + t^5"), Err(Error::UnknownVariable { name: 't', offset: 6 }));
        assert_eq!(parse("x^0+y"), Err(Error::ZeroExponent { offset: 2 }));
        assert!(matches!(parse("2x^5"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("x^"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("x+y-z"), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse("x*"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x^99999999999"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["xy^4+yz^4+zx^4+w^5", "zw^4+wz^4+wzy^3+yx^4", "x+y+z+w"] {
            let ast = parse(s).unwrap();
            assert_eq!(parse(&ast.to_string()).unwrap(), ast);
        }
    }
}
