//! Element-expression parser.
//!
//! Grammar:
//!
//! ```text
//! element  := expr ('/' expr)?          -- the fraction form only for
//!                                          localized instances
//! expr     := '-'? term (('+'|'-') term)*
//! term     := coeff ('*'? mono)? | mono
//! mono     := 'x' ('^' exponent)?
//! exponent := natural | '(' rational (',' rational)? ')'
//! coeff    := rational | 'gauss' '(' rational ',' rational ')'
//! rational := natural ('/' natural)?
//! ```
//!
//! The result is a canonical polynomial (or fraction) in the target
//! instance's ambient representation; membership is *not* implied.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Coeff, CoeffRing, GaussRat, Int, Rat};
use crate::poly::{Exp, Poly};
use crate::semidomain::{Element, Fraction, SemidomainInstance};

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    ring: CoeffRing,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }


    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn natural(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).expect("digits");
        Ok(s.parse::<Int>().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<Rat> {
        self.rational_with(true)
    }

    fn rational_with(&mut self, allow_fraction: bool) -> Result<Rat> {
        let neg = self.eat(b'-');
        let num = self.natural()?;
        let den = if allow_fraction && self.eat(b'/') {
            let d = self.natural()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            d
        } else {
            Int::one()
        };
        let q = Rat::new(num, den);
        Ok(if neg { -q } else { q })
    }

    fn looks_like_gauss(&mut self) -> bool {
        self.skip_ws();
        self.text[self.pos..].starts_with(b"gauss")
    }

    fn coeff(&mut self) -> Result<Coeff> {
        if self.looks_like_gauss() {
            self.pos += 5;
            self.expect(b'(')?;
            let re = self.rational()?;
            self.expect(b',')?;
            let im = self.rational()?;
            self.expect(b')')?;
            if self.ring != CoeffRing::Gauss {
                return Err(Error::RingMismatch);
            }
            return Ok(Coeff::Gauss(GaussRat::new(re, im)));
        }
        // integer rings own no `/` in coefficients; a slash there is the
        // localized-fraction separator
        let q = self.rational_with(self.ring != CoeffRing::Int)?;
        Coeff::from_rat(self.ring, q)
    }

    fn exponent(&mut self) -> Result<Exp> {
        if self.eat(b'(') {
            let a = self.rational()?;
            if self.eat(b',') {
                let b = self.rational()?;
                self.expect(b')')?;
                if self.dim != 2 {
                    return Err(Error::DimensionMismatch);
                }
                return Exp::two_dim(a, b);
            }
            self.expect(b')')?;
            if self.dim != 1 {
                return Err(Error::DimensionMismatch);
            }
            return Exp::one_dim(a);
        }
        let n = self.natural()?;
        if self.dim != 1 {
            return Err(Error::DimensionMismatch);
        }
        Exp::one_dim(Rat::from_integer(n))
    }

    fn mono(&mut self) -> Result<Exp> {
        self.expect(b'x')?;
        if self.eat(b'^') {
            self.exponent()
        } else if self.dim == 1 {
            Ok(Exp::one_dim(Rat::one()).expect("positive"))
        } else {
            Err(Error::DimensionMismatch)
        }
    }

    fn term(&mut self) -> Result<(Exp, Coeff)> {
        // mono alone?
        if self.peek() == Some(b'x') {
            let e = self.mono()?;
            return Ok((e, Coeff::one(self.ring)));
        }
        let c = self.coeff()?;
        self.skip_ws();
        let explicit_star = self.eat(b'*');
        if explicit_star || self.peek() == Some(b'x') {
            let e = self.mono()?;
            Ok((e, c))
        } else {
            Ok((Exp::zero(self.dim), c))
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut items: Vec<(Exp, Coeff)> = Vec::new();
        let mut negate = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            let c = if negate { c.neg() } else { c };
            items.push((e, c));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Poly::from_terms(self.ring, self.dim, items)
    }
}

/// Parse `text` into an element of `inst`'s ambient representation.
pub fn parse_element(text: &str, inst: &SemidomainInstance) -> Result<Element> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        ring: inst.coeff_ring(),
        dim: inst.dim(),
    };
    let num = p.expr()?;
    let elem = if p.peek() == Some(b'/') {
        p.pos += 1;
        if !inst.uses_fractions() {
            return p.err("fraction elements are only valid for localized instances");
        }
        let den = p.expr()?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Element::Frac(Fraction::new(num, den)?)
    } else if inst.uses_fractions() {
        Element::Frac(Fraction::from_poly(num))
    } else {
        Element::Poly(num)
    };
    p.skip_ws();
    if p.pos != p.text.len() {
        return p.err("trailing input");
    }
    Ok(elem)
}

/// Parse a bare exponent (monoid element), dimension taken from the spec.
pub fn parse_exponent(text: &str, dim: usize) -> Result<Exp> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        ring: CoeffRing::Rat,
        dim,
    };
    let e = if p.peek() == Some(b'(') {
        p.exponent()?
    } else {
        let q = p.rational()?;
        if dim != 1 {
            return Err(Error::DimensionMismatch);
        }
        Exp::one_dim(q)?
    };
    p.skip_ws();
    if p.pos != p.text.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
