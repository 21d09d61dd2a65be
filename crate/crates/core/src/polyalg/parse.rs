//! Text grammar shared by scalars and polynomials.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" integer)?
//! atom  := integer | name | "(" expr ")"
//! name  := x1 | x2 | x3 | y1 | y2 | y3 | k | kappa | w | omega | tau
//! ```
//! Division is only allowed by parameter-only expressions.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::scalars::{ParamScalar, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{}'", c)));
        }
    }
    Ok(out)
}

trait Alg: Sized + Clone {
    fn num(r: Rational) -> Self;
    fn name(n: &str) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;
}

fn param_name(n: &str) -> Option<ParamScalar> {
    match n {
        "k" | "kappa" => Some(ParamScalar::kappa()),
        "w" | "omega" => Some(ParamScalar::omega()),
        "tau" => Some(ParamScalar::tau()),
        _ => None,
    }
}

impl Alg for ParamScalar {
    fn num(r: Rational) -> Self {
        ParamScalar::from_rational(r)
    }
    fn name(n: &str) -> Result<Self> {
        param_name(n).ok_or_else(|| Error::Parse(format!("unknown name '{}'", n)))
    }
    fn add(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        self.div_ref(o)
    }
    fn neg(&self) -> Self {
        ParamScalar::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        ParamScalar::pow(self, e)
    }
}

impl Alg for MultiPoly {
    fn num(r: Rational) -> Self {
        MultiPoly::constant(6, ParamScalar::from_rational(r))
    }
    fn name(n: &str) -> Result<Self> {
        if let Some(s) = param_name(n) {
            return Ok(MultiPoly::constant(6, s));
        }
        let idx = match n {
            "x1" => 0,
            "x2" => 1,
            "x3" => 2,
            "y1" => 3,
            "y2" => 4,
            "y3" => 5,
            _ => return Err(Error::Parse(format!("unknown name '{}'", n))),
        };
        Ok(MultiPoly::var(6, idx))
    }
    fn add(&self, o: &Self) -> Self {
        MultiPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        MultiPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        MultiPoly::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.degree() > 0 || o.is_zero() {
            return Err(Error::Parse("division by a non-constant polynomial".into()));
        }
        Ok(self.scale(&o.constant_term().inv()?))
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        MultiPoly::pow(self, e)
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr<A: Alg>(&mut self) -> Result<A> {
        let mut acc = self.term::<A>()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term::<A>()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term<A: Alg>(&mut self) -> Result<A> {
        let mut acc = self.unary::<A>()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary::<A>()?;
            acc = if c == '*' { acc.mul(&rhs) } else { acc.div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary<A: Alg>(&mut self) -> Result<A> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.unary::<A>()?.neg());
        }
        if let Some(Tok::Op('+')) = self.peek() {
            self.pos += 1;
            return self.unary::<A>();
        }
        self.power::<A>()
    }

    fn power<A: Alg>(&mut self) -> Result<A> {
        let base = self.atom::<A>()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e = n.to_u32().ok_or_else(|| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom<A: Alg>(&mut self) -> Result<A> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(A::num(Rational::from_integer(n))),
            Some(Tok::Name(s)) => A::name(&s),
            Some(Tok::Op('(')) => {
                let e = self.expr::<A>()?;
                match self.next() {
                    Some(Tok::Op(')')) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

fn parse_with<A: Alg>(s: &str) -> Result<A> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let v = p.expr::<A>()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

impl ParamScalar {
    /// Parse the scalar text grammar (`k`, `w`, `tau`, integers, `+ - * / ^`).
    pub fn parse(s: &str) -> Result<ParamScalar> {
        parse_with::<ParamScalar>(s)
    }
}

impl MultiPoly {
    /// Parse a polynomial; arity is 3 unless a y-variable occurs, then 6.
    pub fn parse(s: &str) -> Result<MultiPoly> {
        let p = parse_with::<MultiPoly>(s)?;
        let used = p.terms().map(|(m, _)| m.used_arity()).max().unwrap_or(0);
        Ok(p.with_arity_unchecked(if used > 3 { 6 } else { 3 }))
    }
}

impl MultiPoly {
    fn with_arity_unchecked(self, arity: usize) -> MultiPoly {
        let terms: Vec<(Monomial, ParamScalar)> = self.into_terms().into_iter().collect();
        MultiPoly::from_terms(arity, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_scalar() {
        let s = ParamScalar::parse("(6*k + 1)*(5*k + 1/2) / (2*w)").unwrap();
        let t = ParamScalar::parse(&s.to_string()).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn roundtrip_poly() {
        let p = MultiPoly::parse("(tau*x2 + x3)^2 + 2*k*(tau + 2)*(x1^2 + x2^2 + x3^2) - 3/w").unwrap();
        let q = MultiPoly::parse(&p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.arity(), 3);
        let r = MultiPoly::parse("x1*y2 - x2*y1").unwrap();
        assert_eq!(r.arity(), 6);
    }
}
