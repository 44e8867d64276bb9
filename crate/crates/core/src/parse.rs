//! Text front end.
//!
//! ```text
//! ring   := FIELD '[' ident (',' ident)* (';' ORDER)? ']' ('/' '(' polys ')')?
//! FIELD  := 'QQ' | 'Fp' | 'Fp(' prime ')' | 'GF(' prime ')'
//! ORDER  := 'degrevlex' | 'lex'
//! polys  := expr (',' expr)*
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | ident | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication: `xy` is a single identifier.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, DEFAULT_PRIME};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semicolon => write!(f, "`;`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("decimal digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ';' => Tok::Semicolon,
                other => return Err(err(pos, format!("unexpected character `{other}`"))),
            }
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected {want}, found {}", self.peek())))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => Err(err(self.pos(), format!("expected identifier, found {other}"))),
        }
    }

    fn poly_list(&mut self, ring: &Ring, close: &Tok) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        if self.peek() == close {
            return Ok(out);
        }
        loop {
            out.push(self.expr(ring)?);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                return Ok(out);
            }
        }
    }

    fn expr(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut acc = self.term(ring)?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term(ring)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term(ring)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut acc = self.unary(ring)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary(ring)?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary(ring)?;
                    if !d.is_constant() {
                        return Err(err(pos, "division by non-constant"));
                    }
                    let c = match d.leading_term() {
                        Some(t) => t.coeff.clone(),
                        None => return Err(err(pos, "division by zero")),
                    };
                    acc = acc.scale(&c.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self, ring: &Ring) -> Result<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary(ring)?)
            }
            Tok::Plus => {
                self.bump();
                self.unary(ring)
            }
            _ => self.power(ring),
        }
    }

    fn power(&mut self, ring: &Ring) -> Result<Polynomial> {
        let base = self.atom(ring)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| err(pos, "malformed exponent: too large"))?;
                Ok(base.pow(e))
            }
            Tok::Ident(name) if ring.var_index(&name).is_none() => {
                Err(err(pos, format!("unknown variable `{name}`")))
            }
            other => Err(err(
                pos,
                format!("malformed exponent: expected a non-negative integer, found {other}"),
            )),
        }
    }

    fn atom(&mut self, ring: &Ring) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Polynomial::constant(ring, ring.field().from_bigint(&n))),
            Tok::Ident(name) => match ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(ring, i)),
                None => Err(err(pos, format!("unknown variable `{name}`"))),
            },
            Tok::LParen => {
                let p = self.expr(ring)?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            other => Err(err(pos, format!("expected a term, found {other}"))),
        }
    }

    fn field(&mut self) -> Result<Field> {
        let pos = self.pos();
        let name = self.ident()?;
        match name.as_str() {
            "QQ" => Ok(Field::Rational),
            "Fp" | "GF" => {
                if *self.peek() != Tok::LParen {
                    return if name == "Fp" {
                        Ok(Field::Prime(DEFAULT_PRIME))
                    } else {
                        Err(err(self.pos(), "expected `(` after GF"))
                    };
                }
                self.bump();
                let ppos = self.pos();
                let p = match self.bump() {
                    Tok::Int(n) => u64::try_from(n).map_err(|_| err(ppos, "characteristic too large"))?,
                    other => return Err(err(ppos, format!("expected a prime, found {other}"))),
                };
                self.expect(Tok::RParen)?;
                Field::prime(p).map_err(|e| err(ppos, e.to_string()))
            }
            other => Err(err(pos, format!("unknown field tag `{other}`"))),
        }
    }

    fn end(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(err(self.pos(), format!("unexpected {}", self.peek())))
        }
    }
}

/// Parsed ring description, before the defining ideal is interpreted.
#[derive(Clone, Debug, PartialEq)]
pub struct RingSpec {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub ring: Ring,
}

fn order_name(o: MonomialOrder) -> &'static str {
    match o {
        MonomialOrder::DegRevLex => "degrevlex",
        MonomialOrder::Lex => "lex",
        MonomialOrder::Elimination(_) => "elimination",
    }
}

/// Parses a ring; `field_override` replaces the field tag in the text.
pub fn parse_ring_with_field(text: &str, field_override: Option<Field>) -> Result<Ring> {
    let mut p = Parser::new(text)?;
    let field = p.field()?;
    let field = field_override.unwrap_or(field);
    p.expect(Tok::LBracket)?;
    let mut vars = Vec::new();
    let mut seen_pos = Vec::new();
    if *p.peek() != Tok::RBracket && *p.peek() != Tok::Semicolon {
        loop {
            seen_pos.push(p.pos());
            vars.push(p.ident()?);
            if *p.peek() == Tok::Comma {
                p.bump();
            } else {
                break;
            }
        }
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(err(seen_pos[i], format!("duplicate variable `{v}`")));
        }
    }
    let mut order = MonomialOrder::DegRevLex;
    if *p.peek() == Tok::Semicolon {
        p.bump();
        let pos = p.pos();
        order = match p.ident()?.as_str() {
            "degrevlex" | "grevlex" => MonomialOrder::DegRevLex,
            "lex" => MonomialOrder::Lex,
            other => return Err(err(pos, format!("unknown monomial order `{other}`"))),
        };
    }
    p.expect(Tok::RBracket)?;
    let ring = Ring::new(field, vars, order)?;
    if *p.peek() == Tok::Slash {
        p.bump();
        p.expect(Tok::LParen)?;
        let rels = p.poly_list(&ring, &Tok::RParen)?;
        p.expect(Tok::RParen)?;
        p.end()?;
        return ring.quotient(&rels);
    }
    p.end()?;
    Ok(ring)
}

/// A field tag on its own: `QQ`, `Fp`, `Fp(p)` or `GF(p)`.
pub fn parse_field(text: &str) -> Result<Field> {
    let mut p = Parser::new(text)?;
    let field = p.field()?;
    p.end()?;
    Ok(field)
}

pub fn parse_ring(text: &str) -> Result<Ring> {
    parse_ring_with_field(text, None)
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let ring = parse_ring(text)?;
    Ok(RingSpec {
        field: ring.field(),
        vars: ring.vars().to_vec(),
        order: ring.order(),
        ring,
    })
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", self.field, self.vars.join(","))?;
        if self.order != MonomialOrder::DegRevLex {
            write!(f, ";{}", order_name(self.order))?;
        }
        write!(f, "]")?;
        if self.ring.is_quotient() {
            let polys: Vec<String> = self.ring.defining_ideal().iter().map(|p| p.to_string()).collect();
            write!(f, "/({})", polys.join(", "))?;
        }
        Ok(())
    }
}

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser::new(text)?;
    let f = p.expr(ring)?;
    p.end()?;
    Ok(f)
}

/// Comma-separated polynomial list; the empty string is the empty list.
pub fn parse_polys(text: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    let mut p = Parser::new(text)?;
    let fs = p.poly_list(ring, &Tok::End)?;
    p.end()?;
    Ok(fs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_polynomial_ring() {
        let r = parse_ring("QQ[x,y]").unwrap();
        assert_eq!(r.nvars(), 2);
        assert!(!r.is_quotient());
        assert_eq!(r.field(), Field::Rational);
    }

    #[test]
    fn semigroup_ring() {
        let r = parse_ring("QQ[x,y,z]/(y^2-x*z, x^3-z^2)").unwrap();
        assert_eq!(r.nvars(), 3);
        assert!(r.is_quotient());
        assert_eq!(r.dimension(), 1);
    }

    #[test]
    fn duplicate_variable() {
        match parse_ring("QQ[x,x]") {
            Err(Error::Parse { line: 1, column: 6, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_field() {
        assert!(matches!(parse_ring("RR[x]"), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_ring("Fp(32004)[x]"), Err(Error::Parse { .. })));
        assert_eq!(parse_ring("Fp[x]").unwrap().field(), Field::Prime(32003));
        assert_eq!(parse_ring("GF(7)[x]").unwrap().field(), Field::Prime(7));
    }

    #[test]
    fn three_term_polynomial() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let f = parse_poly("x^3 - 2*x*y + 1/2", &r).unwrap();
        assert_eq!(f.terms().len(), 3);
        assert_eq!(f.to_string(), "x^3 - 2*x*y + 1/2");
    }

    #[test]
    fn binomial() {
        let r = parse_ring("QQ[x,y,z]").unwrap();
        assert_eq!(parse_poly("y^2 - x*z", &r).unwrap().to_string(), "y^2 - x*z");
        assert_eq!(parse_poly("-x^2", &r).unwrap().to_string(), "-x^2");
        assert_eq!(parse_poly("(x+y)^2", &r).unwrap().to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn unknown_variable() {
        let r = parse_ring("QQ[x,y]").unwrap();
        match parse_poly("x^w", &r) {
            Err(Error::Parse { message, column, .. }) => {
                assert!(message.contains("unknown variable"), "{message}");
                assert_eq!(column, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x^y", &r) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("malformed exponent")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x*w", &r) {
            Err(Error::Parse { message, column, .. }) => {
                assert!(message.contains("unknown variable"));
                assert_eq!(column, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        // no implicit multiplication
        assert!(parse_poly("xy", &r).is_err());
    }

    #[test]
    fn division_rules() {
        let r = parse_ring("QQ[x,y]").unwrap();
        assert!(matches!(parse_poly("x/y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/0", &r), Err(Error::Parse { .. })));
        assert_eq!(parse_poly("x/2 + x/2", &r).unwrap().to_string(), "x");
    }

    #[test]
    fn positions_span_lines() {
        let r = parse_ring("QQ[x,y]").unwrap();
        match parse_polys("x,\n  y + q", &r) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_tags() {
        assert_eq!(parse_field("QQ").unwrap(), Field::Rational);
        assert_eq!(parse_field("Fp").unwrap(), Field::Prime(DEFAULT_PRIME));
        assert_eq!(parse_field("GF(101)").unwrap(), Field::Prime(101));
        assert!(parse_field("GF(100)").is_err());
        assert!(parse_field("QQ[x]").is_err());
    }

    #[test]
    fn field_override_reinterprets_coefficients() {
        let r = parse_ring_with_field("QQ[x]/(x^2 - 1/2)", Some(Field::Prime(7))).unwrap();
        assert_eq!(r.field(), Field::Prime(7));
        // 1/2 = 4 in F_7, so x^2 - 4 = x^2 + 3
        assert_eq!(r.defining_ideal()[0].to_string(), "x^2 + 3");
    }

    #[test]
    fn ring_spec_round_trip() {
        for text in ["QQ[x,y]", "QQ[x,y,z]/(y^2-x*z, x^3-z^2)", "Fp(101)[a,b;lex]/(a^2 - b)"] {
            let spec = parse_ring_spec(text).unwrap();
            let again = parse_ring_spec(&spec.to_string()).unwrap();
            assert_eq!(spec, again, "{text}");
        }
    }

    fn poly_text() -> impl Strategy<Value = Vec<(i64, i64, u32, u32, u32)>> {
        proptest::collection::vec((-9i64..10, 1i64..5, 0u32..4, 0u32..4, 0u32..4), 0..6)
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in poly_text(), prime in any::<bool>()) {
            let ring = if prime { parse_ring("Fp(32003)[x,y,z]") } else { parse_ring("QQ[x,y,z]") }.unwrap();
            let mut f = Polynomial::zero(&ring);
            for (n, d, a, b, c) in terms {
                let t = parse_poly(&format!("{n}/{d}*x^{a}*y^{b}*z^{c}"), &ring).unwrap();
                f = &f + &t;
            }
            prop_assert_eq!(parse_poly(&f.to_string(), &ring).unwrap(), f);
        }

        #[test]
        fn shuffled_terms_canonicalize_identically(
            terms in proptest::collection::vec((-5i64..6, 0u32..3, 0u32..3), 0..8),
            seed in any::<u64>(),
        ) {
            let ring = parse_ring("QQ[x,y]").unwrap();
            let parts: Vec<String> = terms.iter().map(|(c, a, b)| format!("{c}*x^{a}*y^{b}")).collect();
            let mut shuffled = parts.clone();
            let n = shuffled.len();
            for i in 0..n {
                let j = (seed.rotate_left(i as u32) as usize) % n;
                shuffled.swap(i, j);
            }
            let join = |v: &[String]| if v.is_empty() { "0".to_string() } else { v.join(" + ") };
            prop_assert_eq!(parse_poly(&join(&parts), &ring).unwrap(), parse_poly(&join(&shuffled), &ring).unwrap());
        }
    }
}
