//! Text and JSON forms of symmetric functions.
//!
//! The text grammar is a small arithmetic language:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := ('+'|'-') factor | atom ['^' int]
//! atom   := int | basis '[' parts ']' | 'a' int | '(' expr ')'
//! ```
//!
//! `basis` is one of `m e h p s w`, so `3*m[2,1] - 1/2*p[3] + s[1,1]` is a
//! valid input. `a3` is the ghost symbol `a₃`, i.e. `ψ₃`. Division is only
//! by constants. `±`/`∓` are expanded by [`expand_plus_minus`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{convert, BasisTag, SymFunc, Terms};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{parse_q, q, Q};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Parts(Vec<usize>),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Num(text.parse().expect("digits")));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if c == '[' {
            let close = chars[i..]
                .iter()
                .position(|&x| x == ']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            let text: String = chars[i..=i + close].iter().collect();
            let p: Partition = text.parse()?;
            out.push(Token::Parts(p.parts().to_vec()));
            i += close + 1;
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

/// Target of the parser: anything with the operations the grammar needs.
trait Algebra: Sized + Clone {
    fn number(n: Q) -> Self;
    fn atom(name: &str, parts: Partition) -> Result<Self>;
    fn ghost(index: usize) -> Result<Self>;
    fn add(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn as_constant(&self) -> Option<Q>;
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.source))
    }

    fn expr<A: Algebra>(&mut self) -> Result<A> {
        let mut acc = self.term::<A>()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let mut rhs = self.term::<A>()?;
            if c == '-' {
                rhs = rhs.mul(&A::number(q(-1)))?;
            }
            acc = acc.add(&rhs)?;
        }
        Ok(acc)
    }

    fn term<A: Algebra>(&mut self) -> Result<A> {
        let mut acc = self.factor::<A>()?;
        while let Some(Token::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.factor::<A>()?;
            acc = if c == '*' {
                acc.mul(&rhs)?
            } else {
                let d = rhs.as_constant().ok_or_else(|| self.error("division by a non-constant"))?;
                if d.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc.mul(&A::number(d.recip()))?
            };
        }
        Ok(acc)
    }

    fn factor<A: Algebra>(&mut self) -> Result<A> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                self.factor::<A>()?.mul(&A::number(q(-1)))
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.factor::<A>()
            }
            _ => {
                let base = self.atom::<A>()?;
                if let Some(Token::Op('^')) = self.peek() {
                    self.pos += 1;
                    let e = match self.next() {
                        Some(Token::Num(n)) => usize::try_from(n).map_err(|_| self.error("exponent too large"))?,
                        _ => return Err(self.error("expected an exponent")),
                    };
                    let mut acc = A::number(q(1));
                    for _ in 0..e {
                        acc = acc.mul(&base)?;
                    }
                    Ok(acc)
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom<A: Algebra>(&mut self) -> Result<A> {
        match self.next() {
            Some(Token::Num(n)) => Ok(A::number(Q::from_integer(n))),
            Some(Token::Op('(')) => {
                let inner = self.expr::<A>()?;
                match self.next() {
                    Some(Token::Op(')')) => Ok(inner),
                    _ => Err(self.error("expected ')'")),
                }
            }
            Some(Token::Ident(name)) => {
                if let Some(Token::Parts(parts)) = self.peek().cloned() {
                    self.pos += 1;
                    return A::atom(&name, Partition::from_parts(parts)?);
                }
                match name.strip_prefix('a').map(str::parse::<usize>) {
                    Some(Ok(i)) if i > 0 => A::ghost(i),
                    _ => Err(self.error(&format!("unknown symbol {name:?}"))),
                }
            }
            _ => Err(self.error("expected a number, symbol or '('")),
        }
    }
}

fn parse_with<A: Algebra>(s: &str) -> Result<A> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens: &tokens, pos: 0, source: s };
    let value = parser.expr::<A>()?;
    if parser.pos != tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(value)
}

/// Bounded symmetric function under construction; the bound is set by a
/// thread local so that the trait stays argument free.
#[derive(Clone)]
struct Bounded(SymFunc);

thread_local! {
    static PARSE_BOUND: std::cell::Cell<usize> = const { std::cell::Cell::new(super::DEFAULT_DEGREE_BOUND) };
}

impl Algebra for Bounded {
    fn number(n: Q) -> Self {
        Bounded(SymFunc::constant(n, PARSE_BOUND.with(|b| b.get())))
    }

    fn atom(name: &str, parts: Partition) -> Result<Self> {
        let mut chars = name.chars();
        let tag = match (chars.next(), chars.next()) {
            (Some(c), None) => BasisTag::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("unknown basis {name:?}")))?;
        let bound = PARSE_BOUND.with(|b| b.get());
        Ok(Bounded(convert::from_basis(tag, &parts, bound)?))
    }

    fn ghost(index: usize) -> Result<Self> {
        Ok(Bounded(SymFunc::psi(index, PARSE_BOUND.with(|b| b.get()))?))
    }

    fn add(&self, other: &Self) -> Result<Self> {
        Ok(Bounded(&self.0 + &other.0))
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Bounded(self.0.mul(&other.0)?))
    }

    fn as_constant(&self) -> Option<Q> {
        let f = &self.0;
        (f.terms().keys().all(Partition::is_empty)).then(|| f.counit_add())
    }
}

/// Parses the text grammar into a symmetric function with the given bound.
pub fn parse_symfunc(s: &str, bound: usize) -> Result<SymFunc> {
    let previous = PARSE_BOUND.with(|b| b.replace(bound));
    let result = parse_with::<Bounded>(s);
    PARSE_BOUND.with(|b| b.set(previous));
    result.map(|b| b.0)
}

/// Formal linear combination of named, partition-indexed symbols such as
/// `ks[2,2]`. Products are only allowed with constants.
pub type LinearForm = BTreeMap<(String, Partition), Q>;

#[derive(Clone)]
struct Linear {
    constant: Q,
    terms: LinearForm,
}

impl Algebra for Linear {
    fn number(n: Q) -> Self {
        Linear { constant: n, terms: LinearForm::new() }
    }

    fn atom(name: &str, parts: Partition) -> Result<Self> {
        Ok(Linear { constant: Q::zero(), terms: [((name.to_string(), parts), q(1))].into() })
    }

    fn ghost(index: usize) -> Result<Self> {
        Self::atom("p", Partition::row(index))
    }

    fn add(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let e = terms.entry(k.clone()).or_insert_with(Q::zero);
            *e += v;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Linear { constant: &self.constant + &other.constant, terms })
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        let (c, lin) = match (self.as_constant(), other.as_constant()) {
            (Some(c), _) => (c, other),
            (_, Some(c)) => (c, self),
            _ => return Err(Error::Parse("product of two linear symbols".into())),
        };
        let terms = lin.terms.iter().map(|(k, v)| (k.clone(), v * &c)).filter(|(_, v)| !v.is_zero()).collect();
        Ok(Linear { constant: &lin.constant * &c, terms })
    }

    fn as_constant(&self) -> Option<Q> {
        self.terms.is_empty().then(|| self.constant.clone())
    }
}

/// Parses a linear combination of symbols; constants are rejected unless zero.
pub fn parse_linear(s: &str) -> Result<LinearForm> {
    let l = parse_with::<Linear>(s)?;
    if !l.constant.is_zero() {
        return Err(Error::Parse(format!("constant term in linear form {s:?}")));
    }
    Ok(l.terms)
}

/// Expands `±`/`∓` into the two readings (upper signs, lower signs). Returns a
/// single string when neither occurs.
pub fn expand_plus_minus(s: &str) -> Vec<String> {
    if !s.contains(['±', '∓']) {
        return vec![s.to_string()];
    }
    let upper = s.replace('±', "+").replace('∓', "-");
    let lower = s.replace('±', "-").replace('∓', "+");
    vec![upper, lower]
}

fn format_coeff_prefix(c: &Q, first: bool, is_unit_term: bool) -> String {
    let sign = if c.is_negative() {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    let a = c.abs();
    if is_unit_term {
        format!("{sign}{a}")
    } else if a.is_one() {
        sign.to_string()
    } else {
        format!("{sign}{a}*")
    }
}

/// Renders coefficients in the given basis, e.g. `3*m[2,1] - 1/2*m[3]`.
pub fn format_terms(terms: &Terms, tag: BasisTag) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (l, c)) in terms.iter().enumerate() {
        if l.is_empty() {
            out += &format_coeff_prefix(c, i == 0, true);
        } else {
            out += &format_coeff_prefix(c, i == 0, false);
            out += &format!("{}{}", tag.letter(), l);
        }
    }
    out
}

/// Renders a symmetric function in the given basis.
pub fn format_in_basis(f: &SymFunc, tag: BasisTag) -> String {
    format_terms(&convert::to_basis_coeffs(tag, f), tag)
}

/// Renders a power-sum polynomial in ghost symbols, e.g. `1/2*a1^2 - 1/2*a2`.
pub fn format_ghost_poly(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (l, c)) in f.terms().iter().enumerate() {
        if l.is_empty() {
            out += &format_coeff_prefix(c, i == 0, true);
            continue;
        }
        out += &format_coeff_prefix(c, i == 0, false);
        let mult = l.multiplicities();
        let factors: Vec<String> = (1..mult.len())
            .rev()
            .filter(|&k| mult[k] > 0)
            .map(|k| if mult[k] == 1 { format!("a{k}") } else { format!("a{k}^{}", mult[k]) })
            .collect();
        out += &factors.join("*");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: BasisTag,
    pub terms: Vec<TermJson>,
}

impl SymFuncJson {
    pub fn from_symfunc(f: &SymFunc, tag: BasisTag) -> Self {
        let terms = convert::to_basis_coeffs(tag, f)
            .into_iter()
            .map(|(partition, c)| TermJson { partition, coef: c.to_string() })
            .collect();
        SymFuncJson { basis: tag, terms }
    }

    pub fn to_symfunc(&self, bound: usize) -> Result<SymFunc> {
        let coeffs =
            self.terms.iter().map(|t| Ok((t.partition.clone(), parse_q(&t.coef)?))).collect::<Result<Vec<_>>>()?;
        convert::from_basis_coeffs(self.basis, coeffs, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::q_frac;

    const B: usize = 12;

    #[test]
    fn parses_the_documented_example() {
        let f = parse_symfunc("3*m[2,1] - 1/2*p[3] + s[1,1]", B).unwrap();
        let expected = &(&SymFunc::m(&part![2, 1], B).unwrap().scale(&q(3))
            - &SymFunc::psi(3, B).unwrap().scale(&q_frac(1, 2)))
            + &SymFunc::s(&part![1, 1], B).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_grouped_fractions_and_powers() {
        let f = parse_symfunc("(a1^2 - a2)/2", B).unwrap();
        assert_eq!(f, SymFunc::e(2, B).unwrap());
        let g = parse_symfunc("-w[2]", B).unwrap();
        assert_eq!(g, SymFunc::e(2, B).unwrap());
        assert_eq!(parse_symfunc("-1*w[5]", B).unwrap(), -&SymFunc::theta(5, B).unwrap());
        assert_eq!(parse_symfunc("h[2]*h[1]", B).unwrap(), from_h(&part![2, 1]));
    }

    fn from_h(l: &Partition) -> SymFunc {
        convert::from_basis(BasisTag::H, l, B).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "3*", "x[1]", "m[1,2]", "p[1]/p[1]", "(p[1]", "p[1] p[2]", "1/0", "q"] {
            assert!(parse_symfunc(bad, B).is_err(), "{bad:?}");
        }
        assert!(matches!(parse_symfunc("p[13]", B), Err(Error::Capacity { .. })));
    }

    #[test]
    fn plus_minus_expansion() {
        assert_eq!(expand_plus_minus("(a1^2 ± a2)/2"), ["(a1^2 + a2)/2", "(a1^2 - a2)/2"]);
        assert_eq!(expand_plus_minus("x ± y ∓ z"), ["x + y - z", "x - y + z"]);
        assert_eq!(expand_plus_minus("a1"), ["a1"]);
    }

    #[test]
    fn linear_forms() {
        let l = parse_linear("ks[1,1,1,1] - 2*ks[2,1,1] + 2*ks[2,2]").unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(l[&("ks".to_string(), part![2, 1, 1])], q(-2));
        assert!(parse_linear("ks[1]*ks[1]").is_err());
        assert!(parse_linear("ks[1] + 1").is_err());
    }

    #[test]
    fn formatting_round_trips() {
        let f = parse_symfunc("3*m[2,1] - 1/2*p[3] + 7", B).unwrap();
        for tag in BasisTag::ALL {
            let text = format_in_basis(&f, tag);
            assert_eq!(parse_symfunc(&text, B).unwrap(), f, "{text}");
        }
        assert_eq!(format_terms(&Terms::new(), BasisTag::S), "0");
        let e2 = SymFunc::e(2, B).unwrap();
        assert_eq!(format_ghost_poly(&e2), "-1/2*a2 + 1/2*a1^2");
    }

    #[test]
    fn json_round_trip() {
        let f = parse_symfunc("-1/2*p[3] + h[2]", B).unwrap();
        let j = SymFuncJson::from_symfunc(&f, BasisTag::P);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains(r#""basis":"p""#));
        assert!(text.contains(r#"{"partition":[3],"coef":"-1/2"}"#));
        let back: SymFuncJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_symfunc(B).unwrap(), f);
    }
}
