//! Recursive-descent reader for scalar expressions.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := int | ident | '(' expr ')'`. The only identifiers are `zetaN` in
//! ℚ(ζ_N) and `q` in ℚ(q).

use num_bigint::BigInt;

use super::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Int(s.parse().map_err(|_| format!("bad integer {s}"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FieldSpec,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect_op(&mut self, c: char) -> Result<(), String> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!("expected {c:?}"))
        }
    }

    fn expr(&mut self) -> Result<Scalar, String> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, String> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs).map_err(|e| e.to_string())?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, String> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, String> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek_op() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e: i64 = match self.toks.get(self.pos) {
            Some(Tok::Int(v)) => v.try_into().map_err(|_| "exponent too large".to_string())?,
            _ => return Err("expected integer exponent".into()),
        };
        self.pos += 1;
        base.pow(if negative { -e } else { e })
            .map_err(|e| e.to_string())
    }

    fn atom(&mut self) -> Result<Scalar, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(self.field.from_bigint(&v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ident(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect_op(')')?;
                Ok(v)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }

    fn ident(&self, name: &str) -> Result<Scalar, String> {
        match self.field {
            FieldSpec::Cyclotomic(f) if name == format!("zeta{}", f.order()) => {
                Ok(self.field.generator().expect("cyclotomic generator"))
            }
            FieldSpec::RationalFunctions if name == "q" => {
                Ok(self.field.generator().expect("q"))
            }
            _ => Err(format!("unknown symbol {name:?} in field {}", self.field)),
        }
    }
}

pub(super) fn parse_scalar(field: &FieldSpec, text: &str) -> Result<Scalar, ScalarError> {
    let err = |reason: String| ScalarError::Parse {
        text: text.to_string(),
        reason,
    };
    let toks = tokenize(text).map_err(err)?;
    if toks.is_empty() {
        return Err(err("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        field,
    };
    let v = p.expr().map_err(err)?;
    if p.pos != p.toks.len() {
        return Err(err("trailing input".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_unary_minus() {
        let f = FieldSpec::rationals();
        assert_eq!(f.parse_scalar("-1/2*3").unwrap().to_string(), "-3/2");
        assert_eq!(f.parse_scalar("2^-2").unwrap().to_string(), "1/4");
        assert_eq!(f.parse_scalar("(1 + 2)*3 - 4").unwrap().to_string(), "5");
    }

    #[test]
    fn rejects_garbage() {
        let f = FieldSpec::rationals();
        assert!(f.parse_scalar("").is_err());
        assert!(f.parse_scalar("q").is_err());
        assert!(f.parse_scalar("1 +").is_err());
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("3 4").is_err());
        let c3 = FieldSpec::cyclotomic(3).unwrap();
        assert!(c3.parse_scalar("zeta4").is_err());
    }

    #[test]
    fn prime_field_reduces() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse_scalar("7").unwrap().to_string(), "2");
        assert_eq!(f.parse_scalar("1/2").unwrap().to_string(), "3");
    }
}
