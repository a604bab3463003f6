//! Exact scalar fields: ℚ, 𝔽ₚ, ℚ(ζₙ) and ℚ(q).
//!
//! Every [`Scalar`] carries enough of its field to do arithmetic on its own
//! (the prime for 𝔽ₚ, a shared handle to Φₙ for cyclotomic fields). Mixing
//! scalars from different fields is a [`ScalarError::FieldMismatch`] through
//! the `checked_*` methods; the operator impls panic instead, and are meant
//! for code that already knows its operands share a field.

mod cyclotomic;
mod parse;
pub mod poly;
mod qcomb;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField};
pub use poly::QPoly;
pub use qcomb::{gauss_binomial, quantum_integer, quantum_integer_at};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("cyclotomic order must be positive")]
    InvalidCyclotomicOrder,
    #[error("q - q^-1 vanishes; quantum integers are undefined")]
    DegenerateQ,
    #[error("field {0} has no distinguished generator q")]
    NoGenerator(String),
    #[error("binomial index out of range: t = {t}, j = {j}")]
    OutOfRange { j: i64, t: i64 },
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("unknown field spec {0:?}")]
    UnknownField(String),
}

/// Which field a scalar lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Arc<BigInt>),
    Cyclotomic(Arc<CyclotomicField>),
    /// ℚ(q); the indeterminate is always printed as `q`.
    RationalFunctions,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// 𝔽ₚ; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        Self::prime_big(BigInt::from(p))
    }

    pub fn prime_big(p: BigInt) -> Result<Self, ScalarError> {
        if !is_prime(&p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(Arc::new(p)))
    }

    pub fn cyclotomic(n: u64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidCyclotomicOrder);
        }
        Ok(FieldSpec::Cyclotomic(CyclotomicField::get(n)))
    }

    pub fn rational_functions() -> Self {
        FieldSpec::RationalFunctions
    }

    /// 0 for characteristic-zero fields, p for 𝔽ₚ.
    pub fn characteristic(&self) -> BigInt {
        match self {
            FieldSpec::PrimeField(p) => (**p).clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => Scalar::Modular(ModInt {
                value: v.mod_floor(p),
                modulus: p.clone(),
            }),
            FieldSpec::Cyclotomic(f) => {
                let mut coeffs = vec![BigRational::zero(); f.degree()];
                coeffs[0] = BigRational::from_integer(v.clone());
                Scalar::Cyclotomic(CycloElem {
                    field: f.clone(),
                    coeffs: coeffs.into(),
                })
            }
            FieldSpec::RationalFunctions => {
                Scalar::RationalFunction(RatFunc::from_rational(BigRational::from_integer(
                    v.clone(),
                )))
            }
        }
    }

    /// Image of a rational number; fails in 𝔽ₚ when p divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(v.clone())),
            FieldSpec::PrimeField(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                num.checked_div(&den)
            }
            FieldSpec::Cyclotomic(f) => {
                let mut coeffs = vec![BigRational::zero(); f.degree()];
                coeffs[0] = v.clone();
                Ok(Scalar::Cyclotomic(CycloElem {
                    field: f.clone(),
                    coeffs: coeffs.into(),
                }))
            }
            FieldSpec::RationalFunctions => Ok(Scalar::RationalFunction(RatFunc::from_rational(
                v.clone(),
            ))),
        }
    }

    /// The designated element q: ζₙ in ℚ(ζₙ), the indeterminate in ℚ(q).
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldSpec::Cyclotomic(f) => Some(Scalar::Cyclotomic(CycloElem {
                field: f.clone(),
                coeffs: f.zeta_pow(1).into(),
            })),
            FieldSpec::RationalFunctions => Some(Scalar::RationalFunction(RatFunc::q())),
            _ => None,
        }
    }

    /// Some primitive n-th root of unity in this field, if one exists.
    ///
    /// ℚ(ζₘ) yields ζₘ^(m/n) when n | m (and ±1 for n ≤ 2); 𝔽ₚ is searched.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<Scalar> {
        if n == 0 {
            return None;
        }
        if n == 1 {
            return Some(self.one());
        }
        let candidate = match self {
            FieldSpec::Cyclotomic(f) if f.order() % n == 0 => Some(
                self.generator()?
                    .pow((f.order() / n) as i64)
                    .expect("nonzero"),
            ),
            FieldSpec::PrimeField(p) => {
                let p = p.to_u64()?;
                (2..p)
                    .map(|a| self.from_int(a as i64))
                    .find(|a| is_primitive_root_of_unity(a, n))
            }
            _ if n == 2 => Some(self.from_int(-1)),
            _ => None,
        };
        candidate.filter(|c| is_primitive_root_of_unity(c, n))
    }

    /// Parse a scalar written in canonical (or any arithmetic) form.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, ScalarError> {
        parse::parse_scalar(self, text)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldSpec::Rationals => FieldDescriptor::Q,
            FieldSpec::PrimeField(p) => FieldDescriptor::Fp {
                p: p.to_u64().expect("prime fits in u64 for serialization"),
            },
            FieldSpec::Cyclotomic(f) => FieldDescriptor::Cyclotomic { n: f.order() },
            FieldSpec::RationalFunctions => FieldDescriptor::Qq,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
            FieldSpec::Cyclotomic(c) => write!(f, "cyclotomic:{}", c.order()),
            FieldSpec::RationalFunctions => write!(f, "Qq"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `Q`, `Fp:5`, `cyclotomic:3` and `Qq`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::UnknownField(s.to_string());
        match s.split_once(':') {
            None => match s {
                "Q" => Ok(FieldSpec::Rationals),
                "Qq" => Ok(FieldSpec::RationalFunctions),
                _ => Err(bad()),
            },
            Some(("Fp", p)) => FieldSpec::prime(p.parse().map_err(|_| bad())?),
            Some(("cyclotomic", n)) => FieldSpec::cyclotomic(n.parse().map_err(|_| bad())?),
            Some(_) => Err(bad()),
        }
    }
}

/// Serialized field descriptor: `{"field": "Q"}`, `{"field": "Fp", "p": 5}`,
/// `{"field": "cyclotomic", "n": 3}`, `{"field": "Qq"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "field")]
pub enum FieldDescriptor {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Fp")]
    Fp { p: u64 },
    #[serde(rename = "cyclotomic")]
    Cyclotomic { n: u64 },
    #[serde(rename = "Qq")]
    Qq,
}

impl FieldDescriptor {
    pub fn to_field(&self) -> Result<FieldSpec, ScalarError> {
        match *self {
            FieldDescriptor::Q => Ok(FieldSpec::Rationals),
            FieldDescriptor::Fp { p } => FieldSpec::prime(p),
            FieldDescriptor::Cyclotomic { n } => FieldSpec::cyclotomic(n),
            FieldDescriptor::Qq => Ok(FieldSpec::RationalFunctions),
        }
    }
}

/// Residue modulo a prime, stored in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModInt {
    value: BigInt,
    modulus: Arc<BigInt>,
}

/// Element of ℚ(ζₙ) as coefficients of 1, ζ, …, ζ^(φ(n)−1).
#[derive(Clone, Debug)]
pub struct CycloElem {
    field: Arc<CyclotomicField>,
    coeffs: Arc<[BigRational]>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl CycloElem {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// An exact scalar in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Modular(ModInt),
    Cyclotomic(CycloElem),
    RationalFunction(RatFunc),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular(m) => FieldSpec::PrimeField(m.modulus.clone()),
            Scalar::Cyclotomic(c) => FieldSpec::Cyclotomic(c.field.clone()),
            Scalar::RationalFunction(_) => FieldSpec::RationalFunctions,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Modular(m) => m.value.is_zero(),
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(Zero::is_zero),
            Scalar::RationalFunction(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_one(),
            Scalar::Modular(m) => m.value.is_one(),
            Scalar::Cyclotomic(c) => {
                c.coeffs[0].is_one() && c.coeffs[1..].iter().all(Zero::is_zero)
            }
            Scalar::RationalFunction(r) => r.is_one(),
        }
    }

    /// The value as a rational number, when it lies in the prime subfield ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(a) => Some(a.clone()),
            Scalar::Modular(_) => None,
            Scalar::Cyclotomic(c) => c.coeffs[1..]
                .iter()
                .all(Zero::is_zero)
                .then(|| c.coeffs[0].clone()),
            Scalar::RationalFunction(r) => r.as_constant(),
        }
    }

    fn mismatch(&self, other: &Scalar) -> ScalarError {
        ScalarError::FieldMismatch {
            left: self.field().to_string(),
            right: other.field().to_string(),
        }
    }

    fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Modular(a), Scalar::Modular(b)) => a.modulus == b.modulus,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => a.field.order() == b.field.order(),
            (Scalar::RationalFunction(_), Scalar::RationalFunction(_)) => true,
            _ => false,
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if self.same_field(rhs) {
            if rhs.is_zero() {
                return Ok(self.clone());
            }
            if self.is_zero() {
                return Ok(rhs.clone());
            }
        }
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Ok(Scalar::Modular(ModInt {
                    value: (&a.value + &b.value).mod_floor(&a.modulus),
                    modulus: a.modulus.clone(),
                }))
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b))
                if a.field.order() == b.field.order() =>
            {
                Ok(Scalar::Cyclotomic(CycloElem {
                    field: a.field.clone(),
                    coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x + y).collect(),
                }))
            }
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Ok(Scalar::RationalFunction(a.add(b)))
            }
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&rhs.neg_ref())
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if self.same_field(rhs) {
            if self.is_zero() || rhs.is_one() {
                return Ok(self.clone());
            }
            if rhs.is_zero() || self.is_one() {
                return Ok(rhs.clone());
            }
        }
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Ok(Scalar::Modular(ModInt {
                    value: (&a.value * &b.value).mod_floor(&a.modulus),
                    modulus: a.modulus.clone(),
                }))
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b))
                if a.field.order() == b.field.order() =>
            {
                Ok(Scalar::Cyclotomic(CycloElem {
                    field: a.field.clone(),
                    coeffs: a.field.mul(&a.coeffs, &b.coeffs).into(),
                }))
            }
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Ok(Scalar::RationalFunction(a.mul(b)))
            }
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if self.field() != rhs.field() {
            return Err(self.mismatch(rhs));
        }
        self.checked_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular(m) => {
                let exp = &*m.modulus - BigInt::from(2);
                Scalar::Modular(ModInt {
                    value: m.value.modpow(&exp, &m.modulus),
                    modulus: m.modulus.clone(),
                })
            }
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(CycloElem {
                field: c.field.clone(),
                coeffs: c.field.inv(&c.coeffs).ok_or(ScalarError::DivisionByZero)?.into(),
            }),
            Scalar::RationalFunction(r) => {
                Scalar::RationalFunction(r.inv().ok_or(ScalarError::DivisionByZero)?)
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular(m) => Scalar::Modular(ModInt {
                value: (-&m.value).mod_floor(&m.modulus),
                modulus: m.modulus.clone(),
            }),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(CycloElem {
                field: c.field.clone(),
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
            Scalar::RationalFunction(r) => Scalar::RationalFunction(r.neg()),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Rendering suitable as a coefficient in front of a basis label.
    pub fn coefficient_string(&self) -> String {
        let s = self.to_string();
        let compound = s[1..].contains([' ', '+', '-', '*', '/']);
        if compound {
            format!("({s})")
        } else {
            s
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Modular(m) => write!(f, "{}", m.value),
            Scalar::Cyclotomic(c) => f.write_str(&c.field.render(&c.coeffs)),
            Scalar::RationalFunction(r) => f.write_str(&r.render("q")),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

pub fn is_primitive_root_of_unity(x: &Scalar, n: u64) -> bool {
    let one = x.field().one();
    let Ok(top) = x.pow(n as i64) else {
        return false;
    };
    top == one && (1..n).all(|k| x.pow(k as i64).map(|v| v != one).unwrap_or(false))
}

fn is_prime(p: &BigInt) -> bool {
    if p < &BigInt::from(2) {
        return false;
    }
    let two = BigInt::from(2);
    if p == &two {
        return true;
    }
    if p.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}
