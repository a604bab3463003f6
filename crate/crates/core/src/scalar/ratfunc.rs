//! The rational function field ℚ(q).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn from_poly(num: QPoly) -> Self {
        RatFunc {
            num,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// Build and normalize; `None` if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            // Only powers of q can be shared.
            let k = num.low_degree().min(den.low_degree());
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = QPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant value if this is an element of ℚ.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::normalize(num, &self.den * &rhs.den)
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        Self::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Canonical text form, e.g. `q^2+1` or `(q^2+1)/(q)`.
    pub fn render(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.render(var)
        } else {
            format!("({})/({})", self.num.render(var), self.den.render(var))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_pow(k: i64) -> RatFunc {
        if k >= 0 {
            RatFunc::from_poly(QPoly::monomial(BigRational::one(), k as usize))
        } else {
            q_pow(-k).inv().unwrap()
        }
    }

    #[test]
    fn normal_form_is_canonical() {
        // (2q^2 - 2) / (4q - 4) = (q + 1)/2
        let a = RatFunc::new(
            QPoly::from_int_coeffs(&[-2, 0, 2]),
            QPoly::from_int_coeffs(&[-4, 4]),
        )
        .unwrap();
        let b = RatFunc::new(QPoly::from_int_coeffs(&[1, 1]), QPoly::from_int_coeffs(&[2]))
            .unwrap();
        assert_eq!(a, b);
        assert!(a.denominator().is_one());
    }

    #[test]
    fn quantum_two_from_laurent_division() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let num = q_pow(2).sub(&q_pow(-2));
        let den = q_pow(1).sub(&q_pow(-1));
        let lhs = num.mul(&den.inv().unwrap());
        assert_eq!(lhs, q_pow(1).add(&q_pow(-1)));
        assert_eq!(lhs.render("q"), "(q^2+1)/(q)");
    }
}
