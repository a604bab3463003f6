//! Cyclotomic fields ℚ(ζₙ) as ℚ[x]/Φₙ(x).
//!
//! Elements are coefficient vectors of length `deg Φₙ = φ(n)`, so equality
//! is coordinate equality.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;

/// The field ℚ(ζₙ) together with its defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    n: u64,
    phi: QPoly,
}

impl CyclotomicField {
    /// Shared instance for order `n >= 1`.
    pub fn get(n: u64) -> Arc<CyclotomicField> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cyclotomic cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| {
                Arc::new(CyclotomicField {
                    n,
                    phi: cyclotomic_polynomial(n),
                })
            })
            .clone()
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> &QPoly {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.phi.degree().expect("cyclotomic polynomial is nonzero")
    }

    /// Canonical coefficient vector of a polynomial reduced modulo Φₙ.
    pub fn reduce(&self, p: &QPoly) -> Vec<BigRational> {
        let r = p.rem(&self.phi);
        (0..self.degree()).map(|k| r.coeff(k)).collect()
    }

    pub fn to_poly(coeffs: &[BigRational]) -> QPoly {
        QPoly::from_coeffs(coeffs.to_vec())
    }

    /// Coefficients of ζₙ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Vec<BigRational> {
        let e = k.rem_euclid(self.n as i64) as usize;
        self.reduce(&QPoly::monomial(BigRational::one(), e))
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        self.reduce(&(&Self::to_poly(a) * &Self::to_poly(b)))
    }

    /// Inverse via extended Euclid against Φₙ; `None` for zero.
    pub fn inv(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let p = Self::to_poly(a);
        if p.is_zero() {
            return None;
        }
        let (g, s, _) = QPoly::ext_gcd(&p, &self.phi);
        // Φₙ is irreducible, so any nonzero residue is coprime to it.
        debug_assert!(g.is_one());
        Some(self.reduce(&s))
    }

    pub fn render(&self, coeffs: &[BigRational]) -> String {
        use num_traits::Signed;
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if k == 0 {
                abs.to_string()
            } else if abs.is_one() {
                format!("zeta{}^{}", self.n, k)
            } else {
                format!("{}*zeta{}^{}", abs, self.n, k)
            };
            parts.push((neg, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// Φₙ(x) by dividing xⁿ − 1 by Φ_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u64) -> QPoly {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut result = &QPoly::monomial(BigRational::one(), n as usize) - &QPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            result = result.exact_div(&cyclotomic_polynomial(d));
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), QPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), QPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), QPoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), QPoly::from_int_coeffs(&[1, -1, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            QPoly::from_int_coeffs(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=12 {
            let f = CyclotomicField::get(n);
            assert_eq!(f.zeta_pow(n as i64), f.zeta_pow(0));
            for k in 1..n as i64 {
                assert_ne!(f.zeta_pow(k), f.zeta_pow(0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn inverse_of_zeta() {
        let f = CyclotomicField::get(5);
        let z = f.zeta_pow(1);
        let zi = f.inv(&z).unwrap();
        assert_eq!(zi, f.zeta_pow(-1));
        assert_eq!(f.mul(&z, &zi), f.zeta_pow(0));
    }
}
