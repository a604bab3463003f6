//! Balanced quantum integers and Gaussian binomial coefficients.

use super::{FieldSpec, Scalar, ScalarError};

/// `[i] = (q^i - q^-i) / (q - q^-1)` at the field's designated q.
pub fn quantum_integer(i: i64, field: &FieldSpec) -> Result<Scalar, ScalarError> {
    let q = field
        .generator()
        .ok_or_else(|| ScalarError::NoGenerator(field.to_string()))?;
    quantum_integer_at(i, &q)
}

/// `[i]` evaluated at an arbitrary nonzero `q`.
pub fn quantum_integer_at(i: i64, q: &Scalar) -> Result<Scalar, ScalarError> {
    let qi = q.inv()?;
    let denom = q - &qi;
    if denom.is_zero() {
        return Err(ScalarError::DegenerateQ);
    }
    let num = q.pow(i)? - q.pow(-i)?;
    num.checked_div(&denom)
}

/// Gaussian binomial `{j choose t}_q` via the q-Pascal rule
/// `{j, t} = {j-1, t-1} + q^t {j-1, t}`.
pub fn gauss_binomial(j: i64, t: i64, q: &Scalar) -> Result<Scalar, ScalarError> {
    if j < 0 || t < 0 || t > j {
        return Err(ScalarError::OutOfRange { j, t });
    }
    let field = q.field();
    let t = t as usize;
    // row[s] holds {m choose s}_q for the current m.
    let mut row = vec![field.one()];
    for m in 1..=j as usize {
        let mut next = Vec::with_capacity(m + 1);
        for s in 0..=m {
            let left = if s >= 1 { row[s - 1].clone() } else { field.zero() };
            let right = if s < m {
                &q.pow(s as i64)? * &row[s]
            } else {
                field.zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[t].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers_in_qq() {
        let f = FieldSpec::rational_functions();
        assert!(quantum_integer(1, &f).unwrap().is_one());
        assert_eq!(
            quantum_integer(2, &f).unwrap(),
            f.parse_scalar("q + 1/q").unwrap()
        );
        assert!(quantum_integer(0, &f).unwrap().is_zero());
        // -1/[2] = -1/(q + q^-1)
        let v = -(f.one() / quantum_integer(2, &f).unwrap());
        assert_eq!(v, f.parse_scalar("-1/(q + q^-1)").unwrap());
    }

    #[test]
    fn degenerate_q() {
        let c2 = FieldSpec::cyclotomic(2).unwrap();
        assert_eq!(quantum_integer(3, &c2), Err(ScalarError::DegenerateQ));
        assert!(matches!(
            quantum_integer(3, &FieldSpec::rationals()),
            Err(ScalarError::NoGenerator(_))
        ));
        // At a primitive 4th root, [2] = q + q^-1 = 0.
        let c4 = FieldSpec::cyclotomic(4).unwrap();
        assert!(quantum_integer(2, &c4).unwrap().is_zero());
    }

    #[test]
    fn gaussian_binomials_small() {
        let f = FieldSpec::rational_functions();
        let q = f.generator().unwrap();
        assert!(gauss_binomial(0, 0, &q).unwrap().is_one());
        assert_eq!(gauss_binomial(2, 1, &q).unwrap(), f.parse_scalar("1 + q").unwrap());
        assert_eq!(
            gauss_binomial(3, 1, &q).unwrap(),
            f.parse_scalar("1 + q + q^2").unwrap()
        );
        assert!(matches!(
            gauss_binomial(2, 3, &q),
            Err(ScalarError::OutOfRange { .. })
        ));
        assert!(gauss_binomial(-1, 0, &q).is_err());
    }

    #[test]
    fn binomial_vanishes_at_root_of_unity() {
        // {n choose t} = 0 at a primitive n-th root for 0 < t < n.
        for n in 2..=6u64 {
            let f = FieldSpec::cyclotomic(n).unwrap();
            let q = f.generator().unwrap();
            for t in 1..n as i64 {
                assert!(gauss_binomial(n as i64, t, &q).unwrap().is_zero());
            }
        }
    }
}
