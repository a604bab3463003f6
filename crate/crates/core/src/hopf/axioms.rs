use std::collections::BTreeMap;

use super::{HopfPresentation, Tensor2};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;

type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

fn add3(t: &mut Tensor3, key: (usize, usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let s = match t.get(&key) {
        Some(v) => v + &c,
        None => c,
    };
    if s.is_zero() {
        t.remove(&key);
    } else {
        t.insert(key, s);
    }
}

fn format3(t: &Tensor3, names: &[String]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|(&(a, b, c), v)| {
            let triple = format!("{}⊗{}⊗{}", names[a], names[b], names[c]);
            if v.is_one() {
                triple
            } else {
                format!("{}*{triple}", v.coefficient_string())
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Check every Hopf axiom on basis elements. Each failing check carries the
/// first basis input where the identity breaks.
pub fn verify_axioms(h: &HopfPresentation) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = h.dim();
    let names = &h.basis_names;
    let e = |i: usize| h.basis_vec(i);

    let mut assoc = Check::pass("associativity");
    'outer: for i in 0..n {
        for j in 0..n {
            let ij = h.mul_vec(&e(i), &e(j));
            for k in 0..n {
                let lhs = h.mul_vec(&ij, &e(k));
                let rhs = h.mul_vec(&e(i), &h.mul_vec(&e(j), &e(k)));
                if lhs != rhs {
                    assoc = Check::fail_with(
                        "associativity",
                        &format!("({}, {}, {})", names[i], names[j], names[k]),
                        h.format_vec(&lhs),
                        h.format_vec(&rhs),
                    );
                    break 'outer;
                }
            }
        }
    }
    r.push(assoc);

    r.push(Check::identity(
        "unit",
        (0..n).flat_map(|i| {
            let left = h.mul_vec(&h.unit, &e(i));
            let right = h.mul_vec(&e(i), &h.unit);
            [
                (format!("1*{}", names[i]), h.format_vec(&left), h.format_vec(&e(i))),
                (format!("{}*1", names[i]), h.format_vec(&right), h.format_vec(&e(i))),
            ]
        }),
    ));

    r.push(Check::identity(
        "coassociativity",
        (0..n).map(|i| {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for (a, b, c) in &h.comult[i] {
                for (x, y, d) in &h.comult[*a] {
                    add3(&mut left, (*x, *y, *b), c * d);
                }
                for (x, y, d) in &h.comult[*b] {
                    add3(&mut right, (*a, *x, *y), c * d);
                }
            }
            (names[i].clone(), format3(&left, names), format3(&right, names))
        }),
    ));

    r.push(Check::identity(
        "counit",
        (0..n).flat_map(|i| {
            let mut left = h.zero_vec();
            let mut right = h.zero_vec();
            for (a, b, c) in &h.comult[i] {
                left[*b] = &left[*b] + &(c * &h.counit[*a]);
                right[*a] = &right[*a] + &(c * &h.counit[*b]);
            }
            [
                (format!("(ε⊗id)Δ{}", names[i]), h.format_vec(&left), h.format_vec(&e(i))),
                (format!("(id⊗ε)Δ{}", names[i]), h.format_vec(&right), h.format_vec(&e(i))),
            ]
        }),
    ));

    let mut unit_tensor = Tensor2::new();
    for (a, b, c) in h.comul_vec(&h.unit).terms() {
        unit_tensor.add_term(a, b, c.clone());
    }
    let mut one_one = Tensor2::new();
    for (a, x) in h.unit.iter().enumerate() {
        for (b, y) in h.unit.iter().enumerate() {
            one_one.add_term(a, b, x * y);
        }
    }
    let mut comult_mult = if unit_tensor == one_one {
        Check::pass("comultiplication-multiplicative")
    } else {
        Check::fail_with(
            "comultiplication-multiplicative",
            "Δ(1)",
            unit_tensor.format(names),
            one_one.format(names),
        )
    };
    if comult_mult.passed() {
        'outer2: for i in 0..n {
            let di = h.comul_vec(&e(i));
            for j in 0..n {
                let lhs = h.comul_vec(h.mul_vec(&e(i), &e(j)).as_slice());
                let rhs = h.tensor_mul(&di, &h.comul_vec(&e(j)));
                if lhs != rhs {
                    comult_mult = Check::fail_with(
                        "comultiplication-multiplicative",
                        &format!("({}, {})", names[i], names[j]),
                        lhs.format(names),
                        rhs.format(names),
                    );
                    break 'outer2;
                }
            }
        }
    }
    r.push(comult_mult);

    let eps_one = h.counit_vec(&h.unit);
    r.push(if !eps_one.is_one() {
        Check::fail_with("counit-multiplicative", "ε(1)", eps_one.to_string(), "1".into())
    } else {
        Check::identity(
            "counit-multiplicative",
            (0..n).flat_map(|i| {
                (0..n).map(move |j| {
                    let lhs = h.counit_vec(&h.mul_vec(&e(i), &e(j)));
                    let rhs = &h.counit[i] * &h.counit[j];
                    (format!("({}, {})", names[i], names[j]), lhs, rhs)
                })
            }),
        )
    });

    let id = crate::linalg::Matrix::identity(&h.field, n);
    r.push(Check::identity(
        "antipode",
        (0..n).flat_map(|i| {
            let d = h.comul_vec(&e(i));
            let left = h.multiply_out(&h.tensor_map(&d, &h.antipode, &id));
            let right = h.multiply_out(&h.tensor_map(&d, &id, &h.antipode));
            let target: Vec<Scalar> = h.unit.iter().map(|u| u * &h.counit[i]).collect();
            let t = h.format_vec(&target);
            [
                (format!("S({0}₁){0}₂", names[i]), h.format_vec(&left), t.clone()),
                (format!("{0}₁S({0}₂)", names[i]), h.format_vec(&right), t),
            ]
        }),
    ));
    r
}

/// Consequences of the axioms that the rest of the crate relies on: S is an
/// anti-algebra map, S⁻¹ inverts it, the two actions of H* on H commute, and
/// `(h⇀f)∘S = (f∘S)↼S⁻¹(h)`, `(f↼h)∘S = S⁻¹(h)⇀(f∘S)`.
pub fn verify_derived_properties(h: &super::HopfAlgebra) -> VerificationReport {
    use super::Side;
    let mut r = VerificationReport::new();
    let n = h.dim();
    let names = &h.basis_names;
    let e = |i: usize| h.basis_vec(i);
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let label = |i: usize, j: usize| format!("({}, {})", names[i], names[j]);
    let s = h.antipode_power(1);
    let s_inv = h.antipode_power(-1);

    r.push(Check::identity(
        "antipode-anti-multiplicative",
        pairs().map(|(i, j)| {
            let lhs = s.apply(&h.mul_vec(&e(i), &e(j)));
            let rhs = h.mul_vec(&s.column(j), &s.column(i));
            (label(i, j), h.format_vec(&lhs), h.format_vec(&rhs))
        }),
    ));
    let id = crate::linalg::Matrix::identity(&h.field, n);
    r.push(Check::assert(
        "antipode-inverse",
        s.mul(&s_inv) == id && s_inv.mul(&s) == id,
        "S∘S⁻¹",
        "not the identity",
        "id",
    ));
    // f⇀(x↼k) = (f⇀x)↼k with f = eⁱ, k = eʲ, x = eₘ.
    let mut commute = Check::pass("actions-commute");
    'outer: for (i, j) in pairs() {
        for m in 0..n {
            let lhs = h.functional_on_element(
                &e(i),
                &h.functional_on_element(&e(j), &e(m), Side::Right),
                Side::Left,
            );
            let rhs = h.functional_on_element(
                &e(j),
                &h.functional_on_element(&e(i), &e(m), Side::Left),
                Side::Right,
            );
            if lhs != rhs {
                commute = Check::fail_with(
                    "actions-commute",
                    &format!("(p_{}, p_{}, {})", names[i], names[j], names[m]),
                    h.format_vec(&lhs),
                    h.format_vec(&rhs),
                );
                break 'outer;
            }
        }
    }
    r.push(commute);
    r.push(Check::identity(
        "left-action-antipode",
        pairs().map(|(i, j)| {
            let (x, f) = (e(i), e(j));
            let lhs = h.compose_functional(&h.element_on_functional(&x, &f, Side::Left), &s);
            let rhs = h.element_on_functional(
                &s_inv.apply(&x),
                &h.compose_functional(&f, &s),
                Side::Right,
            );
            (
                format!("({}, p_{})", names[i], names[j]),
                h.format_functional(&lhs),
                h.format_functional(&rhs),
            )
        }),
    ));
    r.push(Check::identity(
        "right-action-antipode",
        pairs().map(|(i, j)| {
            let (x, f) = (e(i), e(j));
            let lhs = h.compose_functional(&h.element_on_functional(&x, &f, Side::Right), &s);
            let rhs = h.element_on_functional(
                &s_inv.apply(&x),
                &h.compose_functional(&f, &s),
                Side::Left,
            );
            (
                format!("({}, p_{})", names[i], names[j]),
                h.format_functional(&lhs),
                h.format_functional(&rhs),
            )
        }),
    ));
    r
}
