//! Integrals, the distinguished grouplikes α and g, and the Nakayama maps χ and Ω
//! of a finite-dimensional Hopf algebra.

use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfError, HopfPresentation, Side, Tensor2};
use crate::linalg::{normalize_leading, Matrix};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Error)]
pub enum IntegralError {
    #[error("space of {which} has dimension {dim}, expected 1")]
    IntegralSpaceDimension { which: &'static str, dim: usize },
    #[error("t·h is not a multiple of t: {0}")]
    InconsistentAlpha(String),
    #[error("h₁Λ(h₂) is not Λ(h)g for a grouplike g: {0}")]
    InconsistentG(String),
    #[error("the action matrix defining {0} is singular")]
    SingularActionMatrix(&'static str),
    #[error("Λ(t₁)t₂ is not a nonzero multiple of 1")]
    RescalingImpossible,
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Normalized generators of the four integral spaces.
#[derive(Clone, Debug)]
pub struct IntegralData {
    /// t with ht = ε(h)t.
    pub left_h: crate::hopf::Element,
    /// T with Th = ε(h)T.
    pub right_h: crate::hopf::Element,
    /// λ with h₁λ(h₂) = λ(h)1.
    pub left_hstar: crate::hopf::Functional,
    /// Λ with Λ(h₁)h₂ = Λ(h)1.
    pub right_hstar: crate::hopf::Functional,
}

#[derive(Clone, Debug)]
pub struct GrouplikeData {
    pub alpha: crate::hopf::Functional,
    pub alpha_inv: crate::hopf::Functional,
    pub g: crate::hopf::Element,
    pub g_inv: crate::hopf::Element,
}

fn bump(m: &mut Matrix, i: usize, j: usize, c: &Scalar) {
    if !c.is_zero() {
        let v = &m.get(i, j) + c;
        m.set(i, j, v);
    }
}

fn one_dimensional(m: &Matrix, which: &'static str) -> Result<Vec<Scalar>, IntegralError> {
    let mut ns = m.nullspace();
    if ns.len() != 1 {
        return Err(IntegralError::IntegralSpaceDimension {
            which,
            dim: ns.len(),
        });
    }
    Ok(normalize_leading(ns.pop().unwrap()))
}

/// Stack `eᵢt − ε(eᵢ)t = 0` (left) or `teᵢ − ε(eᵢ)t = 0` (right).
fn element_integral_system(h: &HopfPresentation, side: Side) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(&h.field, n * n, n);
    for i in 0..n {
        for k in 0..n {
            let prod = match side {
                Side::Left => h.product(i, k),
                Side::Right => h.product(k, i),
            };
            for (r, c) in prod {
                bump(&mut m, i * n + r, k, c);
            }
            let e = -&h.counit[i];
            bump(&mut m, i * n + k, k, &e);
        }
    }
    m
}

/// Stack `h₁λ(h₂) − λ(h)1 = 0` (left) or `Λ(h₁)h₂ − Λ(h)1 = 0` (right).
fn functional_integral_system(h: &HopfPresentation, side: Side) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(&h.field, n * n, n);
    for i in 0..n {
        for (a, b, c) in &h.comult[i] {
            match side {
                Side::Left => bump(&mut m, i * n + a, *b, c),
                Side::Right => bump(&mut m, i * n + b, *a, c),
            }
        }
        for (r, u) in h.unit.iter().enumerate() {
            bump(&mut m, i * n + r, i, &-u);
        }
    }
    m
}

/// All four integral spaces, each checked to be one-dimensional.
pub fn compute_integrals(h: &HopfAlgebra) -> Result<IntegralData, IntegralError> {
    let t = one_dimensional(&element_integral_system(h, Side::Left), "left integrals in H")?;
    let big_t = one_dimensional(&element_integral_system(h, Side::Right), "right integrals in H")?;
    let lambda = one_dimensional(
        &functional_integral_system(h, Side::Left),
        "left integrals in H*",
    )?;
    let big_lambda = one_dimensional(
        &functional_integral_system(h, Side::Right),
        "right integrals in H*",
    )?;
    Ok(IntegralData {
        left_h: h.element(t)?,
        right_h: h.element(big_t)?,
        left_hstar: h.functional(lambda)?,
        right_hstar: h.functional(big_lambda)?,
    })
}

/// Is `x` an element of the integral space cut out by `system`? Zero counts.
fn in_kernel(system: &Matrix, x: &[Scalar]) -> bool {
    system.apply(x).iter().all(Scalar::is_zero)
}

pub fn is_left_integral(h: &HopfPresentation, t: &[Scalar]) -> bool {
    in_kernel(&element_integral_system(h, Side::Left), t)
}

pub fn is_right_integral(h: &HopfPresentation, t: &[Scalar]) -> bool {
    in_kernel(&element_integral_system(h, Side::Right), t)
}

pub fn is_left_integral_functional(h: &HopfPresentation, f: &[Scalar]) -> bool {
    in_kernel(&functional_integral_system(h, Side::Left), f)
}

pub fn is_right_integral_functional(h: &HopfPresentation, f: &[Scalar]) -> bool {
    in_kernel(&functional_integral_system(h, Side::Right), f)
}

/// α from `t·eᵢ = α(eᵢ)t`, cross-checked against ε∘χ.
pub fn distinguished_alpha(
    h: &HopfAlgebra,
    ints: &IntegralData,
) -> Result<crate::hopf::Functional, IntegralError> {
    let t = ints.left_h.coeffs();
    let p = t.iter().position(|c| !c.is_zero()).expect("integral is nonzero");
    let mut alpha = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let te = h.mul_vec(t, &h.basis_vec(i));
        let a = te[p].checked_div(&t[p]).expect("nonzero pivot");
        let scaled: Vec<Scalar> = t.iter().map(|c| c * &a).collect();
        if te != scaled {
            return Err(IntegralError::InconsistentAlpha(format!(
                "t·{} = {}",
                h.basis_names[i],
                h.format_vec(&te)
            )));
        }
        alpha.push(a);
    }
    let chi = nakayama_chi(h, ints)?;
    let eps_chi = h.compose_functional(&h.counit, &chi);
    if eps_chi != alpha {
        return Err(IntegralError::InconsistentAlpha(format!(
            "ε∘χ = {} but α = {}",
            h.format_functional(&eps_chi),
            h.format_functional(&alpha)
        )));
    }
    Ok(h.functional(alpha)?)
}

fn is_grouplike(h: &HopfPresentation, g: &[Scalar]) -> bool {
    let mut gg = Tensor2::new();
    for (a, x) in g.iter().enumerate() {
        for (b, y) in g.iter().enumerate() {
            gg.add_term(a, b, x * y);
        }
    }
    h.comul_vec(g) == gg && h.counit_vec(g).is_one()
}

/// g from `h₁Λ(h₂) = Λ(h)g`, verified on every basis element.
pub fn distinguished_g(
    h: &HopfAlgebra,
    ints: &IntegralData,
) -> Result<crate::hopf::Element, IntegralError> {
    let lam = ints.right_hstar.values();
    let hit = |i: usize| h.functional_on_element(lam, &h.basis_vec(i), Side::Left);
    let p = lam.iter().position(|c| !c.is_zero()).expect("integral is nonzero");
    let inv = lam[p].inv().expect("nonzero");
    let g: Vec<Scalar> = hit(p).iter().map(|c| c * &inv).collect();
    for i in 0..h.dim() {
        let lhs = hit(i);
        let rhs: Vec<Scalar> = g.iter().map(|c| c * &lam[i]).collect();
        if lhs != rhs {
            return Err(IntegralError::InconsistentG(format!(
                "at {}: {} vs {}",
                h.basis_names[i],
                h.format_vec(&lhs),
                h.format_vec(&rhs)
            )));
        }
    }
    if !is_grouplike(h, &g) {
        return Err(IntegralError::InconsistentG(format!(
            "{} is not grouplike",
            h.format_vec(&g)
        )));
    }
    Ok(h.element(g)?)
}

pub fn grouplikes(h: &HopfAlgebra, ints: &IntegralData) -> Result<GrouplikeData, IntegralError> {
    let alpha = distinguished_alpha(h, ints)?;
    let g = distinguished_g(h, ints)?;
    Ok(GrouplikeData {
        alpha_inv: alpha.compose_antipode(1),
        g_inv: g.antipode_pow(1),
        alpha,
        g,
    })
}

/// Integrals and grouplikes in one go.
pub fn analyze(h: &HopfAlgebra) -> Result<(IntegralData, GrouplikeData), IntegralError> {
    let ints = compute_integrals(h)?;
    let gl = grouplikes(h, &ints)?;
    Ok((ints, gl))
}

/// Solve `A·X = B` for a square `A`, or report which map is singular.
fn solve_square(a: &Matrix, b: &Matrix, what: &'static str) -> Result<Matrix, IntegralError> {
    let inv = a
        .inverse()
        .ok_or(IntegralError::SingularActionMatrix(what))?;
    Ok(inv.mul(b))
}

/// χ with `h⇀λ = λ↼χ(h)`, i.e. `λ(χ(eᵢ)eₖ) = λ(eₖeᵢ)` for all k.
pub fn nakayama_chi(h: &HopfAlgebra, ints: &IntegralData) -> Result<Matrix, IntegralError> {
    let lam = ints.left_hstar.values();
    let n = h.dim();
    let mut a = Matrix::zeros(&h.field, n, n);
    let mut b = Matrix::zeros(&h.field, n, n);
    for k in 0..n {
        for m in 0..n {
            a.set(k, m, pair_product(h, lam, m, k));
            b.set(k, m, pair_product(h, lam, k, m));
        }
    }
    solve_square(&a, &b, "χ")
}

/// Ω with `Ω(h)⇀Λ = Λ↼h`, i.e. `Λ(eₖΩ(eᵢ)) = Λ(eᵢeₖ)`.
pub fn nakayama_omega(h: &HopfAlgebra, ints: &IntegralData) -> Result<Matrix, IntegralError> {
    let lam = ints.right_hstar.values();
    let n = h.dim();
    let mut a = Matrix::zeros(&h.field, n, n);
    let mut b = Matrix::zeros(&h.field, n, n);
    for k in 0..n {
        for m in 0..n {
            a.set(k, m, pair_product(h, lam, k, m));
            b.set(k, m, pair_product(h, lam, m, k));
        }
    }
    solve_square(&a, &b, "Ω")
}

/// `f(eᵢeⱼ)`.
fn pair_product(h: &HopfPresentation, f: &[Scalar], i: usize, j: usize) -> Scalar {
    h.product(i, j)
        .iter()
        .fold(h.field.zero(), |acc, (k, c)| acc + c * &f[*k])
}

/// The matrix of `h ↦ α(h₂)S⁻²(h₁)`.
pub fn chi_closed_form(h: &HopfAlgebra, gl: &GrouplikeData) -> Matrix {
    let s_minus2 = h.antipode_power(-2);
    let cols: Vec<Vec<Scalar>> = (0..h.dim())
        .map(|i| {
            let v = h.functional_on_element(gl.alpha.values(), &h.basis_vec(i), Side::Left);
            s_minus2.apply(&v)
        })
        .collect();
    Matrix::from_columns(&h.field, h.dim(), &cols)
}

/// The matrix of `h ↦ α(h₁)g⁻¹S²(h₂)g`.
pub fn chi_second_form(h: &HopfAlgebra, gl: &GrouplikeData) -> Matrix {
    let s2 = h.antipode_power(2);
    let cols: Vec<Vec<Scalar>> = (0..h.dim())
        .map(|i| {
            let v = h.functional_on_element(gl.alpha.values(), &h.basis_vec(i), Side::Right);
            let s = s2.apply(&v);
            h.mul_vec(&h.mul_vec(gl.g_inv.coeffs(), &s), gl.g.coeffs())
        })
        .collect();
    Matrix::from_columns(&h.field, h.dim(), &cols)
}

/// Column-wise comparison of two maps, witnessed by the first differing basis element.
pub(crate) fn compare_maps(name: &str, h: &HopfPresentation, lhs: &Matrix, rhs: &Matrix) -> Check {
    Check::identity(
        name,
        (0..h.dim()).map(|i| {
            (
                h.basis_names[i].clone(),
                h.format_vec(&lhs.column(i)),
                h.format_vec(&rhs.column(i)),
            )
        }),
    )
}

/// Properties of χ and Ω: algebra automorphism, closed forms, ε∘χ = α, ε∘Ω = α⁻¹.
pub fn verify_nakayama(
    h: &HopfAlgebra,
    ints: &IntegralData,
    gl: &GrouplikeData,
) -> Result<VerificationReport, IntegralError> {
    let chi = nakayama_chi(h, ints)?;
    let omega = nakayama_omega(h, ints)?;
    let n = h.dim();
    let mut r = VerificationReport::new();
    r.push(Check::identity(
        "chi-multiplicative",
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
            let lhs = chi.apply(&h.mul_vec(&h.basis_vec(i), &h.basis_vec(j)));
            let rhs = h.mul_vec(&chi.column(i), &chi.column(j));
            (
                format!("({}, {})", h.basis_names[i], h.basis_names[j]),
                h.format_vec(&lhs),
                h.format_vec(&rhs),
            )
        }),
    ));
    r.push(Check::assert(
        "chi-invertible",
        chi.rank() == n,
        "χ",
        format!("rank {}", chi.rank()),
        format!("rank {n}"),
    ));
    r.push(compare_maps("chi-closed-form", h, &chi, &chi_closed_form(h, gl)));
    let eps_chi = h.compose_functional(&h.counit, &chi);
    r.push(Check::assert(
        "epsilon-chi-is-alpha",
        eps_chi == gl.alpha.values(),
        "ε∘χ",
        h.format_functional(&eps_chi),
        &gl.alpha,
    ));
    let s = h.antipode_power(1);
    let s_inv = h.antipode_power(-1);
    r.push(compare_maps("omega-conjugate-inverse", h, &omega, &s_inv.mul(&chi).mul(&s)));
    r.push(compare_maps("omega-conjugate", h, &omega, &s.mul(&chi).mul(&s_inv)));
    let eps_omega = h.compose_functional(&h.counit, &omega);
    r.push(Check::assert(
        "epsilon-omega-is-alpha-inverse",
        eps_omega == gl.alpha_inv.values(),
        "ε∘Ω",
        h.format_functional(&eps_omega),
        &gl.alpha_inv,
    ));
    Ok(r)
}

/// Matrix of `f ↦ t↼f = f(t₁)t₂` from dual coordinates to H.
fn right_hit_matrix(h: &HopfPresentation, t: &[Scalar]) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(&h.field, n, n);
    for (a, b, c) in h.comul_vec(t).terms() {
        bump(&mut m, b, a, c);
    }
    m
}

/// Matrix of `f ↦ f⇀l = f(l₂)l₁`.
fn left_hit_matrix(h: &HopfPresentation, l: &[Scalar]) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(&h.field, n, n);
    for (a, b, c) in h.comul_vec(l).terms() {
        bump(&mut m, a, b, c);
    }
    m
}

/// The three statements about `t` and the Λ with `t↼Λ = 1`.
pub fn verify_lemma21(
    h: &HopfAlgebra,
    ints: &IntegralData,
    gl: &GrouplikeData,
) -> Result<VerificationReport, IntegralError> {
    let n = h.dim();
    let t = ints.left_h.coeffs();
    let mut r = VerificationReport::new();

    // Rescale the computed Λ so that Λ(t₁)t₂ = 1.
    let hit = h.functional_on_element(ints.right_hstar.values(), t, Side::Right);
    let p = h.unit.iter().position(|c| !c.is_zero()).expect("1 ≠ 0");
    let c = hit[p].checked_div(&h.unit[p]).expect("nonzero");
    let multiple: Vec<Scalar> = h.unit.iter().map(|u| u * &c).collect();
    if c.is_zero() || hit != multiple {
        return Err(IntegralError::RescalingImpossible);
    }
    let cinv = c.inv().expect("nonzero");
    let lam: Vec<Scalar> = ints.right_hstar.values().iter().map(|v| v * &cinv).collect();

    // Independently, the unique Λ' with t↼Λ' = 1.
    let m = right_hit_matrix(h, t);
    let m_inv = m
        .inverse()
        .ok_or(IntegralError::SingularActionMatrix("f ↦ t↼f"))?;
    let solved = m_inv.apply(&h.unit);
    r.push(Check::assert(
        "lemma21-i-right-integral",
        is_right_integral_functional(h, &solved),
        "Λ",
        h.format_functional(&solved),
        "a right integral",
    ));
    r.push(Check::assert(
        "lemma21-i-matches-normalized",
        solved == lam,
        "Λ",
        h.format_functional(&solved),
        h.format_functional(&lam),
    ));

    let s = h.antipode_power(1);
    let s_inv = h.antipode_power(-1);
    let alpha = gl.alpha.values();
    let mut first = Vec::with_capacity(n);
    let mut second = Vec::with_capacity(n);
    for i in 0..n {
        let hstar = m_inv.column(i);
        let via_s = h.element_on_functional(&s.column(i), &lam, Side::Right);
        let mut y = h.zero_vec();
        for (a, b, c) in h.comul_vec(&h.basis_vec(i)).terms() {
            let coeff = c * &alpha[b];
            if !coeff.is_zero() {
                for (k, v) in s_inv.column(a).iter().enumerate() {
                    y[k] = &y[k] + &(v * &coeff);
                }
            }
        }
        let via_alpha = h.element_on_functional(&y, &lam, Side::Left);
        let name = h.basis_names[i].clone();
        first.push((
            name.clone(),
            h.format_functional(&hstar),
            h.format_functional(&via_s),
        ));
        second.push((
            name,
            h.format_functional(&hstar),
            h.format_functional(&via_alpha),
        ));
    }
    r.push(Check::identity("lemma21-ii-via-antipode", first));
    r.push(Check::identity("lemma21-ii-via-alpha", second));

    // Δ(t) = S²(t₂)g ⊗ t₁
    let dt = h.comul_vec(t);
    let s2 = h.antipode_power(2);
    let right_g = Matrix::from_columns(
        &h.field,
        n,
        &(0..n)
            .map(|k| h.mul_vec(&s2.column(k), gl.g.coeffs()))
            .collect::<Vec<_>>(),
    );
    let rhs = h.tensor_map(&dt.flip(), &right_g, &Matrix::identity(&h.field, n));
    r.push(Check::assert(
        "lemma21-iii-coproduct-of-t",
        dt == rhs,
        "t",
        dt.format(&h.basis_names),
        rhs.format(&h.basis_names),
    ));
    Ok(r)
}

/// Ranks of `h* ↦ h*⇀l` and `h* ↦ l↼h*`; both are bijections when l is a nonzero integral.
pub fn verify_bijections(h: &HopfAlgebra, l: &crate::hopf::Element) -> VerificationReport {
    let n = h.dim();
    let mut r = VerificationReport::new();
    for (name, m) in [
        ("bijection-left-hit", left_hit_matrix(h, l.coeffs())),
        ("bijection-right-hit", right_hit_matrix(h, l.coeffs())),
    ] {
        let rank = m.rank();
        r.push(Check::assert(
            name,
            rank == n,
            &l.to_string(),
            format!("rank {rank}"),
            format!("rank {n}"),
        ));
    }
    r
}

/// `λ∘S = g⁻¹⇀λ`, `λ∘S⁻¹ = λ↼g⁻¹` and `λ∘S² = g⁻¹⇀λ↼g`.
pub fn verify_sstarlambda(
    h: &HopfAlgebra,
    ints: &IntegralData,
    gl: &GrouplikeData,
) -> VerificationReport {
    let lam = ints.left_hstar.values();
    let g = gl.g.coeffs();
    let g_inv = gl.g_inv.coeffs();
    let mut r = VerificationReport::new();
    let fmt = |f: &[Scalar]| h.format_functional(f);
    let cases = [
        (
            "lambda-circ-s",
            h.compose_functional(lam, &h.antipode_power(1)),
            h.element_on_functional(g_inv, lam, Side::Left),
        ),
        (
            "lambda-circ-s-inverse",
            h.compose_functional(lam, &h.antipode_power(-1)),
            h.element_on_functional(g_inv, lam, Side::Right),
        ),
        (
            "lambda-circ-s-squared",
            h.compose_functional(lam, &h.antipode_power(2)),
            h.element_on_functional(
                g,
                &h.element_on_functional(g_inv, lam, Side::Left),
                Side::Right,
            ),
        ),
    ];
    for (name, lhs, rhs) in cases {
        r.push(Check::assert(name, lhs == rhs, "λ", fmt(&lhs), fmt(&rhs)));
    }
    r
}

/// The four dual-basis sums built from a linear map `m` (S² for the trace
/// integrals, the identity for the semisimple-cosemisimple case).
#[derive(Clone, Debug)]
pub struct DualBasisSums {
    /// `Σ⟨eⁱ, m((eᵢ)₁)⟩(eᵢ)₂`
    pub r: crate::hopf::Element,
    /// `Σ⟨eⁱ, m((eᵢ)₂)⟩(eᵢ)₁`
    pub t: crate::hopf::Element,
    /// `Σ m(eᵢ)⇀eⁱ`
    pub lambda: crate::hopf::Functional,
    /// `Σ eⁱ↼m(eᵢ)`
    pub big_lambda: crate::hopf::Functional,
}

pub fn dual_basis_sums(h: &HopfAlgebra, m: &Matrix) -> DualBasisSums {
    let n = h.dim();
    let mut r = h.zero_vec();
    let mut t = h.zero_vec();
    for i in 0..n {
        for (a, b, c) in &h.comult[i] {
            let ra = m.get(i, *a);
            if !ra.is_zero() {
                r[*b] = &r[*b] + &(c * &ra);
            }
            let tb = m.get(i, *b);
            if !tb.is_zero() {
                t[*a] = &t[*a] + &(c * &tb);
            }
        }
    }
    // λ(h') = Σᵢ eⁱ(h'·m(eᵢ)) = Tr(x ↦ h'm(x)); Λ(h') = Tr(x ↦ m(x)h').
    let trace_of = |k: usize, left: bool| {
        (0..n).fold(h.field.zero(), |acc, i| {
            let mi = m.column(i);
            let ek = h.basis_vec(k);
            let prod = if left {
                h.mul_vec(&ek, &mi)
            } else {
                h.mul_vec(&mi, &ek)
            };
            acc + prod[i].clone()
        })
    };
    let lambda = (0..n).map(|k| trace_of(k, true)).collect();
    let big_lambda = (0..n).map(|k| trace_of(k, false)).collect();
    DualBasisSums {
        r: h.wrap(r),
        t: h.wrap(t),
        lambda: h.wrap_functional(lambda),
        big_lambda: h.wrap_functional(big_lambda),
    }
}

/// The trace integrals r, t, λ, Λ built from S².
pub fn trace_integrals(h: &HopfAlgebra) -> DualBasisSums {
    dual_basis_sums(h, &h.antipode_power(2))
}

/// Postconditions of the trace construction.
pub fn verify_trace_integrals(h: &HopfAlgebra, ints: &IntegralData) -> VerificationReport {
    let sums = trace_integrals(h);
    let mut r = VerificationReport::new();
    let tr = h.antipode_power(2).trace();
    let values = [
        ("ε(r)", sums.r.counit()),
        ("ε(t)", sums.t.counit()),
        ("λ(1)", sums.lambda.eval(&h.one()).expect("same algebra")),
        ("Λ(1)", sums.big_lambda.eval(&h.one()).expect("same algebra")),
    ];
    r.push(Check::identity(
        "trace-values-equal-tr-s2",
        values
            .iter()
            .map(|(label, v)| (label.to_string(), v.clone(), tr.clone())),
    ));
    r.push(Check::assert(
        "trace-r-right-integral",
        is_right_integral(h, sums.r.coeffs()),
        "r",
        &sums.r,
        "a right integral",
    ));
    r.push(Check::assert(
        "trace-t-left-integral",
        is_left_integral(h, sums.t.coeffs()),
        "t",
        &sums.t,
        "a left integral",
    ));
    r.push(Check::assert(
        "trace-lambda-left-integral",
        is_left_integral_functional(h, sums.lambda.values()),
        "λ",
        &sums.lambda,
        "a left integral",
    ));
    r.push(Check::assert(
        "trace-Lambda-right-integral",
        is_right_integral_functional(h, sums.big_lambda.values()),
        "Λ",
        &sums.big_lambda,
        "a right integral",
    ));
    let cosemisimple = !ints.left_hstar.eval(&h.one()).expect("same algebra").is_zero();
    let semisimple = !ints.left_h.counit().is_zero();
    let iff = |name: &str, nonzero: bool, criterion: bool, what: &str| {
        Check::assert(
            name,
            nonzero == criterion,
            what,
            format!("nonzero = {nonzero}"),
            format!("criterion = {criterion}"),
        )
    };
    r.push(iff("trace-r-nonzero-iff-cosemisimple", !sums.r.is_zero(), cosemisimple, "r"));
    r.push(iff("trace-t-nonzero-iff-cosemisimple", !sums.t.is_zero(), cosemisimple, "t"));
    r.push(iff(
        "trace-lambda-nonzero-iff-semisimple",
        !sums.lambda.is_zero(),
        semisimple,
        "λ",
    ));
    r.push(iff(
        "trace-Lambda-nonzero-iff-semisimple",
        !sums.big_lambda.is_zero(),
        semisimple,
        "Λ",
    ));
    r
}
