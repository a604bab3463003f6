//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`HopfPresentation`] is raw data: multiplication, unit, comultiplication,
//! counit and antipode tables in a fixed basis. A [`HopfAlgebra`] is a
//! presentation that has passed [`verify_axioms`]; only those hand out
//! [`Element`]s and [`Functional`]s. Functionals are stored by their values on
//! the basis, i.e. in dual-basis coordinates.

mod axioms;
mod tensor;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{FieldSpec, Scalar};

pub use axioms::{verify_axioms, verify_derived_properties};
pub use tensor::Tensor2;

#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("expected a coordinate vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coefficient from field {got} in an algebra over {expected}")]
    FieldMismatch { expected: String, got: String },
    #[error("the antipode matrix is singular")]
    SingularAntipode,
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("Hopf axioms fail: {}", first_failure(.0))]
    AxiomFailure(Box<VerificationReport>),
}

fn first_failure(r: &VerificationReport) -> String {
    match r.failures().next() {
        Some(c) => match &c.witness {
            Some(w) => format!("{} at {}: {} != {}", c.name, w.element, w.lhs, w.rhs),
            None => c.name.clone(),
        },
        None => "no failure recorded".into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Structure constants of a finite-dimensional Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub field: FieldSpec,
    pub basis_names: Vec<String>,
    /// `mult[i * dim + j]` is `eᵢeⱼ` as sparse coordinates.
    pub mult: Vec<Vec<(usize, Scalar)>>,
    pub unit: Vec<Scalar>,
    /// `comult[i]` lists `(j, k, c)` with `Δeᵢ = Σ c·eⱼ⊗eₖ`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

impl HopfPresentation {
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    /// Check table shapes, index ranges and fields (not the axioms).
    pub fn check_shape(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let bad = |m: String| Err(HopfError::Malformed(m));
        if n == 0 {
            return bad("dimension zero".into());
        }
        if self.mult.len() != n * n {
            return bad(format!("mult has {} entries, expected {}", self.mult.len(), n * n));
        }
        if self.unit.len() != n || self.counit.len() != n || self.comult.len() != n {
            return bad("unit/counit/comult length differs from dimension".into());
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return bad("antipode is not dim x dim".into());
        }
        let field_ok = |s: &Scalar| s.field() == self.field;
        let mult_ok = self
            .mult
            .iter()
            .flatten()
            .all(|(k, c)| *k < n && field_ok(c));
        let comult_ok = self
            .comult
            .iter()
            .flatten()
            .all(|(j, k, c)| *j < n && *k < n && field_ok(c));
        let vec_ok = self.unit.iter().chain(&self.counit).all(field_ok);
        if !(mult_ok && comult_ok && vec_ok && self.antipode.field() == &self.field) {
            return bad("index out of range or coefficient from another field".into());
        }
        Ok(())
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    pub fn comul_vec(&self, a: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, c) in &self.comult[i] {
                t.add_term(*j, *k, x * c);
            }
        }
        t
    }

    /// `⟨f, a⟩` for dual coordinates `f`.
    pub fn pair(&self, f: &[Scalar], a: &[Scalar]) -> Scalar {
        f.iter()
            .zip(a)
            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
            .fold(self.field.zero(), |acc, (x, y)| acc + x * y)
    }

    pub fn counit_vec(&self, a: &[Scalar]) -> Scalar {
        self.pair(&self.counit, a)
    }

    /// Componentwise product in H ⊗ H.
    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (a, b, c1) in x.terms() {
            for (c, d, c2) in y.terms() {
                let coeff = c1 * c2;
                for (p, u) in self.product(a, c) {
                    for (r, v) in self.product(b, d) {
                        out.add_term(*p, *r, &coeff * &(u * v));
                    }
                }
            }
        }
        out
    }

    /// Apply `φ ⊗ ψ` for linear maps given by matrices.
    pub fn tensor_map(&self, t: &Tensor2, left: &Matrix, right: &Matrix) -> Tensor2 {
        let mut out = Tensor2::new();
        for (a, b, c) in t.terms() {
            let la = left.column(a);
            let rb = right.column(b);
            for (p, u) in la.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                for (r, v) in rb.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    out.add_term(p, r, c * &(u * v));
                }
            }
        }
        out
    }

    /// `μ(t)` for a tensor, i.e. `Σ c·eₐe_b`.
    pub fn multiply_out(&self, t: &Tensor2) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (a, b, c) in t.terms() {
            for (k, v) in self.product(a, b) {
                out[*k] = &out[*k] + &(c * v);
            }
        }
        out
    }

    /// `f ⇀ h = Σ f(h₂)h₁` (left) or `h ↼ f = Σ f(h₁)h₂` (right).
    pub fn functional_on_element(&self, f: &[Scalar], h: &[Scalar], side: Side) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (a, b, c) in self.comul_vec(h).terms() {
            let (keep, eval) = match side {
                Side::Left => (a, b),
                Side::Right => (b, a),
            };
            if !f[eval].is_zero() {
                out[keep] = &out[keep] + &(c * &f[eval]);
            }
        }
        out
    }

    /// `⟨h ⇀ f, h'⟩ = f(h'h)` (left) or `⟨f ↼ h, h'⟩ = f(hh')` (right).
    pub fn element_on_functional(&self, h: &[Scalar], f: &[Scalar], side: Side) -> Vec<Scalar> {
        (0..self.dim())
            .map(|k| {
                let ek = self.basis_vec(k);
                let prod = match side {
                    Side::Left => self.mul_vec(&ek, h),
                    Side::Right => self.mul_vec(h, &ek),
                };
                self.pair(f, &prod)
            })
            .collect()
    }

    /// Convolution `(f·g)(h) = f(h₁)g(h₂)`.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim())
            .map(|i| {
                self.comult[i]
                    .iter()
                    .filter(|(a, b, _)| !f[*a].is_zero() && !g[*b].is_zero())
                    .fold(self.field.zero(), |acc, (a, b, c)| acc + c * &(&f[*a] * &g[*b]))
            })
            .collect()
    }

    /// Dual coordinates of `f ∘ M`.
    pub fn compose_functional(&self, f: &[Scalar], m: &Matrix) -> Vec<Scalar> {
        m.transpose().apply(f)
    }

    pub fn format_vec(&self, v: &[Scalar]) -> String {
        format_terms(v, |i| self.basis_names[i].clone())
    }

    pub fn format_functional(&self, f: &[Scalar]) -> String {
        format_terms(f, |i| format!("p_{}", self.basis_names[i]))
    }
}

fn format_terms(v: &[Scalar], name: impl Fn(usize) -> String) -> String {
    format_combination(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, name(i))),
    )
}

/// `Σ c·name` with unit coefficients dropped and signs folded into the
/// separators: `x - gx`, `2 + 3*a`, `(zeta3^1 + 1)*c`. A term named `1` is
/// printed as its bare coefficient.
pub fn format_combination<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, n) in terms {
        let term = if n == "1" {
            c.to_string()
        } else if c.is_one() {
            n
        } else if (-c).is_one() {
            format!("-{n}")
        } else {
            format!("{}*{n}", c.coefficient_string())
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-').filter(|r| !r.contains(' ')) {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

struct Inner {
    pres: HopfPresentation,
    antipode_inverse: Matrix,
    axioms: VerificationReport,
}

/// A presentation whose Hopf axioms have been verified. Cheap to clone;
/// clones share identity, which is what [`HopfError::AlgebraMismatch`] tests.
#[derive(Clone)]
pub struct HopfAlgebra(Arc<Inner>);

impl HopfAlgebra {
    /// Verify the axioms once and wrap the presentation.
    pub fn new(pres: HopfPresentation) -> Result<Self, HopfError> {
        pres.check_shape()?;
        let axioms = verify_axioms(&pres);
        if !axioms.all_passed() {
            return Err(HopfError::AxiomFailure(Box::new(axioms)));
        }
        let antipode_inverse = pres.antipode.inverse().ok_or(HopfError::SingularAntipode)?;
        Ok(HopfAlgebra(Arc::new(Inner {
            pres,
            antipode_inverse,
            axioms,
        })))
    }

    pub fn presentation(&self) -> &HopfPresentation {
        &self.0.pres
    }

    pub fn axiom_report(&self) -> &VerificationReport {
        &self.0.axioms
    }

    pub fn same_as(&self, other: &HopfAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn antipode_inverse(&self) -> &Matrix {
        &self.0.antipode_inverse
    }

    /// `S^k` as a matrix; negative `k` uses `S⁻¹`.
    pub fn antipode_power(&self, k: i64) -> Matrix {
        let base = if k < 0 {
            &self.0.antipode_inverse
        } else {
            &self.0.pres.antipode
        };
        base.pow(k.abs()).expect("nonnegative power")
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element, HopfError> {
        self.check_vec(&coeffs)?;
        Ok(Element {
            alg: self.clone(),
            coeffs,
        })
    }

    pub fn functional(&self, values: Vec<Scalar>) -> Result<Functional, HopfError> {
        self.check_vec(&values)?;
        Ok(Functional {
            alg: self.clone(),
            values,
        })
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<(), HopfError> {
        if v.len() != self.dim() {
            return Err(HopfError::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|c| c.field() != self.field) {
            return Err(HopfError::FieldMismatch {
                expected: self.field.to_string(),
                got: bad.field().to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn wrap(&self, coeffs: Vec<Scalar>) -> Element {
        Element {
            alg: self.clone(),
            coeffs,
        }
    }

    pub(crate) fn wrap_functional(&self, values: Vec<Scalar>) -> Functional {
        Functional {
            alg: self.clone(),
            values,
        }
    }

    pub fn basis(&self, i: usize) -> Element {
        self.wrap(self.basis_vec(i))
    }

    /// Basis element by name.
    pub fn basis_named(&self, name: &str) -> Option<Element> {
        self.basis_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.basis(i))
    }

    pub fn one(&self) -> Element {
        self.wrap(self.unit.clone())
    }

    pub fn zero(&self) -> Element {
        self.wrap(self.zero_vec())
    }

    /// The counit ε, the unit of H*.
    pub fn counit_functional(&self) -> Functional {
        self.wrap_functional(self.counit.clone())
    }

    /// The dual basis functional `eⁱ`.
    pub fn dual_basis(&self, i: usize) -> Functional {
        self.wrap_functional(self.basis_vec(i))
    }
}

impl Deref for HopfAlgebra {
    type Target = HopfPresentation;
    fn deref(&self) -> &HopfPresentation {
        &self.0.pres
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra(dim {} over {})", self.dim(), self.field)
    }
}

/// An element of H in basis coordinates.
#[derive(Clone)]
pub struct Element {
    alg: HopfAlgebra,
    coeffs: Vec<Scalar>,
}

/// An element of H* by its values on the basis.
#[derive(Clone)]
pub struct Functional {
    alg: HopfAlgebra,
    values: Vec<Scalar>,
}

impl Element {
    pub fn algebra(&self) -> &HopfAlgebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn same(&self, other: &HopfAlgebra) -> Result<(), HopfError> {
        if self.alg.same_as(other) {
            Ok(())
        } else {
            Err(HopfError::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, HopfError> {
        self.same(&other.alg)?;
        Ok(self.alg.wrap(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Element) -> Result<Element, HopfError> {
        self.add(&other.scale(&self.alg.field.from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        self.alg.wrap(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Element) -> Result<Element, HopfError> {
        self.same(&other.alg)?;
        Ok(self.alg.wrap(self.alg.mul_vec(&self.coeffs, &other.coeffs)))
    }

    pub fn comul(&self) -> Tensor2 {
        self.alg.comul_vec(&self.coeffs)
    }

    /// `Δ(a)` as `(eⱼ, eₖ, c)` triples.
    pub fn comul_terms(&self) -> Vec<(Element, Element, Scalar)> {
        self.comul()
            .terms()
            .map(|(j, k, c)| (self.alg.basis(j), self.alg.basis(k), c.clone()))
            .collect()
    }

    pub fn counit(&self) -> Scalar {
        self.alg.counit_vec(&self.coeffs)
    }

    /// `S^k(a)`; negative `k` applies `S⁻¹`.
    pub fn antipode_pow(&self, k: i64) -> Element {
        self.alg.wrap(self.alg.antipode_power(k).apply(&self.coeffs))
    }

    /// `a ↼ f = f(a₁)a₂`.
    pub fn hit_right(&self, f: &Functional) -> Result<Element, HopfError> {
        act_functional_on_element(f, self, Side::Right)
    }

    /// `a ⇀ f`: `⟨a⇀f, h'⟩ = f(h'a)`.
    pub fn hit_functional(&self, f: &Functional) -> Result<Functional, HopfError> {
        act_element_on_functional(self, f, Side::Left)
    }
}

impl Functional {
    pub fn algebra(&self) -> &HopfAlgebra {
        &self.alg
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, h: &Element) -> Result<Scalar, HopfError> {
        if !self.alg.same_as(&h.alg) {
            return Err(HopfError::AlgebraMismatch);
        }
        Ok(self.alg.pair(&self.values, &h.coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        self.alg.wrap_functional(self.values.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Functional) -> Result<Functional, HopfError> {
        if !self.alg.same_as(&other.alg) {
            return Err(HopfError::AlgebraMismatch);
        }
        Ok(self.alg.wrap_functional(
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Convolution product in H*.
    pub fn convolve(&self, other: &Functional) -> Result<Functional, HopfError> {
        dual_functional_composition(self, other)
    }

    /// `f ∘ S^k`.
    pub fn compose_antipode(&self, k: i64) -> Functional {
        self.alg.wrap_functional(
            self.alg
                .compose_functional(&self.values, &self.alg.antipode_power(k)),
        )
    }

    /// `f ⇀ h = f(h₂)h₁`.
    pub fn hit_left(&self, h: &Element) -> Result<Element, HopfError> {
        act_functional_on_element(self, h, Side::Left)
    }

    /// `f ↼ h`: `⟨f↼h, h'⟩ = f(hh')`.
    pub fn hit_by(&self, h: &Element) -> Result<Functional, HopfError> {
        act_element_on_functional(h, self, Side::Right)
    }
}

/// `f ⇀ h` (left) or `h ↼ f` (right).
pub fn act_functional_on_element(
    f: &Functional,
    h: &Element,
    side: Side,
) -> Result<Element, HopfError> {
    if !f.alg.same_as(&h.alg) {
        return Err(HopfError::AlgebraMismatch);
    }
    Ok(h.alg
        .wrap(h.alg.functional_on_element(&f.values, &h.coeffs, side)))
}

/// `h ⇀ f` (left) or `f ↼ h` (right).
pub fn act_element_on_functional(
    h: &Element,
    f: &Functional,
    side: Side,
) -> Result<Functional, HopfError> {
    if !f.alg.same_as(&h.alg) {
        return Err(HopfError::AlgebraMismatch);
    }
    Ok(h.alg
        .wrap_functional(h.alg.element_on_functional(&h.coeffs, &f.values, side)))
}

/// Convolution `(f·g)(h) = f(h₁)g(h₂)`.
pub fn dual_functional_composition(
    f: &Functional,
    g: &Functional,
) -> Result<Functional, HopfError> {
    if !f.alg.same_as(&g.alg) {
        return Err(HopfError::AlgebraMismatch);
    }
    Ok(f.alg.wrap_functional(f.alg.convolve(&f.values, &g.values)))
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.coeffs == other.coeffs
    }
}

impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.values == other.values
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alg.format_vec(&self.coeffs))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alg.format_functional(&self.values))
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional({self})")
    }
}
