//! The infinite-dimensional co-Frobenius Hopf algebra Tₙ × kA, with A = ⟨a⟩
//! infinite cyclic: as an algebra Tₙ ⊗ kA, with comultiplication twisted by
//! the grading deg(cⁱxʲ) = aʲ. Identities are checked on windows |k| ≤ K of
//! the basis cⁱxʲ ⊗ aᵏ.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::constructions::{taft, taft_coproduct, taft_index, taft_name, taft_product, ConstructionError};
use crate::hopf::{format_combination, Side};
use crate::linalg::Matrix;
use crate::radford::{order_by, OrderResult};
use crate::report::{Check, VerificationReport};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Error)]
pub enum BicrossError {
    #[error("bicrossproduct needs n >= 2, got {0}")]
    InvalidOrder(u64),
    #[error("window must be at least {min}, got {got}")]
    WindowTooSmall { min: i64, got: i64 },
    #[error("could not solve for Ω({0}) on the window")]
    SolveFailure(String),
    #[error("h₁Λ(h₂) = Λ(h)g fails: {0}")]
    InconsistentG(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// The basis element `cⁱxʲ ⊗ aᵏ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicrossBasis {
    pub i: usize,
    pub j: usize,
    pub k: i64,
}

impl BicrossBasis {
    pub fn new(i: usize, j: usize, k: i64) -> Self {
        BicrossBasis { i, j, k }
    }
}

impl fmt::Display for BicrossBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        };
        write!(f, "{}⊗{a}", taft_name("c", self.i, self.j))
    }
}

/// A finitely supported linear combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseElement {
    terms: BTreeMap<BicrossBasis, Scalar>,
}

/// A functional given by finitely many nonzero values on the basis.
pub type SparseFunctional = SparseElement;

/// A finitely supported element of 𝓗 ⊗ 𝓗.
pub type SparseTensor = BTreeMap<(BicrossBasis, BicrossBasis), Scalar>;

impl SparseElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BicrossBasis, one: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(b, one);
        s
    }

    pub fn add_term(&mut self, b: BicrossBasis, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&b) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(b, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BicrossBasis, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &BicrossBasis) -> Option<&Scalar> {
        self.terms.get(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (b, v) in &self.terms {
            out.add_term(*b, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, v) in &other.terms {
            out.add_term(*b, v.clone());
        }
        out
    }
}

impl fmt::Display for SparseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(self.terms.iter().map(|(b, c)| (c, b.to_string()))))
    }
}

fn add_tensor(t: &mut SparseTensor, key: (BicrossBasis, BicrossBasis), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let v = match t.remove(&key) {
        Some(old) => &old + &c,
        None => c,
    };
    if !v.is_zero() {
        t.insert(key, v);
    }
}

fn format_tensor(t: &SparseTensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b), c)| {
            if c.is_one() {
                format!("({a})⊗({b})")
            } else {
                format!("{}*({a})⊗({b})", c.coefficient_string())
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// An algebra map 𝓗 → k, determined by its values on `c⊗e`, `x⊗e`, `1⊗a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub c: Scalar,
    pub x: Scalar,
    pub a: Scalar,
}

impl Character {
    pub fn eval_basis(&self, b: &BicrossBasis) -> Scalar {
        let xj = if b.j == 0 {
            self.c.field().one()
        } else {
            self.x.pow(b.j as i64).expect("nonnegative")
        };
        &(&self.c.pow(b.i as i64).expect("nonnegative") * &xj) * &self.a.pow(b.k).expect("a-value is invertible")
    }
}

/// Structure maps of 𝓗 = Tₙ × kA over ℚ(ζₙ).
#[derive(Clone, Debug)]
pub struct Bicross {
    n: usize,
    field: FieldSpec,
    q: Scalar,
    taft_s: Matrix,
    taft_s_inv: Matrix,
}

impl Bicross {
    pub fn new(n: u64) -> Result<Self, BicrossError> {
        if n < 2 {
            return Err(BicrossError::InvalidOrder(n));
        }
        let t = taft(n)?;
        Ok(Bicross {
            n: n as usize,
            field: t.field.clone(),
            q: t.field.generator().expect("cyclotomic"),
            taft_s: t.antipode.clone(),
            taft_s_inv: t.antipode_inverse().clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn basis(&self, i: usize, j: usize, k: i64) -> SparseElement {
        SparseElement::basis(BicrossBasis::new(i, j, k), self.field.one())
    }

    pub fn one(&self) -> SparseElement {
        self.basis(0, 0, 0)
    }

    /// All `cⁱxʲ ⊗ aᵏ` with `|k| ≤ window`.
    pub fn window(&self, window: i64) -> Vec<BicrossBasis> {
        let n = self.n;
        (-window..=window)
            .flat_map(|k| (0..n).flat_map(move |j| (0..n).map(move |i| BicrossBasis::new(i, j, k))))
            .collect()
    }

    fn mul_basis(&self, a: &BicrossBasis, b: &BicrossBasis) -> Option<(Scalar, BicrossBasis)> {
        taft_product(self.n, (a.i, a.j), (b.i, b.j), &self.q)
            .map(|(c, (i, j))| (c, BicrossBasis::new(i, j, a.k + b.k)))
    }

    pub fn mul(&self, x: &SparseElement, y: &SparseElement) -> SparseElement {
        let mut out = SparseElement::zero();
        for (a, u) in x.terms() {
            for (b, v) in y.terms() {
                if let Some((c, t)) = self.mul_basis(a, b) {
                    out.add_term(t, &(u * v) * &c);
                }
            }
        }
        out
    }

    fn comul_basis(&self, b: &BicrossBasis) -> Vec<(BicrossBasis, BicrossBasis, Scalar)> {
        taft_coproduct(self.n, b.i, b.j, &self.q)
            .into_iter()
            .map(|((i1, j1), (i2, j2), c)| {
                // the t in the q-binomial sum is j2
                (
                    BicrossBasis::new(i1, j1, j2 as i64 + b.k),
                    BicrossBasis::new(i2, j2, b.k),
                    c,
                )
            })
            .collect()
    }

    pub fn comul(&self, x: &SparseElement) -> SparseTensor {
        let mut out = SparseTensor::new();
        for (b, u) in x.terms() {
            for (l, r, c) in self.comul_basis(b) {
                add_tensor(&mut out, (l, r), u * &c);
            }
        }
        out
    }

    pub fn counit(&self, x: &SparseElement) -> Scalar {
        x.terms()
            .filter(|(b, _)| b.j == 0)
            .fold(self.field.zero(), |acc, (_, c)| acc + c.clone())
    }

    fn antipode_basis(&self, b: &BicrossBasis, inverse: bool) -> SparseElement {
        let m = if inverse { &self.taft_s_inv } else { &self.taft_s };
        let col = m.column(taft_index(self.n, b.i, b.j));
        let mut out = SparseElement::zero();
        let k = -(b.j as i64) - b.k;
        for (idx, c) in col.into_iter().enumerate() {
            out.add_term(BicrossBasis::new(idx % self.n, idx / self.n, k), c);
        }
        out
    }

    /// `S^power(x)`; negative powers use S⁻¹.
    pub fn antipode(&self, x: &SparseElement, power: i64) -> SparseElement {
        let mut cur = x.clone();
        for _ in 0..power.unsigned_abs() {
            let mut next = SparseElement::zero();
            for (b, u) in cur.terms() {
                next = next.add(&self.antipode_basis(b, power < 0).scale(u));
            }
            cur = next;
        }
        cur
    }

    pub fn eval(&self, f: &SparseFunctional, x: &SparseElement) -> Scalar {
        x.terms()
            .filter_map(|(b, c)| f.coeff(b).map(|v| v * c))
            .fold(self.field.zero(), |acc, v| acc + v)
    }

    /// `f⇀x = f(x₂)x₁` (left) or `x↼f = f(x₁)x₂` (right).
    pub fn functional_on_element(&self, f: &SparseFunctional, x: &SparseElement, side: Side) -> SparseElement {
        self.map_on_element(|b| f.coeff(b).cloned().unwrap_or_else(|| self.field.zero()), x, side)
    }

    /// As [`Self::functional_on_element`] for a character.
    pub fn character_on_element(&self, chi: &Character, x: &SparseElement, side: Side) -> SparseElement {
        self.map_on_element(|b| chi.eval_basis(b), x, side)
    }

    fn map_on_element(
        &self,
        f: impl Fn(&BicrossBasis) -> Scalar,
        x: &SparseElement,
        side: Side,
    ) -> SparseElement {
        let mut out = SparseElement::zero();
        for ((l, r), c) in self.comul(x) {
            let (keep, eval) = match side {
                Side::Left => (l, r),
                Side::Right => (r, l),
            };
            let v = f(&eval);
            if !v.is_zero() {
                out.add_term(keep, &c * &v);
            }
        }
        out
    }

    /// Basis elements `y` with `x·y` (or `y·x`) able to reach the support of `f`.
    /// Multiplication adds the (j, k) degrees, so this set is finite.
    fn hit_candidates(&self, f: &SparseFunctional, x: &BicrossBasis) -> BTreeSet<BicrossBasis> {
        let mut out = BTreeSet::new();
        for (s, _) in f.terms() {
            if s.j >= x.j {
                for i in 0..self.n {
                    out.insert(BicrossBasis::new(i, s.j - x.j, s.k - x.k));
                }
            }
        }
        out
    }

    /// `x⇀f` with `⟨x⇀f, y⟩ = f(yx)` (left) or `f↼x` with `⟨f↼x, y⟩ = f(xy)` (right).
    /// The result is again finitely supported.
    pub fn element_on_functional(&self, x: &SparseElement, f: &SparseFunctional, side: Side) -> SparseFunctional {
        let mut out = SparseElement::zero();
        for (b, u) in x.terms() {
            for y in self.hit_candidates(f, b) {
                let prod = match side {
                    Side::Left => self.mul_basis(&y, b),
                    Side::Right => self.mul_basis(b, &y),
                };
                if let Some((c, t)) = prod {
                    if let Some(v) = f.coeff(&t) {
                        out.add_term(y, &(u * &c) * v);
                    }
                }
            }
        }
        out
    }

    /// Convolution of characters.
    pub fn convolve(&self, f: &Character, g: &Character) -> Character {
        let on = |b: BicrossBasis| {
            self.comul_basis(&b)
                .into_iter()
                .fold(self.field.zero(), |acc, (l, r, c)| acc + &c * &(&f.eval_basis(&l) * &g.eval_basis(&r)))
        };
        Character {
            c: on(BicrossBasis::new(1, 0, 0)),
            x: on(BicrossBasis::new(0, 1, 0)),
            a: on(BicrossBasis::new(0, 0, 1)),
        }
    }

    pub fn counit_character(&self) -> Character {
        Character {
            c: self.field.one(),
            x: self.field.zero(),
            a: self.field.one(),
        }
    }

    /// `Λ = p_{x^{n-1}} ⊗ p_e`.
    pub fn right_integral(&self) -> SparseFunctional {
        self.basis(0, self.n - 1, 0)
    }

    /// `c^{n-1} ⊗ a^{n-1}`.
    pub fn expected_g(&self) -> SparseElement {
        self.basis(self.n - 1, 0, self.n as i64 - 1)
    }
}

/// `Λ(h₁)h₂ = Λ(h)1` on the window.
pub fn verify_right_integral(b: &Bicross, window: i64) -> VerificationReport {
    let lam = b.right_integral();
    let one = b.one();
    let mut r = VerificationReport::new();
    r.push(Check::identity(
        "right-integral",
        b.window(window).into_iter().map(|h| {
            let x = SparseElement::basis(h, b.field.one());
            let lhs = b.functional_on_element(&lam, &x, Side::Right);
            let rhs = one.scale(&b.eval(&lam, &x));
            (h.to_string(), lhs.to_string(), rhs.to_string())
        }),
    ));
    r.push(Check::identity(
        "right-integral-values",
        b.window(window).into_iter().map(|h| {
            let expected = if h == BicrossBasis::new(0, b.n - 1, 0) { 1 } else { 0 };
            let v = b.eval(&lam, &SparseElement::basis(h, b.field.one()));
            (h.to_string(), v, b.field.from_int(expected))
        }),
    ));
    r
}

/// g from `h₁Λ(h₂) = Λ(h)g` at `h = x^{n-1}⊗e`, verified on the window.
pub fn distinguished_g_bicross(b: &Bicross, window: i64) -> Result<SparseElement, BicrossError> {
    if window < b.n as i64 {
        return Err(BicrossError::WindowTooSmall {
            min: b.n as i64,
            got: window,
        });
    }
    let lam = b.right_integral();
    let witness = b.basis(0, b.n - 1, 0);
    let scale = b.eval(&lam, &witness).inv().expect("Λ(x^{n-1}) = 1");
    let g = b.functional_on_element(&lam, &witness, Side::Left).scale(&scale);
    for h in b.window(window) {
        let x = SparseElement::basis(h, b.field.one());
        let lhs = b.functional_on_element(&lam, &x, Side::Left);
        let rhs = g.scale(&b.eval(&lam, &x));
        if lhs != rhs {
            return Err(BicrossError::InconsistentG(format!("at {h}: {lhs} vs {rhs}")));
        }
    }
    Ok(g)
}

/// α and α⁻¹ through Ω: solve `Ω(h)⇀Λ = Λ↼h` over window-supported
/// unknowns, read off `α⁻¹ = ε∘Ω` on generators, and set `α = α⁻¹∘S⁻¹`.
pub struct AlphaData {
    pub alpha: Character,
    pub alpha_inv: Character,
    /// Ω on every window basis element.
    pub omega: BTreeMap<BicrossBasis, SparseElement>,
}

pub fn distinguished_alpha_bicross(b: &Bicross, window: i64) -> Result<AlphaData, BicrossError> {
    let lam = b.right_integral();
    let unknowns = b.window(window);
    let tests = b.window(window + b.n as i64);
    let mut a = Matrix::zeros(&b.field, tests.len(), unknowns.len());
    for (r, y) in tests.iter().enumerate() {
        for (c, u) in unknowns.iter().enumerate() {
            if let Some((s, t)) = b.mul_basis(y, u) {
                if let Some(v) = lam.coeff(&t) {
                    a.set(r, c, &s * v);
                }
            }
        }
    }
    if a.rank() != unknowns.len() {
        return Err(BicrossError::SolveFailure("window system is not injective".into()));
    }
    let rhs: Vec<Vec<Scalar>> = unknowns
        .iter()
        .map(|h| {
            let f = b.element_on_functional(&SparseElement::basis(*h, b.field.one()), &lam, Side::Right);
            tests
                .iter()
                .map(|y| f.coeff(y).cloned().unwrap_or_else(|| b.field.zero()))
                .collect()
        })
        .collect();
    let mut omega = BTreeMap::new();
    for (h, sol) in unknowns.iter().zip(a.solve_many(&rhs)) {
        let sol = sol.ok_or_else(|| BicrossError::SolveFailure(h.to_string()))?;
        let mut e = SparseElement::zero();
        for (u, c) in unknowns.iter().zip(sol) {
            e.add_term(*u, c);
        }
        omega.insert(*h, e);
    }
    let eps_omega = |h: BicrossBasis| b.counit(&omega[&h]);
    let alpha_inv = Character {
        c: eps_omega(BicrossBasis::new(1, 0, 0)),
        x: eps_omega(BicrossBasis::new(0, 1, 0)),
        a: eps_omega(BicrossBasis::new(0, 0, 1)),
    };
    let via_s_inv = |h: BicrossBasis| {
        let s = b.antipode(&SparseElement::basis(h, b.field.one()), -1);
        s.terms()
            .fold(b.field.zero(), |acc, (u, c)| acc + c * &alpha_inv.eval_basis(u))
    };
    let alpha = Character {
        c: via_s_inv(BicrossBasis::new(1, 0, 0)),
        x: via_s_inv(BicrossBasis::new(0, 1, 0)),
        a: via_s_inv(BicrossBasis::new(0, 0, 1)),
    };
    Ok(AlphaData {
        alpha,
        alpha_inv,
        omega,
    })
}

pub fn order_of_character_bicross(b: &Bicross, alpha: &Character, bound: u64) -> OrderResult {
    order_by(alpha, &b.counit_character(), bound, |p| b.convolve(p, alpha))
}

pub fn order_of_grouplike_bicross(b: &Bicross, g: &SparseElement, bound: u64) -> OrderResult {
    order_by(g, &b.one(), bound, |p| b.mul(p, g))
}

/// Least m ≤ bound with S^m = id on every window element.
pub fn order_of_antipode_bicross(b: &Bicross, window: i64, bound: u64) -> OrderResult {
    let basis: Vec<SparseElement> = b
        .window(window)
        .into_iter()
        .map(|h| SparseElement::basis(h, b.field.one()))
        .collect();
    let images: Vec<SparseElement> = basis.iter().map(|x| b.antipode(x, 1)).collect();
    order_by(&images, &basis, bound, |cur| cur.iter().map(|x| b.antipode(x, 1)).collect())
}

/// Hopf axioms on the window; associativity on triples with |k| ≤ 1.
pub fn verify_window_axioms(b: &Bicross, window: i64) -> VerificationReport {
    let basis: Vec<SparseElement> = b
        .window(window)
        .into_iter()
        .map(|h| SparseElement::basis(h, b.field.one()))
        .collect();
    let small: Vec<SparseElement> = b
        .window(window.min(1))
        .into_iter()
        .map(|h| SparseElement::basis(h, b.field.one()))
        .collect();
    let one = b.one();
    let mut r = VerificationReport::new();

    let mut assoc = Check::pass("associativity");
    'outer: for x in &small {
        for y in &small {
            let xy = b.mul(x, y);
            for z in &small {
                let lhs = b.mul(&xy, z);
                let rhs = b.mul(x, &b.mul(y, z));
                if lhs != rhs {
                    assoc = Check::fail_with(
                        "associativity",
                        &format!("({x}, {y}, {z})"),
                        lhs.to_string(),
                        rhs.to_string(),
                    );
                    break 'outer;
                }
            }
        }
    }
    r.push(assoc.with_detail("triples with |k| ≤ 1"));
    r.push(Check::identity(
        "unit",
        basis.iter().map(|x| {
            (x.to_string(), b.mul(&one, x).to_string(), b.mul(x, &one).to_string())
        }),
    ));
    r.push(Check::identity(
        "coassociativity",
        basis.iter().map(|x| {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((l, m), c) in b.comul(x) {
                for ((l1, l2), d) in b.comul(&SparseElement::basis(l, b.field.one())) {
                    let key = (l1, l2, m);
                    let v = &c * &d;
                    let s = left.remove(&key).map_or(v.clone(), |o: Scalar| &o + &v);
                    if !s.is_zero() {
                        left.insert(key, s);
                    }
                }
                for ((m1, m2), d) in b.comul(&SparseElement::basis(m, b.field.one())) {
                    let key = (l, m1, m2);
                    let v = &c * &d;
                    let s = right.remove(&key).map_or(v.clone(), |o: Scalar| &o + &v);
                    if !s.is_zero() {
                        right.insert(key, s);
                    }
                }
            }
            (x.to_string(), format!("{left:?}"), format!("{right:?}"))
        }),
    ));
    r.push(Check::identity(
        "counit",
        basis.iter().flat_map(|x| {
            let mut left = SparseElement::zero();
            let mut right = SparseElement::zero();
            for ((l, m), c) in b.comul(x) {
                let el = SparseElement::basis(l, b.field.one());
                let em = SparseElement::basis(m, b.field.one());
                left.add_term(m, &c * &b.counit(&el));
                right.add_term(l, &c * &b.counit(&em));
            }
            [
                (format!("(ε⊗id)Δ({x})"), left.to_string(), x.to_string()),
                (format!("(id⊗ε)Δ({x})"), right.to_string(), x.to_string()),
            ]
        }),
    ));
    let mut multiplicative = Check::pass("comultiplication-multiplicative");
    'outer2: for x in &basis {
        let dx = b.comul(x);
        for y in &basis {
            let lhs = b.comul(&b.mul(x, y));
            let dy = b.comul(y);
            let mut rhs = SparseTensor::new();
            for ((a1, a2), u) in &dx {
                for ((b1, b2), v) in &dy {
                    if let (Some((c1, p)), Some((c2, s))) = (b.mul_basis(a1, b1), b.mul_basis(a2, b2)) {
                        add_tensor(&mut rhs, (p, s), &(u * v) * &(&c1 * &c2));
                    }
                }
            }
            if lhs != rhs {
                multiplicative = Check::fail_with(
                    "comultiplication-multiplicative",
                    &format!("({x}, {y})"),
                    format_tensor(&lhs),
                    format_tensor(&rhs),
                );
                break 'outer2;
            }
        }
    }
    r.push(multiplicative);
    r.push(Check::identity(
        "counit-multiplicative",
        basis.iter().flat_map(|x| {
            basis.iter().map(move |y| {
                (
                    format!("({x}, {y})"),
                    b.counit(&b.mul(x, y)),
                    &b.counit(x) * &b.counit(y),
                )
            })
        }),
    ));
    r.push(Check::identity(
        "antipode",
        basis.iter().flat_map(|x| {
            let mut left = SparseElement::zero();
            let mut right = SparseElement::zero();
            for ((l, m), c) in b.comul(x) {
                let el = SparseElement::basis(l, b.field.one());
                let em = SparseElement::basis(m, b.field.one());
                left = left.add(&b.mul(&b.antipode(&el, 1), &em).scale(&c));
                right = right.add(&b.mul(&el, &b.antipode(&em, 1)).scale(&c));
            }
            let target = one.scale(&b.counit(x)).to_string();
            [
                (format!("S({x}₁){x}₂"), left.to_string(), target.clone()),
                (format!("{x}₁S({x}₂)"), right.to_string(), target),
            ]
        }),
    ));
    r.push(Check::identity(
        "antipode-inverse",
        basis.iter().map(|x| {
            (
                x.to_string(),
                b.antipode(&b.antipode(x, 1), -1).to_string(),
                x.to_string(),
            )
        }),
    ));
    r
}

/// The Taft subalgebra `h ↦ h⊗e`: products and counit agree with Tₙ, the
/// coproduct of `x` picks up the grading twist.
pub fn verify_taft_embedding(b: &Bicross) -> Result<VerificationReport, BicrossError> {
    let t = taft(b.n as u64)?;
    let n = b.n;
    let embed = |v: &[Scalar]| {
        let mut out = SparseElement::zero();
        for (idx, c) in v.iter().enumerate() {
            out.add_term(BicrossBasis::new(idx % n, idx / n, 0), c.clone());
        }
        out
    };
    let mut r = VerificationReport::new();
    r.push(Check::identity(
        "embedding-multiplicative",
        (0..n * n).flat_map(|p| (0..n * n).map(move |s| (p, s))).map(|(p, s)| {
            let lhs = embed(&t.mul_vec(&t.basis_vec(p), &t.basis_vec(s)));
            let rhs = b.mul(&embed(&t.basis_vec(p)), &embed(&t.basis_vec(s)));
            (
                format!("({}, {})", t.basis_names[p], t.basis_names[s]),
                lhs.to_string(),
                rhs.to_string(),
            )
        }),
    ));
    r.push(Check::identity(
        "embedding-counit",
        (0..n * n).map(|p| {
            (
                t.basis_names[p].clone(),
                t.counit[p].clone(),
                b.counit(&embed(&t.basis_vec(p))),
            )
        }),
    ));
    let x = t.basis_vec(taft_index(n, 0, 1));
    let mut embedded = SparseTensor::new();
    for (l, m, c) in t.comul_vec(&x).terms() {
        let el = embed(&t.basis_vec(l));
        let em = embed(&t.basis_vec(m));
        for (p, u) in el.terms() {
            for (s, v) in em.terms() {
                add_tensor(&mut embedded, (*p, *s), c * &(u * v));
            }
        }
    }
    let actual = b.comul(&embed(&x));
    r.push(Check::assert(
        "embedding-comultiplication-twisted",
        actual != embedded,
        "x⊗e",
        format_tensor(&actual),
        format!("differs from {}", format_tensor(&embedded)),
    ));
    Ok(r)
}

/// `S⁴(h) = g(α⇀h↼α⁻¹)g⁻¹` on every window element.
pub fn verify_s4_bicross(
    b: &Bicross,
    window: i64,
    alpha: &AlphaData,
    g: &SparseElement,
) -> VerificationReport {
    let g_inv = b.antipode(g, 1);
    let mut r = VerificationReport::new();
    r.push(Check::assert(
        "g-inverse",
        b.mul(g, &g_inv) == b.one(),
        "g·S(g)",
        b.mul(g, &g_inv),
        "1⊗e",
    ));
    r.push(Check::identity(
        "s4-formula",
        b.window(window).into_iter().map(|h| {
            let x = SparseElement::basis(h, b.field.one());
            let lhs = b.antipode(&x, 4);
            let y = b.character_on_element(&alpha.alpha, &x, Side::Left);
            let z = b.character_on_element(&alpha.alpha_inv, &y, Side::Right);
            let rhs = b.mul(&b.mul(g, &z), &g_inv);
            (h.to_string(), lhs.to_string(), rhs.to_string())
        }),
    ));
    r
}

/// Checks on α and Ω computed by [`distinguished_alpha_bicross`].
pub fn verify_alpha_bicross(b: &Bicross, window: i64, data: &AlphaData, bound: u64) -> VerificationReport {
    let mut r = VerificationReport::new();
    let q = &b.q;
    let alpha = &data.alpha;
    let primitive = crate::scalar::is_primitive_root_of_unity(&alpha.c, b.n as u64);
    r.push(Check::assert(
        "alpha-c-primitive-root",
        primitive,
        "c⊗e",
        &alpha.c,
        format!("a primitive {}-th root of unity", b.n),
    ));
    r.push(Check::assert("alpha-x-zero", alpha.x.is_zero(), "x⊗e", &alpha.x, "0"));
    r.push(Check::assert("alpha-a-one", alpha.a.is_one(), "1⊗a", &alpha.a, "1"));
    r.push(Check::assert(
        "alpha-inverse",
        b.convolve(alpha, &data.alpha_inv) == b.counit_character(),
        "α·α⁻¹",
        format!("{:?}", b.convolve(alpha, &data.alpha_inv)),
        "ε",
    ));
    let order = order_of_character_bicross(b, alpha, bound);
    r.push(Check::assert(
        "order-alpha",
        order.value == Some(b.n as u64),
        "α",
        order,
        b.n,
    ));
    // Ω(cⁱxʲ⊗aᵏ) = qⁱ·cⁱxʲ⊗aᵏ, and ε∘Ω agrees with α⁻¹ extended multiplicatively.
    r.push(Check::identity(
        "omega-diagonal",
        data.omega.iter().map(|(h, img)| {
            let expected = SparseElement::basis(*h, q.pow(h.i as i64).expect("q ≠ 0"));
            (h.to_string(), img.to_string(), expected.to_string())
        }),
    ));
    r.push(Check::identity(
        "epsilon-omega-multiplicative",
        data.omega.iter().map(|(h, img)| {
            (h.to_string(), b.counit(img), data.alpha_inv.eval_basis(h))
        }),
    ));
    // α⁻¹ = α∘S, so ε(Ω(S⁻¹h)) = α(h).
    r.push(Check::identity(
        "alpha-via-omega-s-inverse",
        data.omega
            .keys()
            .filter(|h| (h.k + h.j as i64).abs() <= window)
            .map(|h| {
                let s_inv = b.antipode(&SparseElement::basis(*h, b.field.one()), -1);
                let lhs = s_inv.terms().fold(b.field.zero(), |acc, (u, c)| {
                    acc + c * &b.counit(&data.omega[u])
                });
                (h.to_string(), lhs, alpha.eval_basis(h))
            }),
    ));
    r
}

/// Everything the bicrossproduct engine can check, grouped like the
/// finite-dimensional batteries.
pub fn bicross_battery(
    n: u64,
    window: i64,
    battery: crate::radford::Battery,
    order_bound: Option<u64>,
) -> Result<VerificationReport, BicrossError> {
    use crate::radford::Battery;
    let b = Bicross::new(n)?;
    let bound = order_bound.unwrap_or(100);
    let win = window.max(b.n as i64);
    let includes = |x: Battery| battery == Battery::All || battery == x;
    let mut r = VerificationReport::new();
    if includes(Battery::Axioms) {
        let mut a = verify_window_axioms(&b, window);
        a.extend(verify_taft_embedding(&b)?);
        r.extend(a.prefixed("axioms/"));
    }
    if battery == Battery::Axioms {
        return Ok(r);
    }
    let g = distinguished_g_bicross(&b, win)?;
    let alpha = distinguished_alpha_bicross(&b, window)?;
    if includes(Battery::Integrals) {
        let mut a = verify_right_integral(&b, window);
        a.push(Check::assert("g-value", g == b.expected_g(), "g", &g, b.expected_g()));
        a.extend(verify_alpha_bicross(&b, window, &alpha, bound));
        a.push(functional_closure(&b, window));
        r.extend(a.prefixed("integrals/"));
    }
    if includes(Battery::Radford) {
        let mut a = verify_s4_bicross(&b, window, &alpha, &g);
        let os = order_of_antipode_bicross(&b, window, bound);
        a.push(Check::assert("order-S", os.value == Some(2 * n), "S", os, 2 * n));
        let og = order_of_grouplike_bicross(&b, &g, bound);
        a.push(Check::assert("order-g", og.value.is_none(), "g", og, "exceeds-bound"));
        let oa = order_of_character_bicross(&b, &alpha.alpha, bound);
        a.push(Check::assert("order-alpha", oa.value == Some(n), "α", oa, n));
        r.extend(a.prefixed("radford/"));
    }
    if includes(Battery::Mainss) {
        r.push(Check::not_applicable(
            "mainss/finite-dimensional-only",
            "the mainss battery needs a finite-dimensional algebra",
        ));
    }
    for c in &mut r.checks {
        if c.detail.is_none() {
            c.detail = Some(format!("window |k| ≤ {window}"));
        }
    }
    Ok(r)
}

/// `Λ↼h` and `h⇀Λ` are finitely supported: evaluating on a window twice as
/// wide finds nothing outside the computed support.
fn functional_closure(b: &Bicross, window: i64) -> Check {
    let lam = b.right_integral();
    let wide = b.window(2 * window + b.n as i64);
    Check::identity(
        "functional-closure",
        b.window(window).into_iter().flat_map(|h| {
            let x = SparseElement::basis(h, b.field.one());
            [Side::Left, Side::Right].into_iter().map({
                let (wide, lam) = (&wide, &lam);
                move |side| {
                    let f = b.element_on_functional(&x, lam, side);
                    let mut brute = SparseElement::zero();
                    for y in wide {
                        let ey = SparseElement::basis(*y, b.field.one());
                        let prod = match side {
                            Side::Left => b.mul(&ey, &x),
                            Side::Right => b.mul(&x, &ey),
                        };
                        brute.add_term(*y, b.eval(lam, &prod));
                    }
                    (format!("{h} {side:?}"), f.to_string(), brute.to_string())
                }
            })
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_examples() {
        let b = Bicross::new(2).unwrap();
        for k in -3..=3 {
            let x = b.basis(0, 0, k);
            let d = b.comul(&x);
            assert_eq!(d.len(), 1);
            assert!(d.contains_key(&(BicrossBasis::new(0, 0, k), BicrossBasis::new(0, 0, k))));
        }
        // S(x⊗e) = -cx⊗a^{-1}
        let s = b.antipode(&b.basis(0, 1, 0), 1);
        assert_eq!(s, b.basis(1, 1, -1).scale(&b.field().from_int(-1)));
        assert_eq!(order_of_antipode_bicross(&b, 2, 20).value, Some(4));
    }

    #[test]
    fn integral_and_grouplikes() {
        for n in 2..=3u64 {
            let b = Bicross::new(n).unwrap();
            assert!(verify_right_integral(&b, 3).all_passed());
            let g = distinguished_g_bicross(&b, 4).unwrap();
            assert_eq!(g, b.expected_g());
            assert_eq!(order_of_grouplike_bicross(&b, &g, 100).value, None);
            let alpha = distinguished_alpha_bicross(&b, 2).unwrap();
            assert_eq!(alpha.alpha.c, b.q().inv().unwrap());
            assert_eq!(order_of_character_bicross(&b, &alpha.alpha, 100).value, Some(n));
            assert!(verify_s4_bicross(&b, 3, &alpha, &g).all_passed());
        }
    }

    #[test]
    fn full_battery_small() {
        let r = bicross_battery(2, 2, crate::radford::Battery::All, None).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
