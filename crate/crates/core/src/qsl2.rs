//! The coordinate ring k[SL_q(2)] over ℚ(q), q transcendental.
//!
//! Elements live on the PBW basis aⁱbʲcᵏdˡ with i = 0 or l = 0. Products are
//! formed by right-multiplying a normal form by one generator at a time, which
//! keeps every intermediate result in normal form.

use std::collections::BTreeMap;
use std::fmt;

use crate::hopf::format_combination;
use crate::radford::{order_by, OrderResult};
use crate::report::{Check, VerificationReport};
use crate::scalar::{quantum_integer, FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Generator::A),
            'b' => Some(Generator::B),
            'c' => Some(Generator::C),
            'd' => Some(Generator::D),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "a",
            Generator::B => "b",
            Generator::C => "c",
            Generator::D => "d",
        })
    }
}

/// `aⁱbʲcᵏdˡ` with `i·l = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { i: 0, j: 0, k: 0, l: 0 };

    /// `None` unless `i = 0` or `l = 0`.
    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Option<Self> {
        (i == 0 || l == 0).then_some(PbwMonomial { i, j, k, l })
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k + self.l
    }

    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(Generator::A, self.i as usize));
        w.extend(std::iter::repeat_n(Generator::B, self.j as usize));
        w.extend(std::iter::repeat_n(Generator::C, self.k as usize));
        w.extend(std::iter::repeat_n(Generator::D, self.l as usize));
        w
    }

    /// Every basis monomial of total degree at most `d`, ordered by degree.
    pub fn up_to_degree(d: u32) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        for total in 0..=d {
            for i in 0..=total {
                for j in 0..=total - i {
                    for k in 0..=total - i - j {
                        let l = total - i - j - k;
                        if let Some(m) = PbwMonomial::new(i, j, k, l) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (g, e) in [("a", self.i), ("b", self.j), ("c", self.k), ("d", self.l)] {
            match e {
                0 => {}
                1 => f.write_str(g)?,
                e => write!(f, "{g}^{e}")?,
            }
        }
        Ok(())
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let v = match map.remove(&key) {
        Some(old) => &old + &c,
        None => c,
    };
    if !v.is_zero() {
        map.insert(key, v);
    }
}

/// A finite combination of PBW monomials over ℚ(q).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QslElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl QslElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: PbwMonomial, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        add_into(&mut self.terms, m, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, -v);
        }
        out
    }
}

impl fmt::Display for QslElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(self.terms.iter().map(|(m, c)| (c, m.to_string()))))
    }
}

pub type QslTensor = BTreeMap<(PbwMonomial, PbwMonomial), Scalar>;

fn format_tensor(t: &QslTensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((x, y), c)| {
            if c.is_one() {
                format!("{x}⊗{y}")
            } else {
                format!("{}*{x}⊗{y}", c.coefficient_string())
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A character of k[SL_q(2)] given by its values on a, b, c, d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QslCharacter {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

/// Structure maps of k[SL_q(2)].
#[derive(Clone, Debug)]
pub struct Qsl2 {
    field: FieldSpec,
    q: Scalar,
    q_inv: Scalar,
}

impl Default for Qsl2 {
    fn default() -> Self {
        Self::new()
    }
}

impl Qsl2 {
    pub fn new() -> Self {
        let field = FieldSpec::rational_functions();
        let q = field.generator().expect("ℚ(q) has a generator");
        let q_inv = q.inv().expect("q ≠ 0");
        Qsl2 { field, q, q_inv }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    fn qpow(&self, e: i64) -> Scalar {
        self.q.pow(e).expect("q ≠ 0")
    }

    pub fn one(&self) -> QslElement {
        QslElement::monomial(PbwMonomial::ONE, self.field.one())
    }

    pub fn generator(&self, g: Generator) -> QslElement {
        let m = match g {
            Generator::A => PbwMonomial { i: 1, j: 0, k: 0, l: 0 },
            Generator::B => PbwMonomial { i: 0, j: 1, k: 0, l: 0 },
            Generator::C => PbwMonomial { i: 0, j: 0, k: 1, l: 0 },
            Generator::D => PbwMonomial { i: 0, j: 0, k: 0, l: 1 },
        };
        QslElement::monomial(m, self.field.one())
    }

    pub fn basis(&self, m: PbwMonomial) -> QslElement {
        QslElement::monomial(m, self.field.one())
    }

    /// `m·g` in normal form.
    fn times_generator(&self, m: &PbwMonomial, g: Generator) -> Vec<(PbwMonomial, Scalar)> {
        let PbwMonomial { i, j, k, l } = *m;
        let one = self.field.one();
        match g {
            Generator::D if i == 0 => vec![(PbwMonomial { i, j, k, l: l + 1 }, one)],
            Generator::D => {
                // aⁱbʲcᵏd = q^{-(j+k)} a^{i-1}(ad)bʲcᵏ with ad = 1 + q⁻¹bc
                let s = self.qpow(-((j + k) as i64));
                vec![
                    (PbwMonomial { i: i - 1, j, k, l: 0 }, s.clone()),
                    (PbwMonomial { i: i - 1, j: j + 1, k: k + 1, l: 0 }, &s * &self.q_inv),
                ]
            }
            Generator::C => vec![(PbwMonomial { i, j, k: k + 1, l }, self.qpow(l as i64))],
            Generator::B => vec![(PbwMonomial { i, j: j + 1, k, l }, self.qpow(l as i64))],
            Generator::A if l == 0 => vec![(PbwMonomial { i: i + 1, j, k, l }, self.qpow((j + k) as i64))],
            Generator::A => {
                // bʲcᵏd^{l-1}(da) with da = 1 + q·bc
                vec![
                    (PbwMonomial { i: 0, j, k, l: l - 1 }, one),
                    (
                        PbwMonomial { i: 0, j: j + 1, k: k + 1, l: l - 1 },
                        self.qpow(2 * l as i64 - 1),
                    ),
                ]
            }
        }
    }

    pub fn mul_generator(&self, u: &QslElement, g: Generator) -> QslElement {
        let mut out = QslElement::zero();
        for (m, c) in u.terms() {
            for (m2, s) in self.times_generator(m, g) {
                out.add_term(m2, c * &s);
            }
        }
        out
    }

    pub fn mul_word(&self, u: &QslElement, word: &[Generator]) -> QslElement {
        word.iter().fold(u.clone(), |acc, g| self.mul_generator(&acc, *g))
    }

    /// Normal form of a word in the generators.
    pub fn normal_form(&self, word: &[Generator]) -> QslElement {
        self.mul_word(&self.one(), word)
    }

    /// Parse a word such as `"dab"`; any other character is rejected.
    pub fn parse_word(word: &str) -> Option<Vec<Generator>> {
        word.chars().map(Generator::from_char).collect()
    }

    pub fn mul(&self, u: &QslElement, v: &QslElement) -> QslElement {
        let mut out = QslElement::zero();
        for (m, c) in v.terms() {
            out = out.add(&self.mul_word(u, &m.word()).scale(c));
        }
        out
    }

    fn tensor_times_generator(&self, t: &QslTensor, g: Generator) -> QslTensor {
        // Δ(a) = a⊗a + b⊗c, Δ(b) = a⊗b + b⊗d, Δ(c) = c⊗a + d⊗c, Δ(d) = c⊗b + d⊗d
        use Generator::*;
        let pieces: [(Generator, Generator); 2] = match g {
            A => [(A, A), (B, C)],
            B => [(A, B), (B, D)],
            C => [(C, A), (D, C)],
            D => [(C, B), (D, D)],
        };
        let mut out = QslTensor::new();
        for ((x, y), c) in t {
            for (g1, g2) in pieces {
                for (x2, s1) in self.times_generator(x, g1) {
                    for (y2, s2) in self.times_generator(y, g2) {
                        add_into(&mut out, (x2, y2), &(c * &s1) * &s2);
                    }
                }
            }
        }
        out
    }

    pub fn comul_monomial(&self, m: &PbwMonomial) -> QslTensor {
        let mut t = QslTensor::new();
        t.insert((PbwMonomial::ONE, PbwMonomial::ONE), self.field.one());
        m.word().into_iter().fold(t, |acc, g| self.tensor_times_generator(&acc, g))
    }

    pub fn comul(&self, u: &QslElement) -> QslTensor {
        let mut out = QslTensor::new();
        for (m, c) in u.terms() {
            for (key, s) in self.comul_monomial(m) {
                add_into(&mut out, key, c * &s);
            }
        }
        out
    }

    pub fn counit(&self, u: &QslElement) -> Scalar {
        // ε(a) = ε(d) = 1, ε(b) = ε(c) = 0
        u.terms()
            .filter(|(m, _)| m.j == 0 && m.k == 0)
            .fold(self.field.zero(), |acc, (_, c)| acc + c.clone())
    }

    fn antipode_monomial(&self, m: &PbwMonomial, inverse: bool) -> QslElement {
        // S reverses words: S(aⁱbʲcᵏdˡ) = S(d)ˡS(c)ᵏS(b)ʲS(a)ⁱ.
        let (sb, sc) = if inverse {
            (-&self.q_inv, -&self.q)
        } else {
            (-&self.q, -&self.q_inv)
        };
        let coeff = &sb.pow(m.j as i64).expect("nonzero") * &sc.pow(m.k as i64).expect("nonzero");
        let mut word = Vec::with_capacity(m.degree() as usize);
        word.extend(std::iter::repeat_n(Generator::A, m.l as usize));
        word.extend(std::iter::repeat_n(Generator::C, m.k as usize));
        word.extend(std::iter::repeat_n(Generator::B, m.j as usize));
        word.extend(std::iter::repeat_n(Generator::D, m.i as usize));
        self.normal_form(&word).scale(&coeff)
    }

    /// `S^power(u)`; negative powers use S⁻¹.
    pub fn antipode(&self, u: &QslElement, power: i64) -> QslElement {
        let mut cur = u.clone();
        for _ in 0..power.unsigned_abs() {
            let mut next = QslElement::zero();
            for (m, c) in cur.terms() {
                next = next.add(&self.antipode_monomial(m, power < 0).scale(c));
            }
            cur = next;
        }
        cur
    }

    /// λ(bᵐcᵐ) = (−1)ᵐ/[m+1]; zero on every other basis monomial.
    pub fn lambda_monomial(&self, m: &PbwMonomial) -> Scalar {
        if m.i != 0 || m.l != 0 || m.j != m.k {
            return self.field.zero();
        }
        let sign = if m.j.is_multiple_of(2) { 1 } else { -1 };
        let qi = quantum_integer(m.j as i64 + 1, &self.field).expect("q is not a root of unity");
        self.field.from_int(sign).checked_div(&qi).expect("[m+1] ≠ 0")
    }

    pub fn lambda(&self, u: &QslElement) -> Scalar {
        u.terms()
            .fold(self.field.zero(), |acc, (m, c)| acc + c * &self.lambda_monomial(m))
    }

    pub fn character_monomial(&self, chi: &QslCharacter, m: &PbwMonomial) -> Scalar {
        let p = |x: &Scalar, e: u32| {
            if e == 0 {
                self.field.one()
            } else {
                x.pow(e as i64).expect("nonnegative")
            }
        };
        &(&p(&chi.a, m.i) * &p(&chi.b, m.j)) * &(&p(&chi.c, m.k) * &p(&chi.d, m.l))
    }

    /// `φ⇀u = φ(u₂)u₁` (left) or `u↼φ = φ(u₁)u₂` (right), φ given on monomials.
    pub fn hit(&self, phi: impl Fn(&PbwMonomial) -> Scalar, u: &QslElement, left: bool) -> QslElement {
        let mut out = QslElement::zero();
        for ((x, y), c) in self.comul(u) {
            let (keep, eval) = if left { (x, y) } else { (y, x) };
            let v = phi(&eval);
            if !v.is_zero() {
                out.add_term(keep, &c * &v);
            }
        }
        out
    }

    /// The distinguished grouplike α ∈ H° on generators.
    pub fn alpha(&self) -> QslCharacter {
        QslCharacter {
            a: self.qpow(-2),
            b: self.field.zero(),
            c: self.field.zero(),
            d: self.qpow(2),
        }
    }

    /// α⁻¹ = α∘S.
    pub fn alpha_inverse(&self) -> QslCharacter {
        QslCharacter {
            a: self.qpow(2),
            b: self.field.zero(),
            c: self.field.zero(),
            d: self.qpow(-2),
        }
    }

    /// χ on a generator.
    pub fn chi_generator(&self, g: Generator) -> QslElement {
        let s = match g {
            Generator::A => self.qpow(-2),
            Generator::D => self.qpow(2),
            _ => self.field.one(),
        };
        self.generator(g).scale(&s)
    }

    /// χ extended as an algebra map.
    pub fn chi(&self, u: &QslElement) -> QslElement {
        let mut out = QslElement::zero();
        for (m, c) in u.terms() {
            let img = m
                .word()
                .into_iter()
                .fold(self.one(), |acc, g| self.mul(&acc, &self.chi_generator(g)));
            out = out.add(&img.scale(c));
        }
        out
    }

    /// `α(u₂)S⁻²(u₁)`.
    pub fn chi_closed_form(&self, u: &QslElement) -> QslElement {
        let alpha = self.alpha();
        let y = self.hit(|m| self.character_monomial(&alpha, m), u, true);
        self.antipode(&y, -2)
    }
}

/// The relations all vanish, words normalize independently of bracketing, and
/// normal monomials are fixed by normal_form.
pub fn verify_relations(h: &Qsl2, degree: u32) -> VerificationReport {
    use Generator::*;
    let nf = |w: &str| h.normal_form(&Qsl2::parse_word(w).expect("valid word"));
    let q = h.q();
    let q_inv = q.inv().expect("q ≠ 0");
    let one = h.one();
    let mut r = VerificationReport::new();
    let relations: Vec<(&str, QslElement, QslElement)> = vec![
        ("ba", nf("ba"), nf("ab").scale(q)),
        ("ca", nf("ca"), nf("ac").scale(q)),
        ("db", nf("db"), nf("bd").scale(q)),
        ("dc", nf("dc"), nf("cd").scale(q)),
        ("bc", nf("bc"), nf("cb")),
        ("da", nf("da"), one.add(&nf("bc").scale(q))),
        ("ad", nf("ad"), one.add(&nf("bc").scale(&q_inv))),
    ];
    r.push(Check::identity(
        "relations",
        relations.into_iter().map(|(w, l, rr)| (w.to_string(), l.to_string(), rr.to_string())),
    ));
    r.push(Check::identity(
        "normal-form-idempotent",
        PbwMonomial::up_to_degree(degree).into_iter().map(|m| {
            (m.to_string(), h.normal_form(&m.word()).to_string(), h.basis(m).to_string())
        }),
    ));
    // every word of length ≤ 4, split at every position
    let mut words: Vec<Vec<Generator>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..4 {
        words = words
            .iter()
            .flat_map(|w| {
                [A, B, C, D].into_iter().map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
        all.extend(words.iter().cloned());
    }
    r.push(Check::identity(
        "bracketing-independent",
        all.iter().flat_map(|w| {
            (1..w.len()).map(move |s| {
                let whole = h.normal_form(w);
                let split = h.mul(&h.normal_form(&w[..s]), &h.normal_form(&w[s..]));
                let label: String = w.iter().map(|g| g.to_string()).collect();
                (format!("{label} at {s}"), whole.to_string(), split.to_string())
            })
        }),
    ));
    r
}

fn triples(ms: &[PbwMonomial]) -> impl Iterator<Item = (PbwMonomial, PbwMonomial, PbwMonomial)> + '_ {
    ms.iter()
        .flat_map(move |x| ms.iter().flat_map(move |y| ms.iter().map(move |z| (*x, *y, *z))))
}

/// Hopf axioms on monomials of degree ≤ `degree` (pairs and triples at lower degree).
pub fn verify_axioms_qsl(h: &Qsl2, degree: u32) -> VerificationReport {
    let mons = PbwMonomial::up_to_degree(degree);
    let small = PbwMonomial::up_to_degree(degree.min(2));
    let el = |m: &PbwMonomial| h.basis(*m);
    let one = h.one();
    let mut r = VerificationReport::new();

    r.push(Check::identity(
        "associativity",
        triples(&small).map(|(x, y, z)| {
            let (x, y, z) = (el(&x), el(&y), el(&z));
            (
                format!("({x}, {y}, {z})"),
                h.mul(&h.mul(&x, &y), &z).to_string(),
                h.mul(&x, &h.mul(&y, &z)).to_string(),
            )
        }),
    ));
    r.push(Check::identity(
        "coassociativity",
        mons.iter().map(|m| {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((x, y), c) in h.comul_monomial(m) {
                for ((x1, x2), s) in h.comul_monomial(&x) {
                    add_into(&mut left, (x1, x2, y), &c * &s);
                }
                for ((y1, y2), s) in h.comul_monomial(&y) {
                    add_into(&mut right, (x, y1, y2), &c * &s);
                }
            }
            (m.to_string(), format!("{left:?}"), format!("{right:?}"))
        }),
    ));
    r.push(Check::identity(
        "counit",
        mons.iter().flat_map(|m| {
            let mut left = QslElement::zero();
            let mut right = QslElement::zero();
            for ((x, y), c) in h.comul_monomial(m) {
                left.add_term(y, &c * &h.counit(&el(&x)));
                right.add_term(x, &c * &h.counit(&el(&y)));
            }
            [
                (format!("(ε⊗id)Δ({m})"), left.to_string(), el(m).to_string()),
                (format!("(id⊗ε)Δ({m})"), right.to_string(), el(m).to_string()),
            ]
        }),
    ));
    let pair_mons = PbwMonomial::up_to_degree(degree.min(3));
    let mut mult = Check::pass("comultiplication-multiplicative");
    'outer: for x in &pair_mons {
        let dx = h.comul_monomial(x);
        for y in &pair_mons {
            if x.degree() + y.degree() > degree.max(3) {
                continue;
            }
            let lhs = h.comul(&h.mul(&el(x), &el(y)));
            let dy = h.comul_monomial(y);
            let mut rhs = QslTensor::new();
            for ((x1, x2), u) in &dx {
                for ((y1, y2), v) in &dy {
                    let p = h.mul(&el(x1), &el(y1));
                    let s = h.mul(&el(x2), &el(y2));
                    for (pm, pc) in p.terms() {
                        for (sm, sc) in s.terms() {
                            add_into(&mut rhs, (*pm, *sm), &(u * v) * &(pc * sc));
                        }
                    }
                }
            }
            if lhs != rhs {
                mult = Check::fail_with(
                    "comultiplication-multiplicative",
                    &format!("({x}, {y})"),
                    format_tensor(&lhs),
                    format_tensor(&rhs),
                );
                break 'outer;
            }
        }
    }
    r.push(mult);
    r.push(Check::identity(
        "counit-multiplicative",
        pair_mons.iter().flat_map(|x| {
            pair_mons.iter().map(move |y| {
                (
                    format!("({x}, {y})"),
                    h.counit(&h.mul(&el(x), &el(y))),
                    &h.counit(&el(x)) * &h.counit(&el(y)),
                )
            })
        }),
    ));
    r.push(Check::identity(
        "antipode",
        mons.iter().flat_map(|m| {
            let mut left = QslElement::zero();
            let mut right = QslElement::zero();
            for ((x, y), c) in h.comul_monomial(m) {
                left = left.add(&h.mul(&h.antipode(&el(&x), 1), &el(&y)).scale(&c));
                right = right.add(&h.mul(&el(&x), &h.antipode(&el(&y), 1)).scale(&c));
            }
            let target = one.scale(&h.counit(&el(m))).to_string();
            [
                (format!("S({m}₁){m}₂"), left.to_string(), target.clone()),
                (format!("{m}₁S({m}₂)"), right.to_string(), target),
            ]
        }),
    ));
    r.push(Check::identity(
        "antipode-anti-multiplicative",
        small.iter().flat_map(|x| {
            small.iter().map(move |y| {
                let lhs = h.antipode(&h.mul(&el(x), &el(y)), 1);
                let rhs = h.mul(&h.antipode(&el(y), 1), &h.antipode(&el(x), 1));
                (format!("({x}, {y})"), lhs.to_string(), rhs.to_string())
            })
        }),
    ));
    r.push(Check::identity(
        "antipode-inverse",
        mons.iter().flat_map(|m| {
            [
                (
                    format!("S(S⁻¹({m}))"),
                    h.antipode(&h.antipode(&el(m), -1), 1).to_string(),
                    el(m).to_string(),
                ),
                (
                    format!("S⁻¹(S({m}))"),
                    h.antipode(&h.antipode(&el(m), 1), -1).to_string(),
                    el(m).to_string(),
                ),
            ]
        }),
    ));
    r
}

/// `h₁λ(h₂) = λ(h)1` on every monomial of degree ≤ `degree`; also the right-hand
/// version, which is `g = 1`.
pub fn verify_left_integral(h: &Qsl2, degree: u32) -> VerificationReport {
    let one = h.one();
    let mut r = VerificationReport::new();
    let lam = |m: &PbwMonomial| h.lambda_monomial(m);
    for (name, left) in [("left-integral", true), ("right-integral-g-is-one", false)] {
        r.push(Check::identity(
            name,
            PbwMonomial::up_to_degree(degree).into_iter().map(|m| {
                let x = h.basis(m);
                let lhs = h.hit(lam, &x, left);
                let rhs = one.scale(&h.lambda(&x));
                (m.to_string(), lhs.to_string(), rhs.to_string())
            }),
        ));
    }
    r.push(Check::identity(
        "lambda-values",
        [
            ("1", h.lambda(&h.one()), h.field().one()),
            (
                "bc",
                h.lambda(&h.normal_form(&[Generator::B, Generator::C])),
                -(h.q() + &h.q().inv().expect("q ≠ 0")).inv().expect("nonzero"),
            ),
            (
                "da",
                h.lambda(&h.normal_form(&[Generator::D, Generator::A])),
                (&h.q().pow(2).expect("q") + &h.field().one()).inv().expect("nonzero"),
            ),
        ]
        .into_iter()
        .map(|(w, l, rr)| (w.to_string(), l, rr)),
    ));
    r
}

/// `u⇀λ = λ↼χ(u)` for each generator, tested on monomials of degree ≤ `degree`;
/// `χ(u) = α(u₂)S⁻²(u₁)`; `α = ε∘χ`.
pub fn verify_chi_alpha(h: &Qsl2, degree: u32) -> VerificationReport {
    let mons = PbwMonomial::up_to_degree(degree);
    let mut r = VerificationReport::new();
    for g in Generator::ALL {
        let u = h.generator(g);
        let chi_u = h.chi_generator(g);
        // ⟨u⇀λ, y⟩ = λ(yu), ⟨λ↼v, y⟩ = λ(vy)
        r.push(Check::identity(
            format!("chi-{g}-nakayama"),
            mons.iter().map(|m| {
                let y = h.basis(*m);
                (
                    m.to_string(),
                    h.lambda(&h.mul(&y, &u)),
                    h.lambda(&h.mul(&chi_u, &y)),
                )
            }),
        ));
    }
    r.push(Check::identity(
        "chi-closed-form",
        Generator::ALL.into_iter().map(|g| {
            let u = h.generator(g);
            (g.to_string(), h.chi_generator(g).to_string(), h.chi_closed_form(&u).to_string())
        }),
    ));
    let alpha = h.alpha();
    r.push(Check::identity(
        "alpha-is-epsilon-chi",
        Generator::ALL.into_iter().map(|g| {
            let m = h.generator(g).terms().next().map(|(m, _)| *m).expect("generator");
            (g.to_string(), h.counit(&h.chi_generator(g)), h.character_monomial(&alpha, &m))
        }),
    ));
    r.push(Check::identity(
        "alpha-multiplicative",
        ["ad", "da"].into_iter().map(|w| {
            let x = h.normal_form(&Qsl2::parse_word(w).expect("word"));
            let v = x
                .terms()
                .fold(h.field().zero(), |acc, (m, c)| acc + c * &h.character_monomial(&alpha, m));
            (w.to_string(), v, h.field().one())
        }),
    ));
    // χ extended multiplicatively still satisfies the defining relation.
    let low = PbwMonomial::up_to_degree(2);
    r.push(Check::identity(
        "chi-multiplicative-extension",
        low.iter().flat_map(|u| {
            let u = h.basis(*u);
            let chi_u = h.chi(&u);
            PbwMonomial::up_to_degree(degree.saturating_sub(2))
                .into_iter()
                .map(move |m| {
                    let y = h.basis(m);
                    (
                        format!("({u}, {m})"),
                        h.lambda(&h.mul(&y, &u)),
                        h.lambda(&h.mul(&chi_u, &y)),
                    )
                })
                .collect::<Vec<_>>()
        }),
    ));
    r.push(Check::identity(
        "lambda-da-example",
        [(
            "⟨a⇀λ, d⟩ vs α(a)λ(ad)".to_string(),
            h.lambda(&h.normal_form(&[Generator::D, Generator::A])),
            &alpha.a * &h.lambda(&h.normal_form(&[Generator::A, Generator::D])),
        )],
    ));
    r
}

/// `S⁴(h) = α⇀h↼α⁻¹` (g = 1) on monomials of degree ≤ `degree`.
pub fn verify_s4_qsl(h: &Qsl2, degree: u32) -> VerificationReport {
    let alpha = h.alpha();
    let alpha_inv = h.alpha_inverse();
    let mut r = VerificationReport::new();
    r.push(Check::identity(
        "alpha-inverse-is-alpha-s",
        Generator::ALL.into_iter().map(|g| {
            let s = h.antipode(&h.generator(g), 1);
            let v = s
                .terms()
                .fold(h.field().zero(), |acc, (m, c)| acc + c * &h.character_monomial(&alpha, m));
            let m = h.generator(g).terms().next().map(|(m, _)| *m).expect("generator");
            (g.to_string(), v, h.character_monomial(&alpha_inv, &m))
        }),
    ));
    let s4 = |m: &PbwMonomial| {
        let x = h.basis(*m);
        let lhs = h.antipode(&x, 4);
        let y = h.hit(|p| h.character_monomial(&alpha, p), &x, true);
        let rhs = h.hit(|p| h.character_monomial(&alpha_inv, p), &y, false);
        (m.to_string(), lhs.to_string(), rhs.to_string())
    };
    r.push(Check::identity(
        "s4-formula-generators",
        Generator::ALL.into_iter().map(|g| {
            let m = h.generator(g).terms().next().map(|(m, _)| *m).expect("generator");
            s4(&m)
        }),
    ));
    r.push(Check::identity(
        "s4-formula",
        PbwMonomial::up_to_degree(degree).iter().map(s4),
    ));
    r
}

/// Least m ≤ bound with S^m(b) = b; S has infinite order, so this exceeds any bound.
pub fn order_of_antipode_on_b(h: &Qsl2, bound: u64) -> OrderResult {
    let b = h.generator(Generator::B);
    order_by(&h.antipode(&b, 1), &b, bound, |x| h.antipode(x, 1))
}

pub fn order_of_alpha(h: &Qsl2, bound: u64) -> OrderResult {
    let alpha = h.alpha();
    let unit = QslCharacter {
        a: h.field().one(),
        b: h.field().zero(),
        c: h.field().zero(),
        d: h.field().one(),
    };
    // on a diagonal character, convolution multiplies the values at a and d
    let step = |x: &QslCharacter| QslCharacter {
        a: &x.a * &alpha.a,
        b: h.field().zero(),
        c: h.field().zero(),
        d: &x.d * &alpha.d,
    };
    order_by(&alpha, &unit, bound, step)
}

pub fn verify_orders_qsl(h: &Qsl2, bound: u64) -> VerificationReport {
    let mut r = VerificationReport::new();
    let b = h.generator(Generator::B);
    r.push(Check::identity(
        "s-even-powers-on-b",
        (1..=bound as i64).map(|m| {
            (
                format!("S^{}(b)", 2 * m),
                h.antipode(&b, 2 * m).to_string(),
                b.scale(&h.q().pow(2 * m).expect("q")).to_string(),
            )
        }),
    ));
    let os = order_of_antipode_on_b(h, bound);
    r.push(Check::assert("order-S", os.value.is_none(), "S", os, "exceeds-bound"));
    let oa = order_of_alpha(h, bound);
    r.push(Check::assert("order-alpha", oa.value.is_none(), "α", oa, "exceeds-bound"));
    r
}

/// The qsl2 counterpart of the finite-dimensional batteries.
pub fn qsl2_battery(
    degree: u32,
    battery: crate::radford::Battery,
    order_bound: Option<u64>,
) -> VerificationReport {
    use crate::radford::Battery;
    let h = Qsl2::new();
    let bound = order_bound.unwrap_or(100);
    let includes = |x: Battery| battery == Battery::All || battery == x;
    let mut r = VerificationReport::new();
    if includes(Battery::Axioms) {
        let mut a = verify_relations(&h, degree);
        a.extend(verify_axioms_qsl(&h, degree.min(3)));
        r.extend(a.prefixed("axioms/"));
    }
    if includes(Battery::Integrals) {
        let mut a = verify_left_integral(&h, degree);
        a.extend(verify_chi_alpha(&h, degree));
        r.extend(a.prefixed("integrals/"));
    }
    if includes(Battery::Radford) {
        let mut a = verify_s4_qsl(&h, degree);
        a.extend(verify_orders_qsl(&h, bound));
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
            c.detail = Some(format!(
                "monomials of degree ≤ {degree}; a finite window, not a global proof"
            ));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_examples() {
        let h = Qsl2::new();
        let q = h.q().clone();
        let w = |s: &str| h.normal_form(&Qsl2::parse_word(s).unwrap());
        assert_eq!(w("da"), h.one().add(&w("bc").scale(&q)));
        assert_eq!(w("ba"), w("ab").scale(&q));
        assert_eq!(w("ad").to_string(), "1 + ((1)/(q))*bc");
        let db = h.comul(&h.generator(Generator::B));
        assert_eq!(db.len(), 2);
        assert_eq!(h.antipode(&h.generator(Generator::B), 2), w("b").scale(&q.pow(2).unwrap()));
        assert!(h.counit(&w("da")).is_one());
        assert_eq!(h.lambda(&w("da")).to_string(), "(1)/(q^2+1)");
    }

    #[test]
    fn low_degree_batteries() {
        let h = Qsl2::new();
        let r = verify_axioms_qsl(&h, 2);
        assert!(r.all_passed(), "{r}");
        assert!(verify_left_integral(&h, 3).all_passed());
        let r = verify_chi_alpha(&h, 3);
        assert!(r.all_passed(), "{r}");
        assert!(verify_s4_qsl(&h, 3).all_passed());
        assert_eq!(order_of_antipode_on_b(&h, 50).value, None);
    }

    #[test]
    fn full_battery_degree_six() {
        let r = qsl2_battery(6, crate::radford::Battery::All, None);
        assert!(r.all_passed(), "{r}");
    }
}
