#![allow(dead_code)]

//! Structure tables built without the engine's constructions: Taft algebras
//! from words in `c` and `x` rewritten one swap at a time, cyclic group
//! algebras from residues mod n. The integral spaces are recomputed here from
//! their defining equations.

use std::collections::BTreeMap;

use hopfkit::hopf::HopfAlgebra;
use hopfkit::linalg::Matrix;
use hopfkit::scalar::{FieldSpec, Scalar};

pub type Tensor = BTreeMap<(usize, usize), Scalar>;
type WordTensor = BTreeMap<((usize, usize), (usize, usize)), Scalar>;

fn bump<K: Ord>(m: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let v = match m.remove(&k) {
        Some(old) => &old + &c,
        None => c,
    };
    if !v.is_zero() {
        m.insert(k, v);
    }
}

pub struct Tables {
    pub field: FieldSpec,
    pub names: Vec<String>,
    /// `mult[i][j]` is eᵢeⱼ.
    pub mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    /// `antipode[i]` is S(eᵢ).
    pub antipode: Vec<Vec<(usize, Scalar)>>,
    pub one: usize,
}

impl Tables {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).expect("known name")
    }

    pub fn named(&self, name: &str) -> Vec<Scalar> {
        self.basis(self.index(name))
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&(x * y) * c);
                }
            }
        }
        out
    }

    pub fn comul(&self, a: &[Scalar]) -> Tensor {
        let mut t = Tensor::new();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (l, r, c) in &self.comult[i] {
                bump(&mut t, (*l, *r), x * c);
            }
        }
        t
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in &self.antipode[i] {
                out[*k] = &out[*k] + &(x * c);
            }
        }
        out
    }

    pub fn antipode_pow(&self, a: &[Scalar], k: usize) -> Vec<Scalar> {
        (0..k).fold(a.to_vec(), |v, _| self.antipode(&v))
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        pair(&self.counit, a)
    }

    /// `f⇀h = f(h₂)h₁`.
    pub fn hit_left(&self, f: &dyn Fn(usize) -> Scalar, h: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for ((l, r), c) in self.comul(h) {
            out[l] = &out[l] + &(&c * &f(r));
        }
        out
    }

    /// `h↼f = f(h₁)h₂`.
    pub fn hit_right(&self, h: &[Scalar], f: &dyn Fn(usize) -> Scalar) -> Vec<Scalar> {
        let mut out = self.zero();
        for ((l, r), c) in self.comul(h) {
            out[r] = &out[r] + &(&c * &f(l));
        }
        out
    }

    fn one_dimensional(&self, m: Matrix) -> Vec<Scalar> {
        let mut ns = m.nullspace();
        assert_eq!(ns.len(), 1, "integral space should be one-dimensional");
        let v = ns.pop().unwrap();
        let lead = v.iter().find(|c| !c.is_zero()).unwrap().inv().unwrap();
        v.iter().map(|c| c * &lead).collect()
    }

    /// Solve `eᵢt = ε(eᵢ)t` (left) or `teᵢ = ε(eᵢ)t` (right).
    pub fn integral(&self, left: bool) -> Vec<Scalar> {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n * n, n);
        for i in 0..n {
            for k in 0..n {
                let prod = if left { &self.mult[i][k] } else { &self.mult[k][i] };
                for (row, c) in prod {
                    let r = i * n + row;
                    m.set(r, k, &m.get(r, k) + c);
                }
                let r = i * n + k;
                m.set(r, k, &m.get(r, k) - &self.counit[i]);
            }
        }
        self.one_dimensional(m)
    }

    /// Solve `h₁λ(h₂) = λ(h)1` (left) or `Λ(h₁)h₂ = Λ(h)1` (right).
    pub fn integral_functional(&self, left: bool) -> Vec<Scalar> {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n * n, n);
        for i in 0..n {
            for (a, b, c) in &self.comult[i] {
                let (out, var) = if left { (*a, *b) } else { (*b, *a) };
                let r = i * n + out;
                m.set(r, var, &m.get(r, var) + c);
            }
            let r = i * n + self.one;
            m.set(r, i, &m.get(r, i) - &self.field.one());
        }
        self.one_dimensional(m)
    }

    /// Compare every table with the engine's, basis element by basis element.
    pub fn assert_matches(&self, h: &HopfAlgebra) {
        assert_eq!(h.basis_names, self.names);
        assert_eq!(h.unit, self.basis(self.one), "unit");
        assert_eq!(h.counit, self.counit, "counit");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    h.mul_vec(&self.basis(i), &self.basis(j)),
                    self.mul(&self.basis(i), &self.basis(j)),
                    "{} * {}",
                    self.names[i],
                    self.names[j]
                );
            }
            let engine: Tensor = h
                .comul_vec(&self.basis(i))
                .terms()
                .map(|(a, b, c)| ((a, b), c.clone()))
                .collect();
            assert_eq!(engine, self.comul(&self.basis(i)), "Δ({})", self.names[i]);
            assert_eq!(
                h.antipode.column(i),
                self.antipode(&self.basis(i)),
                "S({})",
                self.names[i]
            );
        }
    }
}

pub fn pair(f: &[Scalar], a: &[Scalar]) -> Scalar {
    f.iter()
        .zip(a)
        .fold(f[0].field().zero(), |acc, (x, y)| acc + x * y)
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Words over `c`, `x`: a basis word is `cⁱxʲ`.
struct Words {
    n: usize,
    q: Scalar,
}

type WordEl = BTreeMap<(usize, usize), Scalar>;

impl Words {
    fn word(i: usize, j: usize) -> Vec<u8> {
        let mut w = vec![b'c'; i];
        w.extend(std::iter::repeat_n(b'x', j));
        w
    }

    /// Move every `c` left past every `x`, one adjacent swap `xc → q·cx` at a time.
    fn reduce(&self, mut w: Vec<u8>, field: &FieldSpec) -> Option<(Scalar, (usize, usize))> {
        let mut coeff = field.one();
        while let Some(p) = w.windows(2).position(|s| s == b"xc") {
            w.swap(p, p + 1);
            coeff = &coeff * &self.q;
        }
        let i = w.iter().filter(|&&s| s == b'c').count() % self.n;
        let j = w.iter().filter(|&&s| s == b'x').count();
        (j < self.n).then_some((coeff, (i, j)))
    }

    fn mul(&self, a: &WordEl, b: &WordEl, field: &FieldSpec) -> WordEl {
        let mut out = WordEl::new();
        for (&(i, j), x) in a {
            for (&(k, l), y) in b {
                let mut w = Self::word(i, j);
                w.extend(Self::word(k, l));
                if let Some((c, key)) = self.reduce(w, field) {
                    bump(&mut out, key, &(x * y) * &c);
                }
            }
        }
        out
    }

    fn tensor_mul(
        &self,
        a: &WordTensor,
        b: &WordTensor,
        field: &FieldSpec,
    ) -> WordTensor {
        let mut out = BTreeMap::new();
        for ((l1, r1), x) in a {
            for ((l2, r2), y) in b {
                let one = |k| WordEl::from([(k, field.one())]);
                let left = self.mul(&one(*l1), &one(*l2), field);
                let right = self.mul(&one(*r1), &one(*r2), field);
                for (kl, u) in &left {
                    for (kr, v) in &right {
                        bump(&mut out, (*kl, *kr), &(x * y) * &(u * v));
                    }
                }
            }
        }
        out
    }
}

/// Tₙ with `xc = qcx`, `Δc = c⊗c`, `Δx = x⊗1 + c⊗x`, `S(c) = c⁻¹`,
/// `S(x) = −c⁻¹x`, everything extended from generators through words.
pub fn taft(n: usize, field: &FieldSpec, q: &Scalar, grouplike: &str) -> Tables {
    let w = Words { n, q: q.clone() };
    let one = field.one();
    let mut keys = Vec::new();
    for j in 0..n {
        for i in 0..n {
            keys.push((i, j));
        }
    }
    let names: Vec<String> = keys
        .iter()
        .map(|&(i, j)| super::taft_name(grouplike, i, j))
        .collect();
    let pos = |k: (usize, usize)| keys.iter().position(|&x| x == k).unwrap();
    let el = |m: &WordEl| -> Vec<(usize, Scalar)> {
        m.iter().map(|(k, c)| (pos(*k), c.clone())).collect()
    };
    let single = |k: (usize, usize), c: Scalar| WordEl::from([(k, c)]);

    let mult = keys
        .iter()
        .map(|&a| {
            keys.iter()
                .map(|&b| el(&w.mul(&single(a, one.clone()), &single(b, one.clone()), field)))
                .collect()
        })
        .collect();

    let delta_c = BTreeMap::from([(((1 % n, 0), (1 % n, 0)), one.clone())]);
    let delta_x = BTreeMap::from([
        (((0, 1), (0, 0)), one.clone()),
        (((1 % n, 0), (0, 1)), one.clone()),
    ]);
    let comult = keys
        .iter()
        .map(|&(i, j)| {
            let mut t = BTreeMap::from([(((0, 0), (0, 0)), one.clone())]);
            for _ in 0..i {
                t = w.tensor_mul(&t, &delta_c, field);
            }
            for _ in 0..j {
                t = w.tensor_mul(&t, &delta_x, field);
            }
            t.into_iter()
                .map(|((l, r), c)| (pos(l), pos(r), c))
                .collect()
        })
        .collect();

    let s_c = single((n - 1, 0), one.clone());
    let s_x = single((n - 1, 1), -&one);
    let antipode = keys
        .iter()
        .map(|&(i, j)| {
            // S(cⁱxʲ) = S(x)ʲS(c)ⁱ
            let mut v = single((0, 0), one.clone());
            for _ in 0..j {
                v = w.mul(&v, &s_x, field);
            }
            for _ in 0..i {
                v = w.mul(&v, &s_c, field);
            }
            el(&v)
        })
        .collect();

    let counit = keys
        .iter()
        .map(|&(_, j)| if j == 0 { one.clone() } else { field.zero() })
        .collect();
    Tables {
        field: field.clone(),
        names,
        mult,
        comult,
        counit,
        antipode,
        one: pos((0, 0)),
    }
}

/// k[Cₙ] with basis `1, a, …, a^(n−1)` and exponents added mod n.
pub fn cyclic(n: usize, field: &FieldSpec) -> Tables {
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        })
        .collect();
    let one = field.one();
    Tables {
        field: field.clone(),
        names,
        mult: (0..n)
            .map(|i| (0..n).map(|j| vec![((i + j) % n, one.clone())]).collect())
            .collect(),
        comult: (0..n).map(|i| vec![(i, i, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode: (0..n).map(|i| vec![((n - i) % n, one.clone())]).collect(),
        one: 0,
    }
}
