//! Preset Hopf algebras and the combinators dual, op, cop and tensor.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfError, HopfPresentation};
use crate::linalg::Matrix;
use crate::scalar::{gauss_binomial, FieldSpec, Scalar, ScalarError};

/// A term cⁱxʲ ⊗ cᵏxˡ of a Taft coproduct, as ((i, j), (k, l), coefficient).
type TaftTerm = ((usize, usize), (usize, usize), Scalar);

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error("not a group: {0}")]
    InvalidGroup(String),
    #[error("{q} is not a primitive {n}-th root of unity")]
    NotPrimitive { q: String, n: u64 },
    #[error("field {field} has no primitive {n}-th root of unity")]
    NoRootOfUnity { field: String, n: u64 },
    #[error("tensor factors live over different fields ({left} and {right})")]
    FieldMismatch { left: String, right: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("preset `{0}` is infinite-dimensional")]
    InfiniteDimensional(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validate a Cayley table: closure, associativity, identity, inverses.
    pub fn from_table(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let n = names.len();
        let bad = |m: &str| Err(ConstructionError::InvalidGroup(m.to_string()));
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is not n x n over 0..n");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no identity element");
        };
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == identity && mul[b][a] == identity) {
                Some(b) => inverse.push(b),
                None => return bad("an element has no inverse"),
            }
        }
        Ok(GroupTable {
            names,
            mul,
            inverse,
            identity,
        })
    }

    /// Cyclic group `⟨a⟩` of order n, elements `1, a, a^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let names = (0..n)
            .map(|k| if k == 0 { "1".into() } else { power_name("a", k) })
            .collect();
        let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(names, mul).expect("cyclic table is a group")
    }

    /// The symmetric group on three letters, in cycle notation.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let names = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .map(String::from)
            .to_vec();
        // (στ)(x) = σ(τ(x))
        let mul = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st = [s[t[0]], s[t[1]], s[t[2]]];
                        perms.iter().position(|p| *p == st).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self::from_table(names, mul).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// The group algebra kG: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &GroupTable, field: &FieldSpec) -> Result<HopfAlgebra, ConstructionError> {
    let n = g.order();
    let one = field.one();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = one.clone();
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, one.clone());
    }
    let pres = HopfPresentation {
        field: field.clone(),
        basis_names: g.names().to_vec(),
        mult: (0..n * n)
            .map(|ij| vec![(g.mul(ij / n, ij % n), one.clone())])
            .collect(),
        unit,
        comult: (0..n).map(|a| vec![(a, a, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode,
    };
    Ok(HopfAlgebra::new(pres)?)
}

/// Basis index of `cⁱxʲ` in the Taft algebra Tₙ.
pub fn taft_index(n: usize, i: usize, j: usize) -> usize {
    j * n + i
}

/// Name of `cⁱxʲ`, with `c` renamed to `grouplike`.
pub(crate) fn taft_name(grouplike: &str, i: usize, j: usize) -> String {
    let name = format!("{}{}", power_name(grouplike, i), power_name("x", j));
    if name.is_empty() {
        "1".into()
    } else {
        name
    }
}

/// Coefficient and target of `cⁱxʲ · c^i' x^j'` in Tₙ, or `None` when it vanishes.
pub(crate) fn taft_product(
    n: usize,
    (i, j): (usize, usize),
    (i2, j2): (usize, usize),
    q: &Scalar,
) -> Option<(Scalar, (usize, usize))> {
    if j + j2 >= n {
        return None;
    }
    let coeff = q.pow(((j * i2) % n) as i64).expect("q is nonzero");
    Some((coeff, ((i + i2) % n, j + j2)))
}

/// `Δ(cⁱxʲ) = Σₜ {j, t}_q c^(i+t) x^(j-t) ⊗ cⁱxᵗ` as `((i1, j1), (i2, j2), coeff)`.
pub(crate) fn taft_coproduct(
    n: usize,
    i: usize,
    j: usize,
    q: &Scalar,
) -> Vec<TaftTerm> {
    (0..=j)
        .filter_map(|t| {
            let c = gauss_binomial(j as i64, t as i64, q).expect("0 <= t <= j");
            (!c.is_zero()).then(|| (((i + t) % n, j - t), (i, t), c))
        })
        .collect()
}

/// The Taft algebra Tₙ over ℚ(ζₙ) with q = ζₙ.
pub fn taft(n: u64) -> Result<HopfAlgebra, ConstructionError> {
    let field = FieldSpec::cyclotomic(n)?;
    let q = field.generator().expect("cyclotomic fields have ζ");
    taft_with(n, &field, &q)
}

/// Sweedler's 4-dimensional algebra: T₂ over ℚ with basis `1, g, x, gx`.
pub fn sweedler() -> HopfAlgebra {
    sweedler_over(&FieldSpec::rationals()).expect("char 0")
}

/// Sweedler's algebra over any field of characteristic ≠ 2.
pub fn sweedler_over(field: &FieldSpec) -> Result<HopfAlgebra, ConstructionError> {
    taft_named(2, field, &field.from_int(-1), "g")
}

/// Tₙ over any field, with a designated primitive n-th root `q`.
pub fn taft_with(n: u64, field: &FieldSpec, q: &Scalar) -> Result<HopfAlgebra, ConstructionError> {
    taft_named(n, field, q, "c")
}

fn taft_named(
    n: u64,
    field: &FieldSpec,
    q: &Scalar,
    grouplike: &str,
) -> Result<HopfAlgebra, ConstructionError> {
    if n < 2 || q.field() != *field || !crate::scalar::is_primitive_root_of_unity(q, n) {
        return Err(ConstructionError::NotPrimitive {
            q: q.to_string(),
            n,
        });
    }
    let n = n as usize;
    let dim = n * n;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
    let idx = |(i, j): (usize, usize)| taft_index(n, i, j);

    let mut mult = Vec::with_capacity(dim * dim);
    for &a in &pairs {
        for &b in &pairs {
            mult.push(
                taft_product(n, a, b, q)
                    .map(|(c, t)| vec![(idx(t), c)])
                    .unwrap_or_default(),
            );
        }
    }
    let comult = pairs
        .iter()
        .map(|&(i, j)| {
            taft_coproduct(n, i, j, q)
                .into_iter()
                .map(|(a, b, c)| (idx(a), idx(b), c))
                .collect()
        })
        .collect();
    let counit = pairs
        .iter()
        .map(|&(_, j)| if j == 0 { field.one() } else { field.zero() })
        .collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();

    let mut pres = HopfPresentation {
        field: field.clone(),
        basis_names: pairs.iter().map(|&(i, j)| taft_name(grouplike, i, j)).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::zeros(field, dim, dim),
    };
    // S(cⁱxʲ) = S(x)ʲ S(c)ⁱ with S(c) = c^(n-1), S(x) = -c^(n-1)x.
    let s_c = pres.basis_vec(idx((n - 1, 0)));
    let s_x: Vec<Scalar> = pres
        .basis_vec(idx((n - 1, 1)))
        .iter()
        .map(|v| -v)
        .collect();
    let power = |v: &Vec<Scalar>, k: usize| {
        (0..k).fold(pres.unit.clone(), |acc, _| pres.mul_vec(&acc, v))
    };
    let columns: Vec<Vec<Scalar>> = pairs
        .iter()
        .map(|&(i, j)| pres.mul_vec(&power(&s_x, j), &power(&s_c, i)))
        .collect();
    pres.antipode = Matrix::from_columns(field, dim, &columns);
    Ok(HopfAlgebra::new(pres)?)
}

fn sorted_comult(mut v: Vec<(usize, usize, Scalar)>) -> Vec<(usize, usize, Scalar)> {
    v.sort_by_key(|&(j, k, _)| (j, k));
    v
}

/// The dual Hopf algebra H*, on the dual basis `p_b`.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra, ConstructionError> {
    let n = h.dim();
    let mut mult = vec![Vec::new(); n * n];
    for (k, terms) in h.comult.iter().enumerate() {
        for (i, j, c) in terms {
            mult[i * n + j].push((k, c.clone()));
        }
    }
    let mut comult = vec![Vec::new(); n];
    for (ij, terms) in h.mult.iter().enumerate() {
        for (k, c) in terms {
            comult[*k].push((ij / n, ij % n, c.clone()));
        }
    }
    let pres = HopfPresentation {
        field: h.field.clone(),
        basis_names: h.basis_names.iter().map(|b| format!("p_{b}")).collect(),
        mult,
        unit: h.counit.clone(),
        comult: comult.into_iter().map(sorted_comult).collect(),
        counit: h.unit.clone(),
        antipode: h.antipode.transpose(),
    };
    Ok(HopfAlgebra::new(pres)?)
}

/// H^op: reversed multiplication, antipode S⁻¹.
pub fn op(h: &HopfAlgebra) -> Result<HopfAlgebra, ConstructionError> {
    let n = h.dim();
    let mut pres = h.presentation().clone();
    pres.mult = (0..n * n)
        .map(|ij| h.product(ij % n, ij / n).to_vec())
        .collect();
    pres.antipode = h.antipode_inverse().clone();
    Ok(HopfAlgebra::new(pres)?)
}

/// H^cop: flipped comultiplication, antipode S⁻¹.
pub fn cop(h: &HopfAlgebra) -> Result<HopfAlgebra, ConstructionError> {
    let mut pres = h.presentation().clone();
    pres.comult = h
        .comult
        .iter()
        .map(|t| sorted_comult(t.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect()))
        .collect();
    pres.antipode = h.antipode_inverse().clone();
    Ok(HopfAlgebra::new(pres)?)
}

/// H ⊗ K with basis `eᵢ⊗fⱼ` at index `i·dim K + j`.
pub fn tensor(h: &HopfAlgebra, k: &HopfAlgebra) -> Result<HopfAlgebra, ConstructionError> {
    if h.field != k.field {
        return Err(ConstructionError::FieldMismatch {
            left: h.field.to_string(),
            right: k.field.to_string(),
        });
    }
    let field = &h.field;
    let (n, m) = (h.dim(), k.dim());
    let dim = n * m;
    let at = |i: usize, j: usize| i * m + j;
    let mut mult = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let mut out = Vec::new();
            for (p, u) in h.product(a / m, b / m) {
                for (r, v) in k.product(a % m, b % m) {
                    out.push((at(*p, *r), u * v));
                }
            }
            out.sort_by_key(|(i, _)| *i);
            mult.push(out);
        }
    }
    let comult = (0..dim)
        .map(|a| {
            let mut out = Vec::new();
            for (h1, h2, u) in &h.comult[a / m] {
                for (k1, k2, v) in &k.comult[a % m] {
                    out.push((at(*h1, *k1), at(*h2, *k2), u * v));
                }
            }
            sorted_comult(out)
        })
        .collect();
    let mut antipode = Matrix::zeros(field, dim, dim);
    for (r1, c1, u) in h.antipode.entries() {
        for (r2, c2, v) in k.antipode.entries() {
            antipode.set(at(r1, r2), at(c1, c2), u * v);
        }
    }
    let pres = HopfPresentation {
        field: field.clone(),
        basis_names: (0..dim)
            .map(|a| format!("{}⊗{}", h.basis_names[a / m], k.basis_names[a % m]))
            .collect(),
        mult,
        unit: (0..dim).map(|a| &h.unit[a / m] * &k.unit[a % m]).collect(),
        comult,
        counit: (0..dim).map(|a| &h.counit[a / m] * &k.counit[a % m]).collect(),
        antipode,
    };
    Ok(HopfAlgebra::new(pres)?)
}

/// Equality of all structure tables, ignoring basis names.
pub fn structural_eq(a: &HopfPresentation, b: &HopfPresentation) -> bool {
    let canon = |p: &HopfPresentation| {
        let mult: Vec<Vec<(usize, Scalar)>> = p
            .mult
            .iter()
            .map(|v| {
                let mut v: Vec<_> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect();
        let comult: Vec<Vec<(usize, usize, Scalar)>> = p
            .comult
            .iter()
            .map(|v| sorted_comult(v.iter().filter(|(_, _, c)| !c.is_zero()).cloned().collect()))
            .collect();
        (mult, comult)
    };
    a.field == b.field
        && a.dim() == b.dim()
        && a.unit == b.unit
        && a.counit == b.counit
        && a.antipode == b.antipode
        && canon(a) == canon(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupName {
    Cyclic(usize),
    S3,
}

/// A named algebra as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Sweedler,
    Taft(u64),
    Group(GroupName),
    Dual(Box<Preset>),
    Op(Box<Preset>),
    Cop(Box<Preset>),
    Tensor(Box<Preset>, Box<Preset>),
    Bicross(u64),
    Qsl2,
}

impl Preset {
    fn parse_tokens<'a, I: Iterator<Item = &'a str>>(
        tokens: &mut std::iter::Peekable<I>,
        whole: &str,
    ) -> Result<Preset, ConstructionError> {
        let unknown = || ConstructionError::UnknownPreset(whole.to_string());
        let number = |t: Option<&str>, min: u64| {
            t.and_then(|s| s.parse::<u64>().ok())
                .filter(|&v| v >= min)
                .ok_or_else(unknown)
        };
        Ok(match tokens.next().ok_or_else(unknown)? {
            "sweedler" => Preset::Sweedler,
            "qsl2" => Preset::Qsl2,
            "taft" => Preset::Taft(number(tokens.next(), 2)?),
            "bicross" => Preset::Bicross(number(tokens.next(), 2)?),
            "group" => match tokens.next().ok_or_else(unknown)? {
                "S3" => Preset::Group(GroupName::S3),
                g => Preset::Group(GroupName::Cyclic(
                    number(g.strip_prefix('C'), 1)? as usize,
                )),
            },
            "dual" => Preset::Dual(Box::new(Self::parse_tokens(tokens, whole)?)),
            "op" => Preset::Op(Box::new(Self::parse_tokens(tokens, whole)?)),
            "cop" => Preset::Cop(Box::new(Self::parse_tokens(tokens, whole)?)),
            "tensor" => {
                let a = Self::parse_tokens(tokens, whole)?;
                let b = Self::parse_tokens(tokens, whole)?;
                Preset::Tensor(Box::new(a), Box::new(b))
            }
            _ => return Err(unknown()),
        })
    }

    pub fn is_finite_dimensional(&self) -> bool {
        match self {
            Preset::Bicross(_) | Preset::Qsl2 => false,
            Preset::Dual(p) | Preset::Op(p) | Preset::Cop(p) => p.is_finite_dimensional(),
            Preset::Tensor(a, b) => a.is_finite_dimensional() && b.is_finite_dimensional(),
            _ => true,
        }
    }

    /// The field the preset lives over when none is requested.
    pub fn default_field(&self) -> FieldSpec {
        match self {
            Preset::Taft(n) | Preset::Bicross(n) => FieldSpec::cyclotomic(*n).expect("n >= 2"),
            Preset::Qsl2 => FieldSpec::rational_functions(),
            Preset::Dual(p) | Preset::Op(p) | Preset::Cop(p) => p.default_field(),
            Preset::Tensor(a, _) => a.default_field(),
            _ => FieldSpec::rationals(),
        }
    }

    /// Build a finite-dimensional preset, optionally over another field.
    pub fn build(&self, field: Option<&FieldSpec>) -> Result<HopfAlgebra, ConstructionError> {
        match self {
            Preset::Sweedler => match field {
                None => Ok(sweedler()),
                Some(f) => sweedler_over(f),
            },
            Preset::Taft(n) => match field {
                None => taft(*n),
                Some(f) => {
                    let q = f.primitive_root_of_unity(*n).ok_or_else(|| {
                        ConstructionError::NoRootOfUnity {
                            field: f.to_string(),
                            n: *n,
                        }
                    })?;
                    taft_with(*n, f, &q)
                }
            },
            Preset::Group(g) => {
                let table = match g {
                    GroupName::Cyclic(n) => GroupTable::cyclic(*n),
                    GroupName::S3 => GroupTable::s3(),
                };
                group_algebra(&table, field.unwrap_or(&FieldSpec::rationals()))
            }
            Preset::Dual(p) => dual(&p.build(field)?),
            Preset::Op(p) => op(&p.build(field)?),
            Preset::Cop(p) => cop(&p.build(field)?),
            Preset::Tensor(a, b) => {
                // Both factors must share a field; the left one decides.
                let f = field.cloned().unwrap_or_else(|| self.default_field());
                tensor(&a.build(Some(&f))?, &b.build(Some(&f))?)
            }
            Preset::Bicross(_) | Preset::Qsl2 => {
                Err(ConstructionError::InfiniteDimensional(self.to_string()))
            }
        }
    }
}

impl FromStr for Preset {
    type Err = ConstructionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split(':').peekable();
        let p = Self::parse_tokens(&mut tokens, s)?;
        if tokens.next().is_some() {
            return Err(ConstructionError::UnknownPreset(s.to_string()));
        }
        Ok(p)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Sweedler => write!(f, "sweedler"),
            Preset::Taft(n) => write!(f, "taft:{n}"),
            Preset::Group(GroupName::Cyclic(n)) => write!(f, "group:C{n}"),
            Preset::Group(GroupName::S3) => write!(f, "group:S3"),
            Preset::Dual(p) => write!(f, "dual:{p}"),
            Preset::Op(p) => write!(f, "op:{p}"),
            Preset::Cop(p) => write!(f, "cop:{p}"),
            Preset::Tensor(a, b) => write!(f, "tensor:{a}:{b}"),
            Preset::Bicross(n) => write!(f, "bicross:{n}"),
            Preset::Qsl2 => write!(f, "qsl2"),
        }
    }
}
