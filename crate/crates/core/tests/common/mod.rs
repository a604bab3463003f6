#![allow(dead_code)]

pub mod oracle;

use hopfkit::constructions::Preset;
use hopfkit::hopf::HopfAlgebra;
use hopfkit::scalar::{FieldSpec, Scalar};

/// The finite-dimensional presets every battery is run against.
pub fn base_presets() -> Vec<String> {
    let mut v = vec!["sweedler".to_string()];
    v.extend((2..=5).map(|n| format!("taft:{n}")));
    v.extend((2..=7).map(|n| format!("group:C{n}")));
    v.push("group:S3".into());
    v
}

/// Base presets, their duals, opposites and co-opposites, and kC₂ ⊗ kC₂.
pub fn finite_presets() -> Vec<String> {
    let base = base_presets();
    let mut all = base.clone();
    for wrap in ["dual", "op", "cop"] {
        all.extend(base.iter().map(|p| format!("{wrap}:{p}")));
    }
    all.push("tensor:group:C2:group:C2".into());
    all
}

pub fn build(name: &str) -> HopfAlgebra {
    name.parse::<Preset>()
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .build(None)
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn build_over(name: &str, field: &str) -> HopfAlgebra {
    let f: FieldSpec = field.parse().expect("field spec");
    name.parse::<Preset>().unwrap().build(Some(&f)).unwrap()
}

pub fn q(field: &FieldSpec) -> Scalar {
    field.generator().expect("field has a generator")
}

pub fn int(field: &FieldSpec, v: i64) -> Scalar {
    field.from_int(v)
}

/// Index of a named basis element.
pub fn idx(h: &HopfAlgebra, name: &str) -> usize {
    h.basis_names
        .iter()
        .position(|n| n == name)
        .unwrap_or_else(|| panic!("no basis element {name} in {:?}", h.basis_names))
}

/// Name of `cⁱxʲ` in the engine's Taft naming.
pub fn taft_name(grouplike: &str, i: usize, j: usize) -> String {
    let p = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    let s = format!("{}{}", p(grouplike, i), p("x", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}
