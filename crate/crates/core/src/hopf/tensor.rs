use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// An element of H ⊗ H in basis coordinates: `(i, j) ↦ c` means `c·eᵢ⊗eⱼ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl Tensor2 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(i, j)) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&(i, j));
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert((i, j), c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `a⊗b ↦ b⊗a`.
    pub fn flip(&self) -> Tensor2 {
        Tensor2 {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let pair = format!("{}⊗{}", names[i], names[j]);
                if c.is_one() {
                    pair
                } else {
                    format!("{}*{pair}", c.coefficient_string())
                }
            })
            .collect();
        parts.join(" + ")
    }
}
