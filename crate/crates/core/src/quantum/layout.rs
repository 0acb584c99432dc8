use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub label: String,
    pub dim: usize,
}

/// Ordered tensor-product structure `f_0 ⊗ f_1 ⊗ ...` with unique labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertLayout {
    factors: Vec<Factor>,
}

impl HilbertLayout {
    pub fn new<I, S>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let factors: Vec<Factor> =
            factors.into_iter().map(|(label, dim)| Factor { label: label.into(), dim }).collect();
        if factors.is_empty() {
            return Err(Error::InvalidLayout("no factors".into()));
        }
        for (i, f) in factors.iter().enumerate() {
            if f.dim == 0 {
                return Err(Error::InvalidLayout(format!("factor `{}` has dimension 0", f.label)));
            }
            if factors[..i].iter().any(|g| g.label == f.label) {
                return Err(Error::InvalidLayout(format!("duplicate label `{}`", f.label)));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim).collect()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.factors.iter().map(|f| f.label.as_str())
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.label == label)
    }

    /// Positions of `labels`, sorted into layout order. Rejects unknown and repeated labels.
    pub fn positions<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let pos = self.position(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            if out.contains(&pos) {
                return Err(Error::InvalidLayout(format!("label `{label}` listed twice")));
            }
            out.push(pos);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Layout made of the factors at `positions`, in original order.
    pub fn subset(&self, positions: &[usize]) -> HilbertLayout {
        let mut positions = positions.to_vec();
        positions.sort_unstable();
        positions.dedup();
        HilbertLayout { factors: positions.iter().map(|&p| self.factors[p].clone()).collect() }
    }

    /// Mixed-radix digits of a flat index, one per factor.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.factors.len()];
        for (d, f) in digits.iter_mut().zip(&self.factors).rev() {
            *d = index % f.dim;
            index /= f.dim;
        }
        digits
    }

    pub fn flat_index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.factors).fold(0, |acc, (&d, f)| acc * f.dim + d)
    }
}
