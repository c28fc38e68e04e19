//! Cell-dimension bookkeeping for suspensions and smash products.
//!
//! Only the positive-dimensional cells are stored; the basepoint is implicit.
//! Attaching maps are not modelled.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub dim: u32,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComplex {
    pub name: String,
    pub cells: Vec<Cell>,
}

impl CellComplex {
    /// Cells labelled `e{dim}`, numbered when a dimension repeats.
    pub fn from_dims(name: impl Into<String>, dims: &[u32]) -> Self {
        let mut cells = Vec::new();
        for (i, &dim) in dims.iter().enumerate() {
            let repeats = dims.iter().filter(|&&d| d == dim).count() > 1;
            let n = dims[..i].iter().filter(|&&d| d == dim).count();
            let label = if repeats { format!("e{dim}.{n}") } else { format!("e{dim}") };
            cells.push(Cell { dim, label });
        }
        Self { name: name.into(), cells }
    }

    pub fn sphere(n: u32) -> Self {
        Self::from_dims(format!("S{n}"), &[n])
    }

    /// `CP^n`: one cell in each even dimension `2..=2n`.
    pub fn complex_projective(n: u32) -> Self {
        let dims: Vec<u32> = (1..=n).map(|i| 2 * i).collect();
        Self::from_dims(format!("CP{n}"), &dims)
    }

    /// Sorted dimension multiset.
    pub fn dims(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.cells.iter().map(|c| c.dim).collect();
        d.sort_unstable();
        d
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn min_dim(&self) -> Option<u32> {
        self.cells.iter().map(|c| c.dim).min()
    }

    pub fn suspend(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            name: format!("Σ^{k}{}", self.name),
            cells: self.cells.iter().map(|c| Cell { dim: c.dim + k, label: c.label.clone() }).collect(),
        }
    }

    /// Cells of `a ∧ b`: one per pair of positive cells, dimensions adding.
    pub fn smash(&self, other: &CellComplex) -> Self {
        let cells = self
            .cells
            .iter()
            .flat_map(|a| {
                other.cells.iter().map(move |b| Cell { dim: a.dim + b.dim, label: format!("{}∧{}", a.label, b.label) })
            })
            .collect();
        Self { name: format!("{}∧{}", self.name, other.name), cells }
    }

    /// `n`-fold smash power, `n >= 1`.
    pub fn smash_power(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 1..n {
            out = out.smash(self);
        }
        out
    }

    /// Labels of all cells in the given dimensions.
    pub fn labels_in_dims(&self, dims: &[u32]) -> Vec<String> {
        self.cells.iter().filter(|c| dims.contains(&c.dim)).map(|c| c.label.clone()).collect()
    }

    /// Lowest dimension among cells not named in `excluded`; `None` when
    /// nothing is left.
    pub fn min_cell_dim_excluding<S: AsRef<str>>(&self, excluded: &[S]) -> Result<Option<u32>> {
        let labels: BTreeSet<&str> = self.cells.iter().map(|c| c.label.as_str()).collect();
        let mut skip = BTreeSet::new();
        for l in excluded {
            let l = l.as_ref();
            if !labels.contains(l) {
                return Err(Error::UnknownLabel(l.to_string()));
            }
            skip.insert(l);
        }
        Ok(self.cells.iter().filter(|c| !skip.contains(c.label.as_str())).map(|c| c.dim).min())
    }
}

impl fmt::Display for CellComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(u32::to_string).collect();
        write!(f, "{} {{{}}}", self.name, dims.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suspension_shifts() {
        assert_eq!(CellComplex::complex_projective(2).suspend(9).dims(), vec![11, 13]);
        assert_eq!(CellComplex::sphere(3).suspend(4).dims(), vec![7]);
        let c = CellComplex::complex_projective(3);
        assert_eq!(c.suspend(0), c);
    }

    #[test]
    fn smash_dims() {
        let cp2 = CellComplex::complex_projective(2);
        assert_eq!(cp2.smash(&cp2).dims(), vec![4, 6, 6, 8]);
        let cp3 = CellComplex::complex_projective(3);
        assert_eq!(cp3.smash(&CellComplex::sphere(6)).dims(), vec![8, 10, 12]);
        assert_eq!(cp3.smash(&CellComplex::sphere(2)).dims(), cp3.suspend(2).dims());
    }

    #[test]
    fn exclusion() {
        let s7 = CellComplex::sphere(7);
        assert_eq!(s7.min_cell_dim_excluding::<&str>(&[]).unwrap(), Some(7));
        assert_eq!(s7.min_cell_dim_excluding(&["e7"]).unwrap(), None);
        assert!(matches!(s7.min_cell_dim_excluding(&["e8"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn labels_stay_unique() {
        let p = CellComplex::complex_projective(2).smash_power(4);
        let labels: BTreeSet<_> = p.cells.iter().map(|c| &c.label).collect();
        assert_eq!(labels.len(), 16);
        let doubled = CellComplex::from_dims("x", &[3, 3, 5]);
        assert_eq!(doubled.cells[1].label, "e3.1");
    }
}
