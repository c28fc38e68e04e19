//! Dense vectors and subspaces over GF(2).
//!
//! Every vector space in this crate has a small, explicitly ordered monomial
//! basis, so a vector is a packed bitset over basis indices and a subspace is
//! kept in reduced echelon form keyed by pivot position. The pivot of a vector
//! is its lowest set index, which makes "reduce modulo a subspace" prefer
//! representatives that are early in monomial order.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn add_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "F2Vec[{bits}]")
    }
}

/// A subspace of `F2^len` in fully reduced echelon form.
///
/// Rows are kept sorted by pivot and no row has a set bit at another row's
/// pivot, so `reduce` yields a canonical coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    rows: Vec<F2Vec>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn full(len: usize) -> Self {
        Self { len, rows: (0..len).map(|i| F2Vec::unit(len, i)).collect() }
    }

    pub fn spanned_by<'a>(len: usize, vectors: impl IntoIterator<Item = &'a F2Vec>) -> Self {
        let mut s = Self::zero(len);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot().expect("echelon rows are nonzero"))
    }

    /// Canonical representative of `v + self`.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut out = v.clone();
        for row in &self.rows {
            let p = row.pivot().expect("echelon rows are nonzero");
            if out.get(p) {
                out.add_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns false if it was already contained.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        assert_eq!(v.len(), self.len, "ambient dimension mismatch");
        let r = self.reduce(&v);
        let Some(p) = r.pivot() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.add_assign(&r);
            }
        }
        let at = self.rows.partition_point(|row| row.pivot().unwrap() < p);
        self.rows.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// A basis of a complement of `self` inside `outer`, reduced modulo `self`.
    ///
    /// Requires `self ⊆ outer`. The returned vectors are in echelon form
    /// relative to each other and to `self`, which makes the choice canonical.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<F2Vec> {
        let mut quotient = self.clone();
        let mut reps = Vec::new();
        for v in outer.basis() {
            let r = quotient.reduce(v);
            if !r.is_zero() {
                quotient.insert(r);
            }
        }
        // Re-read the new rows out of the combined echelon form so every
        // representative is fully reduced against all pivots.
        let old: Vec<usize> = self.pivots().collect();
        for row in quotient.basis() {
            if !old.contains(&row.pivot().unwrap()) {
                reps.push(row.clone());
            }
        }
        reps
    }
}

/// Kernel of the linear map sending the i-th source basis vector to `images[i]`.
///
/// Returned vectors are coefficient vectors of length `images.len()`.
pub fn kernel(images: &[F2Vec], target_dim: usize) -> Vec<F2Vec> {
    let n = images.len();
    // Augmented rows [image | identity]; eliminate on the image part.
    let mut rows: Vec<(F2Vec, F2Vec)> = images
        .iter()
        .enumerate()
        .map(|(i, im)| {
            assert_eq!(im.len(), target_dim);
            (im.clone(), F2Vec::unit(n, i))
        })
        .collect();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
    let mut kernel = Vec::new();
    for i in 0..rows.len() {
        for &(p, j) in &pivot_rows {
            if rows[i].0.get(p) {
                let (a, b) = (rows[j].0.clone(), rows[j].1.clone());
                rows[i].0.add_assign(&a);
                rows[i].1.add_assign(&b);
            }
        }
        match rows[i].0.pivot() {
            Some(p) => pivot_rows.push((p, i)),
            None => kernel.push(rows[i].1.clone()),
        }
    }
    kernel
}
