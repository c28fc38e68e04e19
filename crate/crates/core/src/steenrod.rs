//! Steenrod squares on a presented algebra.
//!
//! The action is specified on generators only. `Sq^0` is the identity,
//! `Sq^|g| g = g^2` and `Sq^k g = 0` above the degree; the table fills in
//! `0 < k < |g|`, defaulting to zero. Everything else follows from the
//! Cartan formula: the total square `Sq = Σ Sq^k` is a ring map.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, Element, Monomial};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

#[derive(Clone, Debug)]
pub struct SteenrodAction {
    algebra: Algebra,
    table: BTreeMap<(usize, u32), Element>,
}

impl SteenrodAction {
    pub fn empty(algebra: Algebra) -> Self {
        Self { algebra, table: BTreeMap::new() }
    }

    /// Builds an action from `(generator, k, Sq^k generator)` triples.
    ///
    /// Entries that break instability are kept so that
    /// [`verify_instability`](Self::verify_instability) can report them; they
    /// are never consulted by [`apply_sq`](Self::apply_sq).
    pub fn new<'a>(
        algebra: Algebra,
        entries: impl IntoIterator<Item = (&'a str, u32, Element)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (name, k, value) in entries {
            let g = algebra
                .generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            algebra.check_same(value.algebra())?;
            table.insert((g, k), value);
        }
        Ok(Self { algebra, table })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, u32, &Element)> {
        self.table
            .iter()
            .map(|(&(g, k), v)| (self.algebra.generators()[g].name.as_str(), k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `Sq^k` on a generator, with the instability conventions applied.
    pub fn on_generator(&self, g: usize, k: u32) -> Element {
        let spec = &self.algebra.generators()[g];
        let x = self
            .algebra
            .monomial_element(Monomial::one(self.algebra.n_generators()).with_exponent(g, 1));
        match k {
            0 => x,
            k if k == spec.degree => x.multiply(&x).expect("same algebra"),
            k if k > spec.degree => self.algebra.zero(),
            k => self.table.get(&(g, k)).cloned().unwrap_or_else(|| self.algebra.zero()),
        }
    }

    pub fn apply_sq(&self, k: u32, e: &Element) -> Result<Element> {
        self.algebra.check_same(e.algebra())?;
        if !e.is_homogeneous() {
            return Err(Error::Inhomogeneous(e.to_string()));
        }
        let mut out = self.algebra.zero();
        for m in e.terms() {
            out = out.add(&self.sq_monomial(k, m))?;
        }
        Ok(out)
    }

    fn sq_monomial(&self, k: u32, m: &Monomial) -> Element {
        let mut acc = Graded::one(&self.algebra, k);
        for (g, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let total = Graded::total_square(self, g, k);
            for _ in 0..e {
                acc = acc.multiply(&total);
                if acc.is_zero() {
                    return self.algebra.zero();
                }
            }
        }
        acc.parts.swap_remove(k as usize)
    }

    /// A basis of `Sq^k(H^{target-k}) ⊆ H^target`, in echelon form.
    pub fn image_of_sq(&self, k: u32, target_degree: u32) -> Result<Vec<Element>> {
        let target_dim = self.algebra.basis(target_degree)?.len();
        if k > target_degree {
            return Ok(Vec::new());
        }
        let source = target_degree - k;
        let mut image = Subspace::zero(target_dim);
        for m in self.algebra.basis(source)? {
            let v = self.apply_sq(k, &self.algebra.monomial_element(m.clone()))?;
            image.insert(self.algebra.to_vector(&v, target_degree)?);
        }
        image
            .basis()
            .iter()
            .map(|v| self.algebra.from_vector(v, target_degree))
            .collect()
    }

    /// Checks every stored entry against instability and homogeneity.
    pub fn verify_instability(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (&(g, k), value) in &self.table {
            let spec = &self.algebra.generators()[g];
            let name = spec.name.clone();
            if k > spec.degree {
                if !value.is_zero() {
                    out.push(Violation { generator: name, k, kind: ViolationKind::AboveDegree });
                }
                continue;
            }
            let expected = spec.degree + k;
            if !value.is_zero() {
                match value.degree() {
                    Some(d) if d == expected => {}
                    found => out.push(Violation {
                        generator: name.clone(),
                        k,
                        kind: ViolationKind::Inhomogeneous { expected, found },
                    }),
                }
            }
            let implied = match k {
                0 => Some((self.on_generator(g, 0), ViolationKind::NotIdentity)),
                k if k == spec.degree => Some((self.on_generator(g, k), ViolationKind::NotSquare)),
                _ => None,
            };
            if let Some((must_be, kind)) = implied {
                if &must_be != value {
                    out.push(Violation { generator: name, k, kind });
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub generator: String,
    pub k: u32,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `Sq^k g` declared nonzero for `k > |g|`.
    AboveDegree,
    /// `Sq^|g| g` declared different from `g^2`.
    NotSquare,
    /// `Sq^0 g` declared different from `g`.
    NotIdentity,
    Inhomogeneous { expected: u32, found: Option<u32> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (g, k) = (&self.generator, self.k);
        match &self.kind {
            ViolationKind::AboveDegree => write!(f, "Sq^{k} {g}: k > degree"),
            ViolationKind::NotSquare => write!(f, "Sq^{k} {g}: must equal {g}^2"),
            ViolationKind::NotIdentity => write!(f, "Sq^0 {g}: must equal {g}"),
            ViolationKind::Inhomogeneous { expected, found: Some(d) } => {
                write!(f, "Sq^{k} {g}: value has degree {d}, expected {expected}")
            }
            ViolationKind::Inhomogeneous { expected, found: None } => {
                write!(f, "Sq^{k} {g}: value is inhomogeneous, expected degree {expected}")
            }
        }
    }
}

/// Truncated graded series `parts[j]` = component raised by `j`, for `j <= top`.
struct Graded {
    parts: Vec<Element>,
}

impl Graded {
    fn one(algebra: &Algebra, top: u32) -> Self {
        let mut parts = vec![algebra.zero(); top as usize + 1];
        parts[0] = algebra.one();
        Self { parts }
    }

    fn total_square(action: &SteenrodAction, g: usize, top: u32) -> Self {
        Self { parts: (0..=top).map(|j| action.on_generator(g, j)).collect() }
    }

    fn multiply(&self, other: &Graded) -> Graded {
        let top = self.parts.len() - 1;
        let algebra = self.parts[0].algebra();
        let mut parts = vec![algebra.zero(); top + 1];
        for (i, a) in self.parts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.parts.iter().enumerate().take(top + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let p = a.multiply(b).expect("same algebra");
                parts[i + j] = parts[i + j].add(&p).expect("same algebra");
            }
        }
        Graded { parts }
    }

    fn is_zero(&self) -> bool {
        self.parts.iter().all(Element::is_zero)
    }
}
