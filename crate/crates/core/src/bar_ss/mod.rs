//! The bar spectral sequence of a loop space and its column truncations.
//!
//! Pages are subquotients of one free bigraded algebra (the E2 term): each
//! bidegree keeps its cycle and boundary subspaces inside the E2 vector space,
//! plus a canonical basis of representatives for `Z_r / B_r`. A differential
//! is given on generators and extended to E2 by the Leibniz rule, then acts on
//! representatives. Indexing is cohomological: `d_r: E_r^{s,t} -> E_r^{s+r, t-r+1}`.
//!
//! Truncating to columns `s <= m` models the Ganea projective space `P^m`:
//! differentials whose target lies beyond column `m` vanish there.
//!
//! Near the top of the stored degree range kernels are unreliable because
//! their targets are cut off, so pages are stored with headroom above the
//! reported degree cap and every nontrivial differential consumes one degree
//! of it.

mod differential;
mod infer;
mod koszul;
mod pm;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_monomial, Height, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{F2Vec, Subspace};

pub use differential::{apply_differential, differential_of, page_at, run_to_e_infinity, truncate, Assignment, DifferentialSpec};
pub use infer::{infer_differentials, InferenceOptions};
pub use koszul::koszul_e2;
pub use pm::{pm_module_report, Bucket, ClassLabeler, ExtraClass, ModuleClass, PmModuleReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BigradedGenerator {
    pub name: String,
    pub s: u32,
    pub t: u32,
    pub height: Height,
}

impl BigradedGenerator {
    pub fn total_degree(&self) -> u32 {
        self.s + self.t
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub s: u32,
    pub t: u32,
}

impl Bidegree {
    pub fn new(s: u32, t: u32) -> Self {
        Self { s, t }
    }

    pub fn total(self) -> u32 {
        self.s + self.t
    }

    /// Target of `d_r`, if it has nonnegative internal degree.
    pub fn shifted(self, r: u32) -> Option<Bidegree> {
        let t = self.t as i64 + 1 - r as i64;
        (t >= 0).then(|| Bidegree::new(self.s + r, t as u32))
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// The E2-level monomial basis shared by every page of one spectral sequence.
#[derive(Debug)]
struct Shape {
    generators: Vec<BigradedGenerator>,
    degree_cap: u32,
    stored_cap: u32,
    column_cap: Option<u32>,
    cells: BTreeMap<Bidegree, Vec<Monomial>>,
    index: HashMap<Monomial, (Bidegree, usize)>,
}

impl Shape {
    fn new(generators: Vec<BigradedGenerator>, degree_cap: u32, column_cap: Option<u32>) -> Self {
        // One degree of headroom per generator: a generator supports at most
        // one nonzero differential, so no run exhausts it.
        let stored_cap = degree_cap + generators.len().max(1) as u32;
        let max_exp: Vec<u32> = generators
            .iter()
            .map(|g| {
                let by_degree = stored_cap / g.total_degree().max(1);
                let by_column = match (column_cap, g.s) {
                    (Some(m), s) if s > 0 => m / s,
                    _ => u32::MAX,
                };
                let by_height = g.height.finite().map_or(u32::MAX, |h| h - 1);
                by_degree.min(by_column).min(by_height)
            })
            .collect();
        let mut cells: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
        let mut current = vec![0u32; generators.len()];
        enumerate(&generators, &max_exp, stored_cap, column_cap, 0, Bidegree::new(0, 0), &mut current, &mut cells);
        let mut index = HashMap::new();
        for (&b, ms) in &mut cells {
            ms.sort();
            for (i, m) in ms.iter().enumerate() {
                index.insert(m.clone(), (b, i));
            }
        }
        Self { generators, degree_cap, stored_cap, column_cap, cells, index }
    }

    fn bidegree_of(&self, m: &Monomial) -> Bidegree {
        let (mut s, mut t) = (0, 0);
        for (e, g) in m.exponents().iter().zip(&self.generators) {
            s += e * g.s;
            t += e * g.t;
        }
        Bidegree::new(s, t)
    }

    fn dim(&self, b: Bidegree) -> usize {
        self.cells.get(&b).map_or(0, Vec::len)
    }

    fn locate(&self, m: &Monomial) -> Option<(Bidegree, usize)> {
        self.index.get(m).copied()
    }

    fn format(&self, m: &Monomial) -> String {
        format_monomial(self.generators.iter().map(|g| g.name.as_str()), m)
    }

    fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; self.generators.len()];
        if text == "1" {
            return Ok(Monomial::from_exponents(exps));
        }
        for factor in text.split('*') {
            let (name, e) = match factor.trim().split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse().map_err(|_| Error::ParseMonomial(text.into()))?),
                None => (factor.trim(), 1u32),
            };
            let i = self.generator_index(name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
            exps[i] += e;
        }
        Ok(Monomial::from_exponents(exps))
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    gens: &[BigradedGenerator],
    max_exp: &[u32],
    stored_cap: u32,
    column_cap: Option<u32>,
    i: usize,
    at: Bidegree,
    current: &mut Vec<u32>,
    out: &mut BTreeMap<Bidegree, Vec<Monomial>>,
) {
    if i == gens.len() {
        out.entry(at).or_default().push(Monomial::from_exponents(current.clone()));
        return;
    }
    for e in 0..=max_exp[i] {
        let b = Bidegree::new(at.s + e * gens[i].s, at.t + e * gens[i].t);
        if b.total() > stored_cap || column_cap.is_some_and(|m| b.s > m) {
            break;
        }
        current[i] = e;
        enumerate(gens, max_exp, stored_cap, column_cap, i + 1, b, current, out);
    }
    current[i] = 0;
}

/// One bidegree of a page: `Z_r`, `B_r` and representatives of `Z_r / B_r`.
#[derive(Clone, Debug)]
struct Cell {
    cycles: Subspace,
    boundaries: Subspace,
    reps: Vec<F2Vec>,
}

/// The `E_r` page of a (possibly column-truncated) bar spectral sequence.
#[derive(Clone, Debug)]
pub struct BigradedPage {
    shape: Arc<Shape>,
    r: u32,
    exact_through: u32,
    cells: BTreeMap<Bidegree, Cell>,
    applied: Vec<DifferentialSpec>,
}

impl BigradedPage {
    /// The free bigraded algebra on `generators` as an `E_2` page.
    pub fn free(generators: Vec<BigradedGenerator>, degree_cap: u32, column_cap: Option<u32>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.name.clone()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            if g.total_degree() < 1 {
                return Err(Error::InvalidDegree { name: g.name.clone(), degree: 0 });
            }
            if let Some(h) = g.height.finite() {
                if h < 2 {
                    return Err(Error::InvalidHeight { name: g.name.clone(), height: h });
                }
            }
        }
        let shape = Arc::new(Shape::new(generators, degree_cap, column_cap));
        let cells = shape
            .cells
            .iter()
            .map(|(&b, ms)| {
                let n = ms.len();
                let cell = Cell {
                    cycles: Subspace::full(n),
                    boundaries: Subspace::zero(n),
                    reps: (0..n).map(|i| F2Vec::unit(n, i)).collect(),
                };
                (b, cell)
            })
            .collect();
        let exact_through = shape.stored_cap;
        Ok(Self { shape, r: 2, exact_through, cells, applied: Vec::new() })
    }

    /// The same generators, restricted to columns `s <= m`, back at `E_2`.
    pub fn e2_with_column_cap(&self, column_cap: Option<u32>) -> Result<Self> {
        Self::free(self.shape.generators.clone(), self.shape.degree_cap, column_cap)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn generators(&self) -> &[BigradedGenerator] {
        &self.shape.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.shape.generator_index(name)
    }

    pub fn degree_cap(&self) -> u32 {
        self.shape.degree_cap
    }

    pub fn column_cap(&self) -> Option<u32> {
        self.shape.column_cap
    }

    /// Nonzero differentials applied so far, in page order.
    pub fn applied(&self) -> &[DifferentialSpec] {
        &self.applied
    }

    pub fn dim(&self, b: Bidegree) -> usize {
        self.cells.get(&b).map_or(0, |c| c.reps.len())
    }

    /// Dimension per total degree `0..=degree_cap`.
    pub fn dims_by_total_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.shape.degree_cap as usize + 1];
        for (b, c) in &self.cells {
            if b.total() <= self.shape.degree_cap {
                out[b.total() as usize] += c.reps.len();
            }
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.dims_by_total_degree().iter().sum()
    }

    /// Bidegrees with nonzero classes, within the reported cap.
    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.cells
            .iter()
            .filter(|(b, c)| b.total() <= self.shape.degree_cap && !c.reps.is_empty())
            .map(|(&b, _)| b)
    }

    /// Class representatives (as E2 vectors) in a bidegree.
    pub fn representatives(&self, b: Bidegree) -> &[F2Vec] {
        self.cells.get(&b).map_or(&[], |c| c.reps.as_slice())
    }

    /// E2 basis monomials of a bidegree.
    pub fn e2_basis(&self, b: Bidegree) -> &[Monomial] {
        self.shape.cells.get(&b).map_or(&[], Vec::as_slice)
    }

    pub fn bidegree_of(&self, m: &Monomial) -> Bidegree {
        self.shape.bidegree_of(m)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.shape.format(m)
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        self.shape.parse_monomial(text)
    }

    pub fn format_vector(&self, b: Bidegree, v: &F2Vec) -> String {
        let basis = self.e2_basis(b);
        let terms: Vec<String> = v.ones().map(|i| self.shape.format(&basis[i])).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// If `v` is a single E2 monomial, that monomial.
    pub fn as_monomial(&self, b: Bidegree, v: &F2Vec) -> Option<&Monomial> {
        if v.count_ones() == 1 {
            self.e2_basis(b).get(v.pivot()?)
        } else {
            None
        }
    }

    /// Position and vector of an E2 monomial, if it survives the caps.
    pub fn monomial_vector(&self, m: &Monomial) -> Option<(Bidegree, F2Vec)> {
        let (b, i) = self.shape.locate(m)?;
        Some((b, F2Vec::unit(self.shape.dim(b), i)))
    }

    /// Whether the E2 vector `v` is a cycle that is not a boundary on this page.
    pub fn is_nonzero_class(&self, b: Bidegree, v: &F2Vec) -> bool {
        self.cells
            .get(&b)
            .is_some_and(|c| c.cycles.contains(v) && !c.boundaries.contains(v))
    }

    pub fn is_boundary(&self, b: Bidegree, v: &F2Vec) -> bool {
        self.cells.get(&b).is_some_and(|c| c.boundaries.contains(v))
    }

    /// Whether the page contains the class of the named monomial.
    pub fn has_monomial_class(&self, text: &str) -> Result<bool> {
        let m = self.parse_monomial(text)?;
        Ok(self.monomial_vector(&m).is_some_and(|(b, v)| self.is_nonzero_class(b, &v)))
    }

    /// Largest column holding a nonzero class; `d_r` vanishes for `r` beyond
    /// the spread of occupied columns.
    pub fn column_span(&self) -> u32 {
        let cols: Vec<u32> = self
            .cells
            .iter()
            .filter(|(_, c)| !c.reps.is_empty())
            .map(|(b, _)| b.s)
            .collect();
        match (cols.iter().min(), cols.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> PageJson {
        PageJson {
            r: self.r,
            degree_cap: self.shape.degree_cap,
            column_cap: self.shape.column_cap,
            generators: self.shape.generators.clone(),
            cells: self
                .bidegrees()
                .map(|b| CellJson {
                    s: b.s,
                    t: b.t,
                    monomials: self.representatives(b).iter().map(|v| self.format_vector(b, v)).collect(),
                })
                .collect(),
            differentials: self.applied.clone(),
        }
    }
}

/// Serialized page: class representatives per bidegree plus the differentials
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageJson {
    pub r: u32,
    pub degree_cap: u32,
    pub column_cap: Option<u32>,
    pub generators: Vec<BigradedGenerator>,
    pub cells: Vec<CellJson>,
    pub differentials: Vec<DifferentialSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub s: u32,
    pub t: u32,
    pub monomials: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, t: u32, height: Height) -> BigradedGenerator {
        BigradedGenerator { name: name.into(), s: 1, t, height }
    }

    #[test]
    fn free_page_counts() {
        let p = BigradedPage::free(
            vec![gen("a", 2, Height::UNBOUNDED), gen("b", 4, Height::EXTERIOR)],
            12,
            None,
        )
        .unwrap();
        // (1 + t^3 + t^6 + t^9 + t^12)(1 + t^5) through degree 12
        let dims = p.dims_by_total_degree();
        assert_eq!(dims[0], 1);
        assert_eq!(dims[3], 1);
        assert_eq!(dims[5], 1);
        assert_eq!(dims[8], 1);
        assert_eq!(dims[12], 1);
        assert_eq!(p.total_dim(), 8);
        assert_eq!(p.dim(Bidegree::new(4, 8)), 1);
    }

    #[test]
    fn column_cap_restricts() {
        let p = BigradedPage::free(vec![gen("a", 2, Height::UNBOUNDED)], 30, Some(2)).unwrap();
        assert_eq!(p.total_dim(), 3);
        let p0 = BigradedPage::free(vec![gen("a", 2, Height::UNBOUNDED)], 30, Some(0)).unwrap();
        assert_eq!(p0.total_dim(), 1);
        assert_eq!(p0.bidegrees().collect::<Vec<_>>(), vec![Bidegree::new(0, 0)]);
    }

    #[test]
    fn shift() {
        assert_eq!(Bidegree::new(1, 10).shifted(3), Some(Bidegree::new(4, 8)));
        assert_eq!(Bidegree::new(1, 1).shifted(3), None);
    }

    #[test]
    fn duplicate_generators_rejected() {
        let e = BigradedPage::free(vec![gen("a", 2, Height::EXTERIOR), gen("a", 4, Height::EXTERIOR)], 10, None);
        assert!(matches!(e, Err(Error::DuplicateGenerator(_))));
    }
}
