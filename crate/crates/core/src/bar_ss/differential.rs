use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BigradedPage, Bidegree, Cell};
use crate::error::{Error, Result};
use crate::linalg::{kernel, F2Vec, Subspace};

/// `d_r` on generators; generators not listed map to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialSpec {
    pub r: u32,
    pub assignments: Vec<Assignment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub generator: String,
    /// Monomial strings summed over F2.
    pub value: Vec<String>,
}

impl DifferentialSpec {
    pub fn zero(r: u32) -> Self {
        Self { r, assignments: Vec::new() }
    }

    pub fn with(mut self, generator: &str, value: &[&str]) -> Self {
        self.assignments.push(Assignment {
            generator: generator.to_string(),
            value: value.iter().map(|s| s.to_string()).collect(),
        });
        self
    }
}

/// A Leibniz derivation on the E2 algebra, specified on generators.
pub(super) struct Derivation {
    r: u32,
    values: Vec<Option<F2Vec>>,
}

impl Derivation {
    pub(super) fn build(page: &BigradedPage, spec: &DifferentialSpec) -> Result<Self> {
        let shape = &page.shape;
        let mut values: Vec<Option<F2Vec>> = vec![None; shape.generators.len()];
        for a in &spec.assignments {
            let g = shape
                .generator_index(&a.generator)
                .ok_or_else(|| Error::UnknownGenerator(a.generator.clone()))?;
            let gen = &shape.generators[g];
            let source = Bidegree::new(gen.s, gen.t);
            let target = source.shifted(spec.r);
            for text in &a.value {
                let m = shape.parse_monomial(text)?;
                let b = shape.bidegree_of(&m);
                if Some(b) != target {
                    return Err(Error::BidegreeShift {
                        generator: a.generator.clone(),
                        s: b.s,
                        t: b.t as i64,
                        expected_s: source.s + spec.r,
                        expected_t: source.t as i64 + 1 - spec.r as i64,
                    });
                }
                // Monomials cut off by heights or caps are zero on this page.
                if let Some((b, i)) = shape.locate(&m) {
                    let v = values[g].get_or_insert_with(|| F2Vec::zeros(shape.dim(b)));
                    v.flip(i);
                }
            }
        }
        for v in &mut values {
            if v.as_ref().is_some_and(F2Vec::is_zero) {
                *v = None;
            }
        }
        Ok(Self { r: spec.r, values })
    }

    pub(super) fn is_zero(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    /// Leibniz extension applied to an E2 vector in bidegree `b`. Returns the
    /// target bidegree and image, or `None` when the target is off the page.
    pub(super) fn apply(&self, page: &BigradedPage, b: Bidegree, v: &F2Vec) -> Option<(Bidegree, F2Vec)> {
        let shape = &page.shape;
        let q = b.shifted(self.r)?;
        let n = shape.dim(q);
        if n == 0 {
            return None;
        }
        let source_basis = &shape.cells[&b];
        let mut out = F2Vec::zeros(n);
        for i in v.ones() {
            let m = &source_basis[i];
            for (g, &e) in m.exponents().iter().enumerate() {
                // d(g^e) = e g^(e-1) d(g), which vanishes for even e.
                if e % 2 == 0 {
                    continue;
                }
                let Some(dg) = &self.values[g] else { continue };
                let rest = m.with_exponent(g, e - 1);
                let gen = &shape.generators[g];
                let dg_cell = Bidegree::new(gen.s, gen.t).shifted(self.r).expect("validated shift");
                for j in dg.ones() {
                    let p = rest.raw_product(&shape.cells[&dg_cell][j]);
                    if let Some((pb, pi)) = shape.locate(&p) {
                        debug_assert_eq!(pb, q);
                        out.flip(pi);
                    }
                }
            }
        }
        Some((q, out))
    }
}

/// Passes from `E_r` to `E_{r+1}` by taking homology of `d_r`.
pub fn apply_differential(page: &BigradedPage, spec: &DifferentialSpec) -> Result<BigradedPage> {
    if spec.r != page.r {
        return Err(Error::PageMismatch { spec: spec.r, page: page.r });
    }
    let d = Derivation::build(page, spec)?;
    if d.is_zero() {
        let mut next = page.clone();
        next.r += 1;
        return Ok(next);
    }

    let mut new_cycles: BTreeMap<Bidegree, Subspace> = BTreeMap::new();
    let mut new_boundaries: BTreeMap<Bidegree, Subspace> =
        page.cells.iter().map(|(&b, c)| (b, c.boundaries.clone())).collect();

    for (&b, cell) in &page.cells {
        let mut cycles = cell.boundaries.clone();
        if cell.reps.is_empty() {
            new_cycles.insert(b, cycles);
            continue;
        }
        let target = b.shifted(page.r).filter(|q| page.shape.dim(*q) > 0);
        let Some(q) = target else {
            for rep in &cell.reps {
                cycles.insert(rep.clone());
            }
            new_cycles.insert(b, cycles);
            continue;
        };
        let q_cell = &page.cells[&q];
        let checked = q.total() <= page.exact_through;
        let mut images = Vec::with_capacity(cell.reps.len());
        for rep in &cell.reps {
            let (_, image) = d.apply(page, b, rep).expect("target cell exists");
            if checked && !q_cell.cycles.contains(&image) {
                return Err(Error::NotACycle(page.format_vector(b, rep)));
            }
            if let Some((q2, twice)) = d.apply(page, q, &image) {
                if q2.total() <= page.exact_through && !page.cells[&q2].boundaries.contains(&twice) {
                    return Err(Error::DSquaredNonzero(page.format_vector(b, rep)));
                }
            }
            images.push(q_cell.boundaries.reduce(&image));
        }
        for combo in kernel(&images, page.shape.dim(q)) {
            let mut v = F2Vec::zeros(page.shape.dim(b));
            for i in combo.ones() {
                v.add_assign(&cell.reps[i]);
            }
            cycles.insert(v);
        }
        let bq = new_boundaries.get_mut(&q).expect("every cell has boundaries");
        for w in images {
            bq.insert(w);
        }
        new_cycles.insert(b, cycles);
    }

    let cells = new_cycles
        .into_iter()
        .map(|(b, cycles)| {
            let boundaries = new_boundaries.remove(&b).expect("same bidegrees");
            let reps = boundaries.complement_in(&cycles);
            (b, Cell { cycles, boundaries, reps })
        })
        .collect();

    let exact_through = page.exact_through - 1;
    if exact_through < page.shape.degree_cap {
        return Err(Error::PageNotReachable { page: page.r + 1, cap: page.shape.degree_cap });
    }
    let mut applied = page.applied.clone();
    applied.push(spec.clone());
    Ok(BigradedPage { shape: page.shape.clone(), r: page.r + 1, exact_through, cells, applied })
}

/// `d_r` of one E2 monomial by the Leibniz rule: the target bidegree and the
/// monomials of the image, or `None` when the target is off the page.
pub fn differential_of(
    page: &BigradedPage,
    spec: &DifferentialSpec,
    monomial: &str,
) -> Result<Option<(Bidegree, Vec<String>)>> {
    let d = Derivation::build(page, spec)?;
    let m = page.parse_monomial(monomial)?;
    let Some((b, v)) = page.monomial_vector(&m) else { return Ok(None) };
    Ok(d.apply(page, b, &v).map(|(q, image)| {
        let basis = page.e2_basis(q);
        (q, image.ones().map(|i| page.format_monomial(&basis[i])).collect())
    }))
}

fn sorted_specs(specs: &[DifferentialSpec]) -> Vec<DifferentialSpec> {
    let mut merged: BTreeMap<u32, DifferentialSpec> = BTreeMap::new();
    for s in specs {
        merged
            .entry(s.r)
            .or_insert_with(|| DifferentialSpec::zero(s.r))
            .assignments
            .extend(s.assignments.iter().cloned());
    }
    merged.into_values().collect()
}

/// Applies the listed differentials in page order, then stops: unlisted
/// differentials are zero.
pub fn run_to_e_infinity(e2: &BigradedPage, specs: &[DifferentialSpec]) -> Result<BigradedPage> {
    let mut page = advance(e2, specs, None)?;
    page.r = page.r.max(page.column_span() + 1);
    Ok(page)
}

/// The page `E_r`, running every differential `d_{r'}` with `r' < r`.
pub fn page_at(e2: &BigradedPage, specs: &[DifferentialSpec], r: u32) -> Result<BigradedPage> {
    let mut page = advance(e2, specs, Some(r))?;
    while page.r < r {
        page = apply_differential(&page, &DifferentialSpec::zero(page.r))?;
    }
    Ok(page)
}

fn advance(e2: &BigradedPage, specs: &[DifferentialSpec], stop_before: Option<u32>) -> Result<BigradedPage> {
    let mut page = e2.clone();
    for spec in sorted_specs(specs) {
        if stop_before.is_some_and(|r| spec.r >= r) {
            break;
        }
        if spec.r < page.r {
            return Err(Error::PageMismatch { spec: spec.r, page: page.r });
        }
        while page.r < spec.r {
            page = apply_differential(&page, &DifferentialSpec::zero(page.r))?;
        }
        page = apply_differential(&page, &spec)?;
    }
    Ok(page)
}

/// The spectral sequence of `P^m`: columns `s <= m`, same differentials.
pub fn truncate(e2: &BigradedPage, m: u32, specs: &[DifferentialSpec]) -> Result<BigradedPage> {
    run_to_e_infinity(&e2.e2_with_column_cap(Some(m))?, specs)
}
