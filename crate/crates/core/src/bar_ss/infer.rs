use std::collections::BTreeMap;

use super::differential::{apply_differential, Assignment, DifferentialSpec};
use super::{BigradedPage, Bidegree};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::F2Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InferenceOptions {
    /// Candidate differentials allowed per unknown generator.
    pub max_candidates_per_generator: u64,
}

impl Default for InferenceOptions {
    fn default() -> Self {
        Self { max_candidates_per_generator: 1_000_000 }
    }
}

#[derive(Clone, Debug)]
struct Candidate {
    generator: usize,
    r: u32,
    target: Bidegree,
    value: F2Vec,
}

/// Every assignment of differentials to the non-permanent generators whose
/// E-infinity term has the target's dimension in each total degree.
///
/// Each unknown generator either stays a permanent cycle or supports exactly
/// one nonzero `d_r`, valued in its target bidegree. Values that differ by a
/// boundary are the same differential, so only canonical (fully reduced)
/// representatives are tried. Returns one list of specs per solution.
pub fn infer_differentials(
    e2: &BigradedPage,
    permanent: &[String],
    target: &Algebra,
    options: &InferenceOptions,
) -> Result<Vec<Vec<DifferentialSpec>>> {
    for name in permanent {
        if e2.generator_index(name).is_none() {
            return Err(Error::UnknownGenerator(name.clone()));
        }
    }
    let unknowns: Vec<usize> = (0..e2.generators().len())
        .filter(|&g| !permanent.contains(&e2.generators()[g].name))
        .collect();
    let max_column = e2.shape.cells.keys().map(|b| b.s).max().unwrap_or(0);

    let mut options_per_unknown: Vec<Vec<Option<Candidate>>> = Vec::new();
    for &g in &unknowns {
        let gen = &e2.generators()[g];
        let source = Bidegree::new(gen.s, gen.t);
        let mut opts = vec![None];
        let mut count: u128 = 1;
        for r in 2..=max_column.saturating_sub(gen.s).max(1) {
            let Some(q) = source.shifted(r) else { break };
            let dim = e2.shape.dim(q);
            if dim == 0 {
                continue;
            }
            count += (1u128 << dim.min(100)) - 1;
            if dim >= 64 || count > options.max_candidates_per_generator as u128 {
                return Err(Error::SearchBudgetExceeded {
                    generator: gen.name.clone(),
                    candidates: count,
                    budget: options.max_candidates_per_generator,
                });
            }
            for bits in 1u64..(1u64 << dim) {
                let value = F2Vec::from_indices(dim, (0..dim).filter(|i| bits >> i & 1 == 1));
                opts.push(Some(Candidate { generator: g, r, target: q, value }));
            }
        }
        options_per_unknown.push(opts);
    }

    let wanted = target.poincare_series();
    let mut solutions = Vec::new();
    let mut choice = vec![0usize; options_per_unknown.len()];
    loop {
        let picked: Vec<&Candidate> = choice
            .iter()
            .zip(&options_per_unknown)
            .filter_map(|(&i, opts)| opts[i].as_ref())
            .collect();
        if let Some(specs) = try_assignment(e2, &picked, &wanted) {
            solutions.push(specs);
        }
        // Odometer over the cartesian product.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return finish(solutions);
            }
            choice[i] += 1;
            if choice[i] < options_per_unknown[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn finish(solutions: Vec<Vec<DifferentialSpec>>) -> Result<Vec<Vec<DifferentialSpec>>> {
    if solutions.is_empty() {
        Err(Error::NoConsistentAssignment)
    } else {
        Ok(solutions)
    }
}

fn try_assignment(e2: &BigradedPage, picked: &[&Candidate], wanted: &[usize]) -> Option<Vec<DifferentialSpec>> {
    let mut by_page: BTreeMap<u32, Vec<&Candidate>> = BTreeMap::new();
    for c in picked {
        by_page.entry(c.r).or_default().push(c);
    }
    let mut page = e2.clone();
    let mut specs = Vec::new();
    for (r, cands) in by_page {
        while page.r < r {
            page = apply_differential(&page, &DifferentialSpec::zero(page.r)).ok()?;
        }
        let mut spec = DifferentialSpec::zero(r);
        for c in cands {
            let canonical = page.cells.get(&c.target).map(|cell| cell.boundaries.reduce(&c.value));
            if canonical.as_ref() != Some(&c.value) {
                return None;
            }
            let basis = page.e2_basis(c.target);
            spec.assignments.push(Assignment {
                generator: page.generators()[c.generator].name.clone(),
                value: c.value.ones().map(|i| page.format_monomial(&basis[i])).collect(),
            });
        }
        page = apply_differential(&page, &spec).ok()?;
        specs.push(spec);
    }
    let got = page.dims_by_total_degree();
    let n = got.len().min(wanted.len());
    (got[..n] == wanted[..n]).then_some(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraPresentation, GeneratorSpec, Height};
    use crate::bar_ss::koszul_e2;

    fn toy_loop() -> AlgebraPresentation {
        AlgebraPresentation::new(vec![GeneratorSpec::exterior("u2", 2), GeneratorSpec::polynomial("u10", 10)], 36)
    }

    fn trunc_poly() -> Algebra {
        Algebra::new(AlgebraPresentation::new(vec![GeneratorSpec::new("x3", 3, Height::Finite(4))], 36)).unwrap()
    }

    #[test]
    fn toy_has_unique_d3() {
        let e2 = koszul_e2(&toy_loop()).unwrap();
        let sols = infer_differentials(&e2, &["x1_2".into()], &trunc_poly(), &InferenceOptions::default()).unwrap();
        assert_eq!(sols, vec![vec![DifferentialSpec::zero(3).with("x1_10", &["x1_2^4"])]]);
    }

    #[test]
    fn missing_generator_means_no_solution() {
        let e2 = koszul_e2(&AlgebraPresentation::new(vec![GeneratorSpec::exterior("u2", 2)], 36)).unwrap();
        let r = infer_differentials(&e2, &["x1_2".into()], &trunc_poly(), &InferenceOptions::default());
        assert!(matches!(r, Err(Error::NoConsistentAssignment)));
    }

    #[test]
    fn nothing_to_infer() {
        let e2 = koszul_e2(&toy_loop()).unwrap();
        let free = Algebra::new(AlgebraPresentation::new(
            vec![GeneratorSpec::polynomial("a", 3), GeneratorSpec::exterior("b", 11)],
            36,
        ))
        .unwrap();
        let all = vec!["x1_2".to_string(), "x1_10".to_string()];
        let sols = infer_differentials(&e2, &all, &free, &InferenceOptions::default()).unwrap();
        assert_eq!(sols, vec![Vec::<DifferentialSpec>::new()]);
    }

    #[test]
    fn budget_enforced() {
        let e2 = koszul_e2(&toy_loop()).unwrap();
        let tiny = InferenceOptions { max_candidates_per_generator: 1 };
        let r = infer_differentials(&e2, &["x1_2".into()], &trunc_poly(), &tiny);
        assert!(matches!(r, Err(Error::SearchBudgetExceeded { .. })));
    }
}
