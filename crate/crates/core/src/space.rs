//! A space with everything computed from its presentation: cohomology,
//! Steenrod action, the bar spectral sequence with inferred differentials,
//! and the suspension classes that label E-infinity.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element, Monomial};
use crate::bar_ss::{
    infer_differentials, koszul_e2, page_at, pm_module_report, run_to_e_infinity, truncate, BigradedPage,
    ClassLabeler, DifferentialSpec, ExtraClass, InferenceOptions, PageJson, PmModuleReport,
};
use crate::error::{Error, Result};
use crate::fixtures::{validate, SpacePresentation};
use crate::steenrod::SteenrodAction;

#[derive(Clone, Debug)]
pub struct Space {
    presentation: SpacePresentation,
    cohomology: Algebra,
    steenrod: SteenrodAction,
    e2: BigradedPage,
    differentials: Vec<DifferentialSpec>,
    e_infinity: BigradedPage,
    labeler: ClassLabeler,
    /// Per cohomology generator, its bigraded suspension class.
    suspension: Vec<usize>,
    /// Per bigraded generator carrying an extra class: `Sq^k` values in cohomology.
    extra_sq: BTreeMap<usize, BTreeMap<u32, Element>>,
}

impl Space {
    pub fn builtin(name: &str) -> Result<Self> {
        Self::build(crate::fixtures::builtin(name)?, &InferenceOptions::default())
    }

    /// Validates the presentation, infers the differentials (which must be
    /// unique) and runs the spectral sequence.
    pub fn build(presentation: SpacePresentation, options: &InferenceOptions) -> Result<Self> {
        let report = validate(&presentation);
        if !report.passed() {
            return Err(Error::Validation(report.failures.join("\n")));
        }
        let cohomology = Algebra::new(presentation.cohomology_presentation())?;
        let steenrod = presentation.steenrod_action(&cohomology)?;
        let e2 = koszul_e2(&presentation.loop_presentation())?;
        let mut solutions = infer_differentials(&e2, &presentation.permanent_cycles, &cohomology, options)?;
        if solutions.len() > 1 {
            return Err(Error::AmbiguousDifferentials(solutions.len()));
        }
        let differentials = solutions.pop().expect("at least one solution");
        let e_infinity = run_to_e_infinity(&e2, &differentials)?;

        let suspension = suspension_classes(&presentation, &cohomology, &e_infinity)?;
        let mut by_bigraded = vec![None; e2.generators().len()];
        for (c, &g) in suspension.iter().enumerate() {
            by_bigraded[g] = Some(c);
        }
        let mut extras = vec![None; e2.generators().len()];
        let mut extra_sq = BTreeMap::new();
        for x in &presentation.extra_generators {
            let g = e2.generator_index(&x.koszul_class).expect("validated");
            extras[g] = Some(ExtraClass { name: x.name.clone(), degree: x.degree, extension_height: x.extension_height });
            let mut table = BTreeMap::new();
            for s in &x.steenrod {
                table.insert(s.k, cohomology.parse_element(&s.value)?);
            }
            extra_sq.insert(g, table);
        }
        let labeler = ClassLabeler { cohomology: cohomology.clone(), suspension: by_bigraded, extras };
        Ok(Self { presentation, cohomology, steenrod, e2, differentials, e_infinity, labeler, suspension, extra_sq })
    }

    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn presentation(&self) -> &SpacePresentation {
        &self.presentation
    }

    pub fn cohomology(&self) -> &Algebra {
        &self.cohomology
    }

    pub fn steenrod(&self) -> &SteenrodAction {
        &self.steenrod
    }

    pub fn e2(&self) -> &BigradedPage {
        &self.e2
    }

    /// Nonzero differentials, one spec per page.
    pub fn differentials(&self) -> &[DifferentialSpec] {
        &self.differentials
    }

    pub fn e_infinity(&self) -> &BigradedPage {
        &self.e_infinity
    }

    pub fn labeler(&self) -> &ClassLabeler {
        &self.labeler
    }

    /// Bigraded generator whose class represents cohomology generator `c`.
    pub fn suspension_class(&self, c: usize) -> usize {
        self.suspension[c]
    }

    /// The E2 monomial obtained by replacing each cohomology generator with
    /// its suspension class.
    pub fn representative(&self, y: &Monomial) -> Monomial {
        let mut exps = vec![0; self.e2.generators().len()];
        for (c, &e) in y.exponents().iter().enumerate() {
            exps[self.suspension[c]] += e;
        }
        Monomial::from_exponents(exps)
    }

    /// Bigraded generators that carry an extra class.
    pub fn extra_generators(&self) -> impl Iterator<Item = (usize, &ExtraClass)> {
        self.labeler.extras.iter().enumerate().filter_map(|(g, x)| x.as_ref().map(|x| (g, x)))
    }

    /// `Sq^k` of the extra class on generator `g`, for `0 < k`, as an element
    /// of the cohomology of the space. The square of an extra class is zero.
    pub fn extra_sq(&self, g: usize, k: u32) -> Element {
        self.extra_sq
            .get(&g)
            .and_then(|t| t.get(&k))
            .cloned()
            .unwrap_or_else(|| self.cohomology.zero())
    }

    /// Largest degree among cohomology and extra generators.
    pub fn max_generator_degree(&self) -> u32 {
        let c = self.cohomology.generators().iter().map(|g| g.degree);
        let x = self.extra_generators().map(|(_, x)| x.degree);
        c.chain(x).max().unwrap_or(0)
    }

    /// E-infinity of the spectral sequence truncated to columns `s <= m`.
    pub fn truncated(&self, m: u32) -> Result<BigradedPage> {
        truncate(&self.e2, m, &self.differentials)
    }

    pub fn pm_report(&self, m: u32) -> Result<PmModuleReport> {
        pm_module_report(&self.truncated(m)?, m, &self.labeler)
    }

    /// The page `E_r`, optionally truncated to columns `s <= m`.
    pub fn page(&self, r: u32, truncate_at: Option<u32>) -> Result<BigradedPage> {
        if r < 2 {
            return Err(Error::InvalidPage(r));
        }
        let e2 = match truncate_at {
            Some(m) => self.e2.e2_with_column_cap(Some(m))?,
            None => self.e2.clone(),
        };
        page_at(&e2, &self.differentials, r)
    }

    pub fn dump_page(&self, r: u32, truncate_at: Option<u32>) -> Result<PageJson> {
        Ok(self.page(r, truncate_at)?.to_json())
    }
}

/// Pairs each cohomology generator with a column-1 permanent cycle of the
/// same total degree that survives to E-infinity.
fn suspension_classes(sp: &SpacePresentation, a: &Algebra, e_inf: &BigradedPage) -> Result<Vec<usize>> {
    let mut taken = vec![false; e_inf.generators().len()];
    let mut out = Vec::with_capacity(a.n_generators());
    for (c, gen) in a.generators().iter().enumerate() {
        let found = e_inf.generators().iter().enumerate().find(|&(g, bg)| {
            !taken[g]
                && bg.s == 1
                && bg.total_degree() == gen.degree
                && sp.permanent_cycles.contains(&bg.name)
                && {
                    let unit = Monomial::one(e_inf.generators().len()).with_exponent(g, 1);
                    e_inf.monomial_vector(&unit).is_some_and(|(b, v)| e_inf.is_nonzero_class(b, &v))
                }
        });
        let Some((g, _)) = found else {
            return Err(Error::NoSuspensionClass(a.generators()[c].name.clone()));
        };
        taken[g] = true;
        out.push(g);
    }
    Ok(out)
}
