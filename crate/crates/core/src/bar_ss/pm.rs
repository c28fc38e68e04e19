//! Labels the classes of a truncated E-infinity page by module summand.
//!
//! The cohomology of `P^m` splits, as a module and up to extension, into the
//! classes of `A` with at most `m` factors, partial products of an extra
//! class (a column-1 class that only extends over low projective spaces)
//! with monomials of `A`, and a residual summand that vanishes on `P^(m-1)`.
//! Everything here is about the associated graded.

use std::collections::HashMap;

use serde::Serialize;

use super::{BigradedPage, Bidegree};
use crate::algebra::{Algebra, Monomial};
use crate::error::{Error, Result};

/// A column-1 class that does not survive to E-infinity but extends over
/// `P^extension_height`, e.g. `x11` from `x1_10` for Spin(9).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraClass {
    pub name: String,
    pub degree: u32,
    pub extension_height: u32,
}

/// Translates E2 monomials into cohomology labels.
#[derive(Clone, Debug)]
pub struct ClassLabeler {
    pub cohomology: Algebra,
    /// Per bigraded generator: the cohomology generator it suspends to.
    pub suspension: Vec<Option<usize>>,
    /// Per bigraded generator: its extra class, if any.
    pub extras: Vec<Option<ExtraClass>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Bucket {
    /// A monomial of `A` with at most `m` factors.
    #[serde(rename = "A[m]")]
    Truncated,
    /// An extra class times a monomial of `A` with `m - h..=m - 1` factors.
    #[serde(rename = "partial_product")]
    PartialProduct,
    /// Candidate for the residual summand `S_m`.
    #[serde(rename = "S_m_candidate")]
    Residual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleClass {
    pub degree: u32,
    pub s: u32,
    pub t: u32,
    pub representative: String,
    pub bucket: Bucket,
    pub label: String,
    /// Number of `A`-factors (excluding the extra class).
    pub factors: u32,
    #[serde(skip)]
    pub cohomology_monomial: Option<Monomial>,
    /// Bigraded generator index of the extra factor, for partial products.
    #[serde(skip)]
    pub extra: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PmModuleReport {
    pub m: u32,
    pub classes: Vec<ModuleClass>,
    pub truncated: usize,
    pub partial_products: usize,
    pub residual: usize,
    #[serde(skip)]
    lookup: HashMap<(Option<usize>, Monomial), usize>,
}

impl PmModuleReport {
    /// Index of the class labelled by `extra · y` (or `y` when `extra` is None).
    pub fn find(&self, extra: Option<usize>, y: &Monomial) -> Option<usize> {
        self.lookup.get(&(extra, y.clone())).copied()
    }

    pub fn classes_in_degree(&self, degree: u32) -> impl Iterator<Item = (usize, &ModuleClass)> {
        self.classes.iter().enumerate().filter(move |(_, c)| c.degree == degree)
    }

    pub fn by_label(&self, label: &str) -> Option<&ModuleClass> {
        self.classes.iter().find(|c| c.label == label)
    }
}

/// Classifies every class of `page` (the E-infinity page truncated at `m`).
pub fn pm_module_report(page: &BigradedPage, m: u32, labeler: &ClassLabeler) -> Result<PmModuleReport> {
    let mut classes = Vec::new();
    for b in page.bidegrees() {
        for rep in page.representatives(b) {
            let text = page.format_vector(b, rep);
            let Some(mono) = page.as_monomial(b, rep) else {
                return Err(Error::UnclassifiedClass(text));
            };
            classes.push(classify(b, mono, text, m, labeler)?);
        }
    }
    classes.sort_by(|a, b| (a.degree, a.s, a.t, &a.representative).cmp(&(b.degree, b.s, b.t, &b.representative)));
    let mut lookup = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        if let (Some(y), false) = (&c.cohomology_monomial, c.bucket == Bucket::Residual) {
            lookup.insert((c.extra, y.clone()), i);
        }
    }
    let count = |k| classes.iter().filter(|c| c.bucket == k).count();
    Ok(PmModuleReport {
        m,
        truncated: count(Bucket::Truncated),
        partial_products: count(Bucket::PartialProduct),
        residual: count(Bucket::Residual),
        classes,
        lookup,
    })
}

fn classify(b: Bidegree, mono: &Monomial, representative: String, m: u32, labeler: &ClassLabeler) -> Result<ModuleClass> {
    let a = &labeler.cohomology;
    let mut y = vec![0u32; a.n_generators()];
    let mut extra: Option<usize> = None;
    let mut extra_count = 0;
    let mut foreign = false;
    for (g, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if let Some(c) = labeler.suspension[g] {
            y[c] += e;
        } else if labeler.extras[g].is_some() {
            extra = Some(g);
            extra_count += e;
        } else {
            foreign = true;
        }
    }
    let y = Monomial::from_exponents(y);
    let in_a = a.is_basis_monomial(&y);
    let f = y.factor_count();
    let residual = |representative: String| ModuleClass {
        degree: b.total(),
        s: b.s,
        t: b.t,
        label: representative.clone(),
        representative,
        bucket: Bucket::Residual,
        factors: f,
        cohomology_monomial: None,
        extra: None,
    };
    if foreign || extra_count > 1 || !in_a {
        return Ok(residual(representative));
    }
    let ylabel = a.format_monomial(&y);
    match extra {
        None if f <= m => Ok(ModuleClass {
            degree: b.total(),
            s: b.s,
            t: b.t,
            representative,
            bucket: Bucket::Truncated,
            label: ylabel,
            factors: f,
            cohomology_monomial: Some(y),
            extra: None,
        }),
        Some(g) => {
            let x = labeler.extras[g].as_ref().expect("checked above");
            let lowest = m.saturating_sub(x.extension_height);
            if f + 1 > m || f < lowest {
                return Err(Error::UnclassifiedClass(representative));
            }
            let label = if y.is_one() { x.name.clone() } else { format!("{}*{}", x.name, ylabel) };
            Ok(ModuleClass {
                degree: b.total(),
                s: b.s,
                t: b.t,
                representative,
                bucket: Bucket::PartialProduct,
                label,
                factors: f,
                cohomology_monomial: Some(y),
                extra: Some(g),
            })
        }
        None => Err(Error::UnclassifiedClass(representative)),
    }
}
