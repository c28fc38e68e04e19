//! Category weight from the E-infinity filtration, and Steenrod obstructions
//! to a module retraction of `H*(P^m ΩX) -> H*(X)`, which bound `Mwgt` below.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{Element, Monomial};
use crate::bar_ss::{Bucket, PmModuleReport};
use crate::error::{Error, Result};
use crate::linalg::{F2Vec, Subspace};
use crate::space::Space;

/// `wgt(u)`: the column of the E-infinity class that represents `u`.
///
/// Terms are grouped by the filtration of their representative monomials;
/// the lowest group must be a nonzero class, otherwise the weight depends on
/// extensions this engine does not resolve.
pub fn compute_wgt(space: &Space, u: &Element) -> Result<u32> {
    if u.is_zero() || u.degree() == Some(0) {
        return Err(Error::WeightUndefined(u.to_string()));
    }
    if !u.is_homogeneous() {
        return Err(Error::Inhomogeneous(u.to_string()));
    }
    let e_inf = space.e_infinity();
    let mut groups: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for y in u.terms() {
        let rep = space.representative(y);
        groups.entry(e_inf.bidegree_of(&rep).s).or_default().push(rep);
    }
    let (&s, reps) = groups.iter().next().expect("nonzero element");
    let mut sum: Option<(crate::bar_ss::Bidegree, F2Vec)> = None;
    for rep in reps {
        let Some((b, v)) = e_inf.monomial_vector(rep) else {
            return Err(Error::UnresolvedWeight(u.to_string()));
        };
        match &mut sum {
            Some((_, acc)) => acc.add_assign(&v),
            None => sum = Some((b, v)),
        }
    }
    match sum {
        Some((b, v)) if e_inf.is_nonzero_class(b, &v) => Ok(s),
        _ => Err(Error::UnresolvedWeight(u.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEntry {
    pub class: String,
    pub degree: u32,
    pub weight: u32,
}

/// Weight of every positive-degree basis monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightAssignment {
    pub entries: Vec<WeightEntry>,
}

impl WeightAssignment {
    pub fn max(&self) -> u32 {
        self.entries.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn get(&self, class: &str) -> Option<u32> {
        self.entries.iter().find(|e| e.class == class).map(|e| e.weight)
    }
}

pub fn weight_assignment(space: &Space) -> Result<WeightAssignment> {
    let a = space.cohomology();
    let mut entries = Vec::new();
    for (degree, y) in a.all_monomials() {
        if degree == 0 {
            continue;
        }
        let weight = compute_wgt(space, &a.monomial_element(y.clone()))?;
        entries.push(WeightEntry { class: a.format_monomial(y), degree, weight });
    }
    Ok(WeightAssignment { entries })
}

/// `wgt(X)`: the largest weight of a positive-degree class, 0 for a point.
pub fn compute_wgt_space(space: &Space) -> Result<u32> {
    Ok(weight_assignment(space)?.max())
}

/// A class `z` of the `P^m` model whose `Sq^k` is the restriction of a class
/// `u` of `X` that cannot be `Sq^k` of anything, because `H^{|z|}(X) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub m: u32,
    pub k: u32,
    pub z: String,
    pub z_representative: String,
    pub z_degree: u32,
    pub u: String,
    pub u_degree: u32,
    /// Checked facts, one per line, that make up the contradiction.
    pub facts: Vec<String>,
}

/// `Sq^k` on the associated graded of `H*(P^m ΩX)`, restricted to the
/// classes the report labels.
pub struct PmModel<'a> {
    space: &'a Space,
    pub report: PmModuleReport,
}

impl<'a> PmModel<'a> {
    pub fn new(space: &'a Space, m: u32) -> Result<Self> {
        Ok(Self { space, report: space.pm_report(m)? })
    }

    fn restrict(&self, extra: Option<usize>, e: &Element, out: &mut BTreeSet<usize>) {
        for t in e.terms() {
            if let Some(i) = self.report.find(extra, t) {
                if !out.remove(&i) {
                    out.insert(i);
                }
            }
        }
    }

    /// Model classes making up `Sq^k` of class `z`; `None` on residual classes,
    /// whose module structure is not determined.
    pub fn sq(&self, k: u32, z: usize) -> Result<Option<BTreeSet<usize>>> {
        let class = &self.report.classes[z];
        let a = self.space.cohomology();
        let steenrod = self.space.steenrod();
        let Some(y) = &class.cohomology_monomial else { return Ok(None) };
        let y = a.monomial_element(y.clone());
        let mut out = BTreeSet::new();
        match (class.bucket, class.extra) {
            (Bucket::Truncated, _) => self.restrict(None, &steenrod.apply_sq(k, &y)?, &mut out),
            (Bucket::PartialProduct, Some(g)) => {
                // Cartan: Sq^k(x y) = x Sq^k y + Σ_{i>0} Sq^i x · Sq^(k-i) y.
                self.restrict(Some(g), &steenrod.apply_sq(k, &y)?, &mut out);
                for i in 1..=k {
                    let sx = self.space.extra_sq(g, i);
                    if sx.is_zero() {
                        continue;
                    }
                    let term = sx.multiply(&steenrod.apply_sq(k - i, &y)?)?;
                    self.restrict(None, &term, &mut out);
                }
            }
            _ => return Ok(None),
        }
        Ok(Some(out))
    }

    /// The first witness in `(k, class)` order, if any.
    pub fn find_obstruction(&self) -> Result<Option<ObstructionWitness>> {
        let a = self.space.cohomology();
        let m = self.report.m;
        for k in 1..=self.space.max_generator_degree() {
            for (zi, z) in self.report.classes.iter().enumerate() {
                if z.bucket == Bucket::Residual || a.dim(z.degree) != 0 {
                    continue;
                }
                let u_degree = z.degree + k;
                if u_degree > a.degree_cap() {
                    continue;
                }
                let Some(value) = self.sq(k, zi)? else { continue };
                if value.is_empty() || value.iter().any(|&i| self.report.classes[i].bucket != Bucket::Truncated) {
                    continue;
                }
                // Any class in the target degree not coming from X could absorb
                // an extension correction, so the argument needs none there.
                if self.report.classes_in_degree(u_degree).any(|(_, c)| c.bucket != Bucket::Truncated) {
                    continue;
                }
                let u = Element::from_terms(
                    a.clone(),
                    value.iter().map(|&i| self.report.classes[i].cohomology_monomial.clone().expect("bucket (i)")),
                );
                let image = self.space.steenrod().image_of_sq(k, u_degree)?;
                let vectors: Vec<F2Vec> =
                    image.iter().map(|e| a.to_vector(e, u_degree)).collect::<Result<_>>()?;
                let span = Subspace::spanned_by(a.dim(u_degree), &vectors);
                if span.contains(&a.to_vector(&u, u_degree)?) {
                    continue;
                }
                let facts = vec![
                    format!("H^{}(X) = 0", z.degree),
                    format!("Sq^{k}({}) = {u} in the P^{m} model", z.label),
                    format!("every class of the P^{m} model in degree {u_degree} restricts from X"),
                    format!("Sq^{k}(H^{}(X)) has dimension {} and does not contain {u}", z.degree, span.dim()),
                    format!("a retraction r would give {u} = r(Sq^{k} z) = Sq^{k} r(z) with r(z) in H^{}(X) = 0", z.degree),
                ];
                return Ok(Some(ObstructionWitness {
                    m,
                    k,
                    z: z.label.clone(),
                    z_representative: z.representative.clone(),
                    z_degree: z.degree,
                    u: u.to_string(),
                    u_degree,
                    facts,
                }));
            }
        }
        Ok(None)
    }
}

pub fn find_mwgt_obstruction(space: &Space, m: u32) -> Result<Option<ObstructionWitness>> {
    PmModel::new(space, m)?.find_obstruction()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwgtBound {
    /// `1 + max m` with a witness, or 0.
    pub value: u32,
    pub searched_through: u32,
    pub witnesses: Vec<ObstructionWitness>,
}

/// A witness at `m` rules out a retraction at every `m' <= m`, so the bound
/// is one more than the largest obstructed height.
pub fn mwgt_lower_bound(space: &Space, m_max: u32) -> Result<MwgtBound> {
    let mut witnesses = Vec::new();
    for m in 0..=m_max {
        if let Some(w) = find_mwgt_obstruction(space, m)? {
            witnesses.push(w);
        }
    }
    let value = witnesses.iter().map(|w| w.m + 1).max().unwrap_or(0);
    Ok(MwgtBound { value, searched_through: m_max, witnesses })
}
