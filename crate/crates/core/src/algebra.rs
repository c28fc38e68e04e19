//! Finitely presented graded-commutative algebras over GF(2) with a monomial basis.
//!
//! An algebra is a tensor product of truncated polynomial algebras
//! `F2[g]/(g^h)` (exterior when `h = 2`), cut off above a total degree cap.
//! In characteristic two there are no signs, so the algebra is commutative on
//! the nose and every product of monomials is a monomial or zero.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::F2Vec;

/// Nilpotency height of a generator: `g^h = 0` and `g^(h-1) != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Height {
    Finite(u32),
    Unbounded(UnboundedTag),
}

/// Serializes as the string `"unbounded"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnboundedTag {
    #[serde(rename = "unbounded")]
    Unbounded,
}

impl Height {
    pub const UNBOUNDED: Height = Height::Unbounded(UnboundedTag::Unbounded);
    pub const EXTERIOR: Height = Height::Finite(2);

    pub fn finite(self) -> Option<u32> {
        match self {
            Height::Finite(h) => Some(h),
            Height::Unbounded(_) => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        matches!(self, Height::Unbounded(_))
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Unbounded(_) => f.write_str("unbounded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub height: Height,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, degree: u32, height: Height) -> Self {
        Self { name: name.into(), degree, height }
    }

    pub fn exterior(name: impl Into<String>, degree: u32) -> Self {
        Self::new(name, degree, Height::EXTERIOR)
    }

    pub fn polynomial(name: impl Into<String>, degree: u32) -> Self {
        Self::new(name, degree, Height::UNBOUNDED)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraPresentation {
    pub generators: Vec<GeneratorSpec>,
    pub degree_cap: u32,
}

impl AlgebraPresentation {
    pub fn new(generators: Vec<GeneratorSpec>, degree_cap: u32) -> Self {
        Self { generators, degree_cap }
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.generators {
            if g.name.is_empty() || g.name.contains(['*', '^', ' ', '+']) || g.name == "1" {
                return Err(Error::InvalidGeneratorName(g.name.clone()));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            if g.degree < 1 {
                return Err(Error::InvalidDegree { name: g.name.clone(), degree: g.degree });
            }
            if let Height::Finite(h) = g.height {
                if h < 2 {
                    return Err(Error::InvalidHeight { name: g.name.clone(), height: h });
                }
            }
        }
        Ok(())
    }
}

/// Exponent vector indexed by generator position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n_generators: usize) -> Self {
        Self(vec![0; n_generators])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, generator: usize) -> u32 {
        self.0[generator]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of generator factors, counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn with_exponent(&self, generator: usize, exponent: u32) -> Self {
        let mut m = self.clone();
        m.0[generator] = exponent;
        m
    }

    /// Exponent-wise sum, without any truncation.
    pub fn raw_product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Whether `other` divides `self`; returns the quotient.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

struct AlgebraData {
    presentation: AlgebraPresentation,
    /// Largest admissible exponent per generator after degree capping.
    max_exponent: Vec<u32>,
    basis: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
}

/// An immutable, cheaply clonable handle to an enumerated algebra.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("generators", &self.0.presentation.generators)
            .field("degree_cap", &self.0.presentation.degree_cap)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.presentation == other.0.presentation
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(presentation: AlgebraPresentation) -> Result<Self> {
        presentation.validate()?;
        let cap = presentation.degree_cap;
        let max_exponent: Vec<u32> = presentation
            .generators
            .iter()
            .map(|g| {
                let by_degree = cap / g.degree;
                match g.height {
                    Height::Finite(h) => (h - 1).min(by_degree),
                    Height::Unbounded(_) => by_degree,
                }
            })
            .collect();

        let mut basis = vec![Vec::new(); cap as usize + 1];
        let degrees: Vec<u32> = presentation.generators.iter().map(|g| g.degree).collect();
        let mut current = vec![0u32; degrees.len()];
        enumerate(&degrees, &max_exponent, cap, 0, 0, &mut current, &mut basis);
        let mut index = HashMap::new();
        for per_degree in &mut basis {
            per_degree.sort();
            for (i, m) in per_degree.iter().enumerate() {
                index.insert(m.clone(), i);
            }
        }
        Ok(Self(Arc::new(AlgebraData { presentation, max_exponent, basis, index })))
    }

    /// The ground field `F2` with the given cap.
    pub fn unit(degree_cap: u32) -> Self {
        Self::new(AlgebraPresentation::new(Vec::new(), degree_cap)).expect("empty presentation is valid")
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.0.presentation
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.0.presentation.generators
    }

    pub fn degree_cap(&self) -> u32 {
        self.0.presentation.degree_cap
    }

    pub fn n_generators(&self) -> usize {
        self.0.presentation.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| g.name == name)
    }

    pub fn max_exponent(&self, generator: usize) -> u32 {
        self.0.max_exponent[generator]
    }

    pub fn basis(&self, degree: u32) -> Result<&[Monomial]> {
        self.0
            .basis
            .get(degree as usize)
            .map(Vec::as_slice)
            .ok_or(Error::DegreeOutOfRange { degree, cap: self.degree_cap() })
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.0.basis.get(degree as usize).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.0.basis.iter().map(Vec::len).sum()
    }

    /// Dimension in each degree `0..=degree_cap`.
    pub fn poincare_series(&self) -> Vec<usize> {
        self.0.basis.iter().map(Vec::len).collect()
    }

    /// Iterates over the whole basis in degree order.
    pub fn all_monomials(&self) -> impl Iterator<Item = (u32, &Monomial)> {
        self.0
            .basis
            .iter()
            .enumerate()
            .flat_map(|(d, ms)| ms.iter().map(move |m| (d as u32, m)))
    }

    /// Position of a basis monomial inside `basis(degree(m))`.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.0.index.get(m).copied()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.exponents()
            .iter()
            .zip(self.generators())
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Whether `m` is a nonzero basis monomial (heights and cap respected).
    pub fn is_basis_monomial(&self, m: &Monomial) -> bool {
        m.exponents().len() == self.n_generators() && self.0.index.contains_key(m)
    }

    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let p = a.raw_product(b);
        self.is_basis_monomial(&p).then_some(p)
    }

    /// Longest nonzero product of positive-degree classes, counted in factors.
    ///
    /// Products of sums expand into sums of monomial products, so a longest
    /// nonzero product can always be taken among monomials, and a nonzero
    /// monomial splits into `factor_count` generator factors.
    pub fn cup_length(&self) -> u32 {
        self.all_monomials().map(|(_, m)| m.factor_count()).max().unwrap_or(0)
    }

    pub fn one(&self) -> Element {
        Element::from_terms(self.clone(), [Monomial::one(self.n_generators())])
    }

    pub fn zero(&self) -> Element {
        Element::from_terms(self.clone(), [])
    }

    pub fn generator(&self, name: &str) -> Result<Element> {
        let i = self.generator_index(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let m = Monomial::one(self.n_generators()).with_exponent(i, 1);
        Ok(self.monomial_element(m))
    }

    /// The element given by a single monomial; zero if it is truncated away.
    pub fn monomial_element(&self, m: Monomial) -> Element {
        if self.is_basis_monomial(&m) {
            Element::from_terms(self.clone(), [m])
        } else {
            self.zero()
        }
    }

    /// Parses `"x3^2*x5"` style monomials; `"1"` is the unit.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; self.n_generators()];
        if text == "1" {
            return Ok(Monomial(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e.trim().parse().map_err(|_| Error::ParseMonomial(text.to_string()))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            let i = self
                .generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            exps[i] += exp;
        }
        Ok(Monomial(exps))
    }

    /// Parses a sum of monomial strings. Monomials that are truncated away
    /// contribute zero; repeated monomials cancel.
    pub fn parse_element<S: AsRef<str>>(&self, terms: &[S]) -> Result<Element> {
        let mut e = self.zero();
        for t in terms {
            let m = self.parse_monomial(t.as_ref())?;
            e = e.add(&self.monomial_element(m))?;
        }
        Ok(e)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(self.generators().iter().map(|g| g.name.as_str()), m)
    }

    /// Coordinate vector of a homogeneous element in `basis(degree)`.
    pub fn to_vector(&self, e: &Element, degree: u32) -> Result<F2Vec> {
        self.check_same(e.algebra())?;
        let basis = self.basis(degree)?;
        let mut v = F2Vec::zeros(basis.len());
        for m in e.terms() {
            if self.monomial_degree(m) != degree {
                return Err(Error::Inhomogeneous(e.to_string()));
            }
            v.flip(self.index_of(m).expect("terms are basis monomials"));
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &F2Vec, degree: u32) -> Result<Element> {
        let basis = self.basis(degree)?;
        Ok(Element::from_terms(self.clone(), v.ones().map(|i| basis[i].clone())))
    }

    pub(crate) fn check_same(&self, other: &Algebra) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }
}

pub(crate) fn format_monomial<'a>(names: impl IntoIterator<Item = &'a str>, m: &Monomial) -> String {
    let parts: Vec<String> = names
        .into_iter()
        .zip(m.exponents())
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn enumerate(
    degrees: &[u32],
    max_exponent: &[u32],
    cap: u32,
    i: usize,
    degree: u32,
    current: &mut Vec<u32>,
    out: &mut [Vec<Monomial>],
) {
    if i == degrees.len() {
        out[degree as usize].push(Monomial(current.clone()));
        return;
    }
    for e in 0..=max_exponent[i] {
        let d = degree + e * degrees[i];
        if d > cap {
            break;
        }
        current[i] = e;
        enumerate(degrees, max_exponent, cap, i + 1, d, current, out);
    }
    current[i] = 0;
}

/// An F2-linear combination of basis monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub(crate) fn from_terms(algebra: Algebra, terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut set = BTreeSet::new();
        for m in terms {
            debug_assert!(algebra.is_basis_monomial(&m));
            if !set.insert(m.clone()) {
                set.remove(&m);
            }
        }
        Self { algebra, terms: set }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.iter().map(|m| self.algebra.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.algebra.check_same(&other.algebra)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(Element { algebra: self.algebra.clone(), terms })
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.algebra.check_same(&other.algebra)?;
        let mut terms = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                if let Some(p) = self.algebra.multiply_monomials(a, b) {
                    if !terms.insert(p.clone()) {
                        terms.remove(&p);
                    }
                }
            }
        }
        Ok(Element { algebra: self.algebra.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> Result<Element> {
        let mut acc = self.algebra.one();
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Monomial strings in basis order, as written to JSON.
    pub fn to_strings(&self) -> Vec<String> {
        self.terms.iter().map(|m| self.algebra.format_monomial(m)).collect()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.to_strings().join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}
