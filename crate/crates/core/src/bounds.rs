//! Bound arithmetic and the ledger that brackets `cat X`.
//!
//! Quantities sit on the ladder `cuplen <= wgt <= Mwgt <= cat <= Cat <= cat + 1`;
//! lower bounds flow up it, upper bounds flow down.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quantity {
    #[serde(rename = "cuplen")]
    CupLength,
    #[serde(rename = "wgt")]
    Wgt,
    #[serde(rename = "Mwgt")]
    Mwgt,
    #[serde(rename = "cat")]
    Cat,
    #[serde(rename = "Cat")]
    StrongCat,
}

impl Quantity {
    pub const LADDER: [Quantity; 5] = [Quantity::CupLength, Quantity::Wgt, Quantity::Mwgt, Quantity::Cat, Quantity::StrongCat];

    fn rung(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Quantity::CupLength => "cuplen",
            Quantity::Wgt => "wgt",
            Quantity::Mwgt => "Mwgt",
            Quantity::Cat => "cat",
            Quantity::StrongCat => "Cat",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub quantity: Quantity,
    pub kind: BoundKind,
    pub value: u32,
    pub provenance: String,
}

impl LedgerEntry {
    pub fn new(quantity: Quantity, kind: BoundKind, value: u32, provenance: impl Into<String>) -> Self {
        Self { quantity, kind, value, provenance: provenance.into() }
    }

    fn is_lower(&self) -> bool {
        matches!(self.kind, BoundKind::Lower | BoundKind::Exact)
    }

    fn is_upper(&self) -> bool {
        matches!(self.kind, BoundKind::Upper | BoundKind::Exact)
    }
}

impl fmt::Display for LedgerEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            BoundKind::Lower => ">=",
            BoundKind::Upper => "<=",
            BoundKind::Exact => "=",
        };
        write!(f, "{} {op} {} ({})", self.quantity, self.value, self.provenance)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsLedger {
    pub entries: Vec<LedgerEntry>,
}

impl BoundsLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: LedgerEntry) -> &mut Self {
        self.entries.push(entry);
        self
    }
}

/// A bound as declared in a fixture, before the arithmetic is done.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundInput {
    /// Principal `G`-bundle over a double suspension, `G` with a cone
    /// decomposition of length `cone_length` and characteristic map
    /// compressing into stage `compression_index`. Hypotheses are attested.
    PrincipalBundle { cone_length: u32, compression_index: u32, provenance: String },
    /// `Cat E <= 2 Cat G + 1` for a principal `G`-bundle over a double suspension.
    StrongCategoryFallback { fibre_strong_category: u32, provenance: String },
    /// `cat E + 1 <= (cat F + 1)(cat B + 1)`.
    GaneaProduct { cat_fibre: u32, cat_base: u32, provenance: String },
    Direct { quantity: Quantity, kind: BoundKind, value: u32, provenance: String },
}

impl BoundInput {
    pub fn entry(&self) -> Result<LedgerEntry> {
        Ok(match self {
            BoundInput::PrincipalBundle { cone_length, compression_index, provenance } => LedgerEntry::new(
                Quantity::Cat,
                BoundKind::Upper,
                principal_bundle_bound(*cone_length, *compression_index)?,
                format!("max(m+n, m+2) with m = {cone_length}, n = {compression_index}; {provenance}"),
            ),
            BoundInput::StrongCategoryFallback { fibre_strong_category, provenance } => LedgerEntry::new(
                Quantity::StrongCat,
                BoundKind::Upper,
                strong_category_fallback(*fibre_strong_category),
                format!("2 Cat G + 1 with Cat G = {fibre_strong_category}; {provenance}"),
            ),
            BoundInput::GaneaProduct { cat_fibre, cat_base, provenance } => LedgerEntry::new(
                Quantity::Cat,
                BoundKind::Upper,
                ganea_product_bound(*cat_fibre, *cat_base),
                format!("(cat F + 1)(cat B + 1) - 1 with cat F = {cat_fibre}, cat B = {cat_base}; {provenance}"),
            ),
            BoundInput::Direct { quantity, kind, value, provenance } => {
                LedgerEntry::new(*quantity, *kind, *value, provenance.clone())
            }
        })
    }
}

pub fn ganea_product_bound(cat_fibre: u32, cat_base: u32) -> u32 {
    (cat_fibre + 1) * (cat_base + 1) - 1
}

/// `cat E <= max(m + n, m + 2)`, valid for `n >= 1` under attested hypotheses.
pub fn principal_bundle_bound(m: u32, n: u32) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidFibreIndex(n));
    }
    Ok((m + n).max(m + 2))
}

pub fn strong_category_fallback(cat_g: u32) -> u32 {
    2 * cat_g + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub quantity: Quantity,
    pub lower: u32,
    pub upper: Option<u32>,
    /// Ledger entry the lower bound descends from.
    pub lower_from: Option<usize>,
    pub upper_from: Option<usize>,
}

/// The certified range for `cat X`, with every rung of the ladder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub lower: u32,
    pub upper: Option<u32>,
    pub ladder: Vec<Interval>,
}

impl Bracket {
    pub fn is_closed(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(hi) => write!(f, "[{}, {hi}]", self.lower),
            None => write!(f, "[{}, ∞)", self.lower),
        }
    }
}

type Bound = Option<(u32, usize)>;

fn raise(slot: &mut Bound, candidate: Bound) -> bool {
    match (candidate, *slot) {
        (Some(c), None) => {
            *slot = Some(c);
            true
        }
        (Some(c), Some(s)) if c.0 > s.0 => {
            *slot = Some(c);
            true
        }
        _ => false,
    }
}

fn lower(slot: &mut Bound, candidate: Bound) -> bool {
    match (candidate, *slot) {
        (Some(c), None) => {
            *slot = Some(c);
            true
        }
        (Some(c), Some(s)) if c.0 < s.0 => {
            *slot = Some(c);
            true
        }
        _ => false,
    }
}

/// Propagates the ledger along the ladder and returns the range for `cat`.
///
/// With no upper entry reachable, the upper end is open.
pub fn assemble_bracket(ledger: &BoundsLedger) -> Result<Bracket> {
    let mut lo: [Bound; 5] = [None; 5];
    let mut hi: [Bound; 5] = [None; 5];
    for (i, e) in ledger.entries.iter().enumerate() {
        let q = e.quantity.rung();
        if e.is_lower() {
            raise(&mut lo[q], Some((e.value, i)));
        }
        if e.is_upper() {
            lower(&mut hi[q], Some((e.value, i)));
        }
    }
    let (cat, strong) = (Quantity::Cat.rung(), Quantity::StrongCat.rung());
    loop {
        let mut changed = false;
        for q in 0..4 {
            let (below, above) = (lo[q], hi[q + 1]);
            changed |= raise(&mut lo[q + 1], below);
            changed |= lower(&mut hi[q], above);
        }
        let (strong_lo, cat_hi) = (lo[strong], hi[cat]);
        changed |= raise(&mut lo[cat], strong_lo.map(|(v, i)| (v.saturating_sub(1), i)));
        changed |= lower(&mut hi[strong], cat_hi.map(|(v, i)| (v + 1, i)));
        if !changed {
            break;
        }
    }
    for q in Quantity::LADDER {
        if let (Some((l, li)), Some((h, hi_i))) = (lo[q.rung()], hi[q.rung()]) {
            if l > h {
                return Err(Error::InconsistentBounds {
                    lower: ledger.entries[li].to_string(),
                    upper: ledger.entries[hi_i].to_string(),
                });
            }
        }
    }
    let ladder: Vec<Interval> = Quantity::LADDER
        .iter()
        .map(|&q| Interval {
            quantity: q,
            lower: lo[q.rung()].map_or(0, |b| b.0),
            upper: hi[q.rung()].map(|b| b.0),
            lower_from: lo[q.rung()].map(|b| b.1),
            upper_from: hi[q.rung()].map(|b| b.1),
        })
        .collect();
    Ok(Bracket { lower: ladder[cat].lower, upper: ladder[cat].upper, ladder })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(q: Quantity, k: BoundKind, v: u32) -> LedgerEntry {
        LedgerEntry::new(q, k, v, "test")
    }

    #[test]
    fn formulas() {
        assert_eq!(ganea_product_bound(5, 1), 11);
        assert_eq!(ganea_product_bound(0, 7), 7);
        assert_eq!(ganea_product_bound(1, 1), 3);
        assert_eq!(principal_bundle_bound(5, 3).unwrap(), 8);
        assert_eq!(principal_bundle_bound(4, 1).unwrap(), 6);
        assert_eq!(principal_bundle_bound(2, 5).unwrap(), 7);
        assert!(matches!(principal_bundle_bound(2, 0), Err(Error::InvalidFibreIndex(0))));
        assert_eq!(strong_category_fallback(5), 11);
        assert_eq!(strong_category_fallback(0), 1);
        assert_eq!(strong_category_fallback(3), 7);
    }

    #[test]
    fn closes_on_mwgt_and_bundle_bound() {
        let mut l = BoundsLedger::new();
        l.push(entry(Quantity::Mwgt, BoundKind::Lower, 8)).push(entry(Quantity::Cat, BoundKind::Upper, 8));
        let b = assemble_bracket(&l).unwrap();
        assert_eq!((b.lower, b.upper), (8, Some(8)));
    }

    #[test]
    fn open_bracket() {
        let mut l = BoundsLedger::new();
        l.push(entry(Quantity::Wgt, BoundKind::Lower, 6)).push(entry(Quantity::Cat, BoundKind::Upper, 11));
        let b = assemble_bracket(&l).unwrap();
        assert_eq!((b.lower, b.upper), (6, Some(11)));
        let mut only_lower = BoundsLedger::new();
        only_lower.push(entry(Quantity::CupLength, BoundKind::Exact, 3));
        assert_eq!(assemble_bracket(&only_lower).unwrap().upper, None);
    }

    #[test]
    fn conflict_names_both_entries() {
        let mut l = BoundsLedger::new();
        l.push(LedgerEntry::new(Quantity::Mwgt, BoundKind::Lower, 9, "obstruction"));
        l.push(LedgerEntry::new(Quantity::Cat, BoundKind::Upper, 8, "bundle"));
        match assemble_bracket(&l) {
            Err(Error::InconsistentBounds { lower, upper }) => {
                assert!(lower.contains("obstruction"));
                assert!(upper.contains("bundle"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn strong_category_bounds_cat_both_ways() {
        let mut l = BoundsLedger::new();
        l.push(entry(Quantity::StrongCat, BoundKind::Upper, 11));
        l.push(entry(Quantity::StrongCat, BoundKind::Lower, 5));
        let b = assemble_bracket(&l).unwrap();
        assert_eq!((b.lower, b.upper), (4, Some(11)));
    }

    #[test]
    fn fixture_rules() {
        let e = BoundInput::StrongCategoryFallback { fibre_strong_category: 5, provenance: "p".into() }.entry().unwrap();
        assert_eq!((e.quantity, e.kind, e.value), (Quantity::StrongCat, BoundKind::Upper, 11));
        let bad = BoundInput::PrincipalBundle { cone_length: 1, compression_index: 0, provenance: "p".into() };
        assert!(bad.entry().is_err());
    }
}
