use lscat::bounds::{
    assemble_bracket, ganea_product_bound, principal_bundle_bound, strong_category_fallback, BoundKind, BoundsLedger,
    LedgerEntry, Quantity,
};
use lscat::error::Error;
use proptest::prelude::*;

/// Largest value the brute-force oracle enumerates.
const SEARCH_CEILING: u32 = 10;

#[test]
fn closed_forms_through_one_hundred() {
    for a in 0..=100u32 {
        assert_eq!(strong_category_fallback(a), a + a + 1);
        for b in 0..=100u32 {
            assert_eq!(ganea_product_bound(a, b), a * b + a + b);
            assert_eq!(ganea_product_bound(a, b), ganea_product_bound(b, a));
            let expected = if b >= 2 { a + b } else { a + 2 };
            match principal_bundle_bound(a, b) {
                Ok(v) => assert_eq!(v, expected, "m = {a}, n = {b}"),
                Err(Error::InvalidFibreIndex(0)) => assert_eq!(b, 0),
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }
}

fn quantity() -> impl Strategy<Value = Quantity> {
    prop::sample::select(Quantity::LADDER.to_vec())
}

fn entry() -> impl Strategy<Value = LedgerEntry> {
    let kind = prop_oneof![Just(BoundKind::Lower), Just(BoundKind::Upper), Just(BoundKind::Exact)];
    (quantity(), kind, 0u32..9).prop_map(|(q, k, v)| LedgerEntry::new(q, k, v, "random"))
}

fn ledger(entries: &[LedgerEntry]) -> BoundsLedger {
    let mut l = BoundsLedger::new();
    for e in entries {
        l.push(e.clone());
    }
    l
}

fn satisfies(e: &LedgerEntry, v: u32) -> bool {
    match e.kind {
        BoundKind::Lower => v >= e.value,
        BoundKind::Upper => v <= e.value,
        BoundKind::Exact => v == e.value,
    }
}

/// Range of `cat` over every assignment `cuplen <= wgt <= Mwgt <= cat <= Cat <= cat + 1`
/// that satisfies the entries, by enumeration.
fn brute_force_cat_range(entries: &[LedgerEntry]) -> Option<(u32, u32)> {
    let n = SEARCH_CEILING;
    let mut range: Option<(u32, u32)> = None;
    for c in 0..=n {
        for w in c..=n {
            for mw in w..=n {
                for cat in mw..=n {
                    for strong in cat..=(cat + 1).min(n) {
                        let vals = [c, w, mw, cat, strong];
                        let ok = entries.iter().all(|e| {
                            let i = Quantity::LADDER.iter().position(|q| *q == e.quantity).unwrap();
                            satisfies(e, vals[i])
                        });
                        if ok {
                            range = Some(match range {
                                None => (cat, cat),
                                Some((lo, hi)) => (lo.min(cat), hi.max(cat)),
                            });
                        }
                    }
                }
            }
        }
    }
    range
}

proptest! {
    #[test]
    fn bracket_matches_exhaustive_search(entries in prop::collection::vec(entry(), 0..6)) {
        let oracle = brute_force_cat_range(&entries);
        match (assemble_bracket(&ledger(&entries)), oracle) {
            (Ok(b), Some((lo, hi))) => {
                prop_assert_eq!(b.lower, lo);
                prop_assert_eq!(b.upper.unwrap_or(SEARCH_CEILING), hi);
            }
            (Err(Error::InconsistentBounds { .. }), None) => {}
            (got, want) => prop_assert!(false, "assemble_bracket {:?}, search {:?}", got, want),
        }
    }

    #[test]
    fn more_entries_never_widen_the_bracket(
        entries in prop::collection::vec(entry(), 0..6),
        extra in entry(),
    ) {
        let before = assemble_bracket(&ledger(&entries));
        let mut more = entries.clone();
        more.push(extra);
        let after = assemble_bracket(&ledger(&more));
        match (before, after) {
            (Ok(b), Ok(a)) => {
                prop_assert!(a.lower >= b.lower);
                match (a.upper, b.upper) {
                    (Some(x), Some(y)) => prop_assert!(x <= y),
                    (None, Some(_)) => prop_assert!(false, "upper bound lost"),
                    _ => {}
                }
            }
            (Err(_), after) => prop_assert!(after.is_err(), "inconsistency disappeared"),
            (Ok(_), Err(_)) => {}
        }
    }

    #[test]
    fn ladder_is_monotone(entries in prop::collection::vec(entry(), 0..6)) {
        if let Ok(b) = assemble_bracket(&ledger(&entries)) {
            for w in b.ladder.windows(2) {
                prop_assert!(w[0].lower <= w[1].lower);
                if let (Some(x), Some(y)) = (w[0].upper, w[1].upper) {
                    prop_assert!(x <= y);
                }
            }
            for rung in &b.ladder {
                if let Some(h) = rung.upper {
                    prop_assert!(rung.lower <= h);
                }
            }
        }
    }
}

#[test]
fn spin9_style_ledger_closes() {
    let mut l = BoundsLedger::new();
    l.push(LedgerEntry::new(Quantity::Mwgt, BoundKind::Lower, 8, "obstruction"));
    l.push(LedgerEntry::new(Quantity::Cat, BoundKind::Upper, principal_bundle_bound(5, 3).unwrap(), "bundle"));
    l.push(LedgerEntry::new(Quantity::StrongCat, BoundKind::Upper, ganea_product_bound(5, 1), "ganea"));
    let b = assemble_bracket(&l).unwrap();
    assert!(b.is_closed());
    assert_eq!(b.to_string(), "[8, 8]");
    assert_eq!(b.ladder[4].lower, 8);
    assert_eq!(b.ladder[4].upper, Some(9));
}

#[test]
fn conflict_names_both_entries() {
    let mut l = BoundsLedger::new();
    l.push(LedgerEntry::new(Quantity::Wgt, BoundKind::Lower, 6, "weights"));
    l.push(LedgerEntry::new(Quantity::Cat, BoundKind::Upper, 5, "too small"));
    match assemble_bracket(&l) {
        Err(Error::InconsistentBounds { lower, upper }) => {
            assert!(lower.contains("weights"), "{lower}");
            assert!(upper.contains("too small"), "{upper}");
        }
        other => panic!("expected a conflict, got {other:?}"),
    }
}
