//! Combines lower and upper bounds along cuplen <= wgt <= Mwgt <= cat <= Cat
//! into a bracket for cat.

use lscat::bounds::{
    assemble_bracket, ganea_product_bound, principal_bundle_bound, strong_category_fallback, BoundKind, BoundsLedger,
    LedgerEntry, Quantity,
};

fn main() -> lscat::Result<()> {
    let mut ledger = BoundsLedger::new();
    ledger
        .push(LedgerEntry::new(Quantity::CupLength, BoundKind::Exact, 6, "cup products"))
        .push(LedgerEntry::new(Quantity::Mwgt, BoundKind::Lower, 8, "Steenrod obstruction"));
    let open = assemble_bracket(&ledger)?;
    println!("lower bounds only: cat in {open}");

    ledger
        .push(LedgerEntry::new(Quantity::Cat, BoundKind::Upper, principal_bundle_bound(5, 3)?, "principal bundle"))
        .push(LedgerEntry::new(Quantity::StrongCat, BoundKind::Upper, strong_category_fallback(5), "fibre Cat"))
        .push(LedgerEntry::new(Quantity::StrongCat, BoundKind::Upper, ganea_product_bound(5, 1), "Ganea"));
    let closed = assemble_bracket(&ledger)?;
    println!("with upper bounds: cat in {closed}");
    for rung in &closed.ladder {
        let hi = rung.upper.map_or("∞".to_string(), |h| h.to_string());
        println!("  {:<7} [{}, {hi}]", rung.quantity, rung.lower);
    }

    ledger.push(LedgerEntry::new(Quantity::Cat, BoundKind::Upper, 7, "wrong"));
    match assemble_bracket(&ledger) {
        Err(e) => println!("after a bad entry: {e}"),
        Ok(b) => println!("unexpectedly consistent: {b}"),
    }
    Ok(())
}
