//! Searches for Steenrod-square obstructions to a module retraction at each
//! height, and prints the witness.

use std::time::Instant;

use lscat::space::Space;
use lscat::weights::mwgt_lower_bound;

fn main() -> lscat::Result<()> {
    let space = Space::builtin("spin9")?;
    let start = Instant::now();
    let bound = mwgt_lower_bound(&space, 36)?;
    println!("searched m = 0..={} in {:.2?}", bound.searched_through, start.elapsed());
    for w in &bound.witnesses {
        println!("m = {}: Sq^{} on {} (representative {})", w.m, w.k, w.z, w.z_representative);
        for f in &w.facts {
            println!("    {f}");
        }
    }
    println!("Mwgt >= {}", bound.value);
    Ok(())
}
