//! Runs the Koszul E2 page for the loop homology, infers the differentials
//! from the target cohomology, and prints the pages.

use lscat::bar_ss::Bidegree;
use lscat::space::Space;

fn main() -> lscat::Result<()> {
    let space = Space::builtin("spin9")?;
    for g in space.e2().generators() {
        println!("E2 generator {:<6} at ({}, {})  height {}", g.name, g.s, g.t, g.height);
    }
    for d in space.differentials() {
        for a in &d.assignments {
            println!("inferred     d{}({}) = {}", d.r, a.generator, a.value.join(" + "));
        }
    }
    println!("E2 total dim through degree {}: {}", space.e2().degree_cap(), space.e2().total_dim());
    println!("E-infinity total dim:            {}", space.e_infinity().total_dim());

    let e_inf = space.e_infinity();
    let mut by_column = vec![0usize; 7];
    for b in e_inf.bidegrees() {
        if let Some(slot) = by_column.get_mut(b.s as usize) {
            *slot += e_inf.dim(b);
        }
    }
    println!("E-infinity by column:            {by_column:?}");
    println!("x1_2^4 at (4, 8) is hit by d3, E-infinity dim there: {}", e_inf.dim(Bidegree::new(4, 8)));
    Ok(())
}
