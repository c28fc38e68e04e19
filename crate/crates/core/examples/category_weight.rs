//! Category weight of each cohomology class, read off the E-infinity
//! filtration of its representative.

use lscat::space::Space;
use lscat::weights::{compute_wgt, weight_assignment};

fn main() -> lscat::Result<()> {
    let space = Space::builtin("spin9")?;
    let weights = weight_assignment(&space)?;
    for w in weights.entries.iter().filter(|w| w.weight >= 5) {
        println!("wgt({}) = {}", w.class, w.weight);
    }
    println!("wgt(X) = {}", weights.max());

    let a = space.cohomology();
    let mixed = a.parse_element(&["x15", "x3*x5*x7"])?;
    println!("wgt({mixed}) = {}", compute_wgt(&space, &mixed)?);
    Ok(())
}
