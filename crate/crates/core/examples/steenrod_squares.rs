//! Applies Steenrod squares through the Cartan formula and checks a table
//! for instability.

use lscat::algebra::Algebra;
use lscat::fixtures::builtin;

fn main() -> lscat::Result<()> {
    let sp = builtin("spin9")?;
    let a = Algebra::new(sp.cohomology_presentation())?;
    let sq = sp.steenrod_action(&a)?;

    for (g, k, v) in sq.entries() {
        println!("table   Sq^{k} {g} = {v}");
    }
    for text in ["x3*x5", "x3^2*x7", "x3*x15"] {
        let e = a.parse_element(&[text])?;
        for k in 1..=4 {
            let v = sq.apply_sq(k, &e)?;
            if !v.is_zero() {
                println!("Sq^{k} {text} = {v}");
            }
        }
    }
    println!("image of Sq^4 in H^36: {} classes", sq.image_of_sq(4, 36)?.len());
    println!("instability violations: {}", sq.verify_instability().len());
    Ok(())
}
