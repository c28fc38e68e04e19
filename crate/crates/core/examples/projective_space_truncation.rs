//! Truncates the spectral sequence to columns s <= m and sorts the surviving
//! classes into buckets.

use lscat::space::Space;

fn main() -> lscat::Result<()> {
    let space = Space::builtin("spin9")?;
    println!(" m   A[m]  partial  residual");
    for m in 0..=12 {
        let r = space.pm_report(m)?;
        println!("{m:>2}  {:>5}  {:>7}  {:>8}", r.truncated, r.partial_products, r.residual);
    }
    let r = space.pm_report(8)?;
    println!();
    println!("residual classes at m = 8:");
    for c in r.classes.iter().filter(|c| c.bucket == lscat::bar_ss::Bucket::Residual) {
        println!("  degree {:>2} at ({}, {})  {}", c.degree, c.s, c.t, c.representative);
    }
    Ok(())
}
