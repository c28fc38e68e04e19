//! Cell dimensions of suspensions and smash powers.

use lscat::cells::CellComplex;

fn main() -> lscat::Result<()> {
    let cp2 = CellComplex::complex_projective(2);
    let square = cp2.smash_power(2);
    println!("{cp2}");
    println!("{square}");
    println!("lowest cell besides the bottom one: {:?}", square.min_cell_dim_excluding(&["e2∧e2"])?);

    let s3 = CellComplex::sphere(3);
    println!("{}", s3.suspend(4));
    println!("{}", cp2.smash(&s3).suspend(1));
    Ok(())
}
