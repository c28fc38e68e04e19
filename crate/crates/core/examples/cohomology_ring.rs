//! Builds a truncated polynomial ⊗ exterior algebra and prints its Poincaré
//! series, top class and cup-length.

use lscat::algebra::{Algebra, AlgebraPresentation, GeneratorSpec, Height};

fn main() -> lscat::Result<()> {
    let a = Algebra::new(AlgebraPresentation::new(
        vec![
            GeneratorSpec::new("x3", 3, Height::Finite(4)),
            GeneratorSpec::exterior("x5", 5),
            GeneratorSpec::exterior("x7", 7),
            GeneratorSpec::exterior("x15", 15),
        ],
        36,
    ))?;

    let series = a.poincare_series();
    let nonzero: Vec<String> =
        series.iter().enumerate().filter(|(_, &d)| d > 0).map(|(n, d)| format!("{n}:{d}")).collect();
    println!("dims by degree  {}", nonzero.join(" "));
    println!("total dimension {}", a.total_dim());

    let top = a.generator("x3")?.pow(3)?.multiply(&a.parse_element(&["x5*x7*x15"])?)?;
    println!("top class       {top} in degree {}", top.degree().unwrap_or(0));
    println!("x3^4            {}", a.generator("x3")?.pow(4)?);
    println!("cup-length      {}", a.cup_length());
    Ok(())
}
