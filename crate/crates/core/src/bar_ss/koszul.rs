use std::collections::BTreeMap;

use super::{BigradedGenerator, BigradedPage};
use crate::algebra::{AlgebraPresentation, Height};
use crate::error::{Error, Result};

/// `Ext` over a free graded-commutative Hopf algebra, read off by duality.
///
/// Each loop generator `u` of degree `d` contributes one generator `x1_d` in
/// bidegree `(1, d)`: exterior `u` gives a polynomial class, polynomial `u`
/// an exterior class. The page's total-degree cap is the presentation's cap.
pub fn koszul_e2(loop_homology: &AlgebraPresentation) -> Result<BigradedPage> {
    loop_homology.validate()?;
    BigradedPage::free(koszul_generators(loop_homology)?, loop_homology.degree_cap, None)
}

pub(crate) fn koszul_generators(loop_homology: &AlgebraPresentation) -> Result<Vec<BigradedGenerator>> {
    let mut per_degree: BTreeMap<u32, usize> = BTreeMap::new();
    for g in &loop_homology.generators {
        *per_degree.entry(g.degree).or_default() += 1;
    }
    loop_homology
        .generators
        .iter()
        .map(|g| {
            let height = match g.height {
                Height::Finite(2) => Height::UNBOUNDED,
                Height::Unbounded(_) => Height::EXTERIOR,
                Height::Finite(h) => return Err(Error::NotFree { name: g.name.clone(), height: h }),
            };
            let name = if per_degree[&g.degree] == 1 {
                format!("x1_{}", g.degree)
            } else {
                format!("x1_{}_{}", g.degree, g.name)
            };
            Ok(BigradedGenerator { name, s: 1, t: g.degree, height })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;

    #[test]
    fn exterior_becomes_polynomial() {
        let p = koszul_e2(&AlgebraPresentation::new(vec![GeneratorSpec::exterior("u2", 2)], 36)).unwrap();
        assert_eq!(p.generators()[0].name, "x1_2");
        assert!(p.generators()[0].height.is_unbounded());
        // F2[x] with |x| = 3: one class in every multiple of three.
        let dims = p.dims_by_total_degree();
        for (d, &n) in dims.iter().enumerate() {
            assert_eq!(n, usize::from(d % 3 == 0), "degree {d}");
        }
    }

    #[test]
    fn polynomial_becomes_exterior() {
        let p = koszul_e2(&AlgebraPresentation::new(vec![GeneratorSpec::polynomial("u4", 4)], 36)).unwrap();
        assert_eq!(p.generators()[0].height, Height::EXTERIOR);
        assert_eq!(p.total_dim(), 2);
    }

    #[test]
    fn truncated_loop_generator_rejected() {
        let bad = AlgebraPresentation::new(vec![GeneratorSpec::new("u2", 2, Height::Finite(3))], 36);
        assert!(matches!(koszul_e2(&bad), Err(Error::NotFree { height: 3, .. })));
    }

    #[test]
    fn equal_degrees_get_distinct_names() {
        let p = AlgebraPresentation::new(vec![GeneratorSpec::exterior("a", 2), GeneratorSpec::exterior("b", 2)], 10);
        let gens = koszul_generators(&p).unwrap();
        assert_eq!(gens[0].name, "x1_2_a");
        assert_eq!(gens[1].name, "x1_2_b");
    }
}
