mod oracle;

use lscat::algebra::{Algebra, AlgebraPresentation, Element, GeneratorSpec, Height};
use proptest::prelude::*;

const ORACLE_BASIS_LIMIT: usize = 600;

fn presentation() -> impl Strategy<Value = (AlgebraPresentation, Vec<oracle::Gen>)> {
    let gen = (1u32..8, prop_oneof![Just(None), (2u32..6).prop_map(Some)]);
    (prop::collection::vec(gen, 0..5), 0u32..24).prop_map(|(gens, cap)| {
        let specs = gens
            .iter()
            .enumerate()
            .map(|(i, &(d, h))| GeneratorSpec::new(format!("g{i}"), d, h.map_or(Height::UNBOUNDED, Height::Finite)))
            .collect();
        let oracle = gens.iter().map(|&(d, h)| oracle::gen(d, h)).collect();
        (AlgebraPresentation::new(specs, cap), oracle)
    })
}

/// A random homogeneous element: a subset of one degree's basis.
fn element(a: &Algebra, degree: u32, bits: u64) -> Element {
    let basis = a.basis(degree).unwrap();
    let terms: Vec<String> =
        basis.iter().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, m)| a.format_monomial(m)).collect();
    a.parse_element(&terms).unwrap()
}

proptest! {
    #[test]
    fn poincare_series_matches_oracle((p, gens) in presentation()) {
        let cap = p.degree_cap;
        let a = Algebra::new(p).unwrap();
        prop_assert_eq!(a.poincare_series(), oracle::poincare_series(&gens, cap));
    }

    #[test]
    fn cup_length_matches_oracle((p, gens) in presentation()) {
        let cap = p.degree_cap;
        // The exhaustive oracle is quadratic in the basis size per level.
        prop_assume!(oracle::monomials(&gens, cap).len() <= ORACLE_BASIS_LIMIT);
        let a = Algebra::new(p).unwrap();
        prop_assert_eq!(a.cup_length(), oracle::cup_length_exhaustive(&gens, cap));
    }

    #[test]
    fn product_is_commutative_and_associative(
        (p, _) in presentation(),
        degs in (0u32..12, 0u32..12, 0u32..12),
        bits in (any::<u64>(), any::<u64>(), any::<u64>()),
    ) {
        let a = Algebra::new(p).unwrap();
        let cap = a.degree_cap();
        prop_assume!(degs.0 <= cap && degs.1 <= cap && degs.2 <= cap);
        let (x, y, z) = (element(&a, degs.0, bits.0), element(&a, degs.1, bits.1), element(&a, degs.2, bits.2));
        prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap());
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // Distributivity over addition.
        let y2 = element(&a, degs.1, bits.2);
        let lhs = x.multiply(&y.add(&y2).unwrap()).unwrap();
        let rhs = x.multiply(&y).unwrap().add(&x.multiply(&y2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_strings_round_trip((p, _) in presentation()) {
        let a = Algebra::new(p).unwrap();
        for (_, m) in a.all_monomials() {
            prop_assert_eq!(&a.parse_monomial(&a.format_monomial(m)).unwrap(), m);
        }
    }

    #[test]
    fn vectors_round_trip((p, _) in presentation(), degree in 0u32..24, bits in any::<u64>()) {
        let a = Algebra::new(p).unwrap();
        prop_assume!(degree <= a.degree_cap());
        let e = element(&a, degree, bits);
        let v = a.to_vector(&e, degree).unwrap();
        prop_assert_eq!(a.from_vector(&v, degree).unwrap(), e);
    }
}

#[test]
fn explicit_exponent_one_is_accepted() {
    let a = Algebra::new(AlgebraPresentation::new(vec![GeneratorSpec::polynomial("x", 2)], 10)).unwrap();
    assert_eq!(a.parse_monomial("x^1").unwrap(), a.parse_monomial("x").unwrap());
    assert_eq!(a.format_monomial(&a.parse_monomial("x^1").unwrap()), "x");
}
