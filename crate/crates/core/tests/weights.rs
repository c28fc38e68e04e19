use lscat::error::Error;
use lscat::space::Space;
use lscat::weights::{compute_wgt, compute_wgt_space, find_mwgt_obstruction, mwgt_lower_bound, weight_assignment};

fn spin9() -> Space {
    Space::builtin("spin9").unwrap()
}

#[test]
fn weight_of_a_monomial_is_its_factor_count() {
    let s = spin9();
    let a = s.cohomology();
    for (d, y) in a.all_monomials().filter(|(d, _)| *d > 0) {
        let w = compute_wgt(&s, &a.monomial_element(y.clone())).unwrap();
        assert_eq!(w, y.factor_count(), "{} in degree {d}", a.format_monomial(y));
    }
}

#[test]
fn weight_is_additive_on_nonzero_products() {
    let s = spin9();
    let a = s.cohomology();
    let monomials: Vec<_> = a.all_monomials().filter(|(d, _)| *d > 0).map(|(_, y)| y.clone()).collect();
    let mut checked = 0;
    for x in &monomials {
        for y in &monomials {
            let Some(xy) = a.multiply_monomials(x, y) else { continue };
            let w = |m| compute_wgt(&s, &a.monomial_element(m)).unwrap();
            assert_eq!(w(xy), w(x.clone()) + w(y.clone()));
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn weight_of_a_sum_is_its_lowest_filtration() {
    let s = spin9();
    let a = s.cohomology();
    let e = a.parse_element(&["x15", "x3*x5*x7"]).unwrap();
    assert_eq!(compute_wgt(&s, &e).unwrap(), 1);
    let e = a.parse_element(&["x3^2*x15", "x3^3*x7*x5"]).unwrap();
    assert_eq!(compute_wgt(&s, &e).unwrap(), 3);
}

#[test]
fn spin9_weights() {
    let s = spin9();
    let w = weight_assignment(&s).unwrap();
    assert_eq!(w.max(), 6);
    for g in ["x3", "x5", "x7", "x15"] {
        assert_eq!(w.get(g), Some(1), "{g}");
    }
    assert_eq!(w.get("x3^3*x5*x7*x15"), Some(6));
    assert_eq!(w.entries.len(), 31);
}

#[test]
fn weight_is_undefined_on_degree_zero_and_zero() {
    let s = spin9();
    let a = s.cohomology();
    assert!(matches!(compute_wgt(&s, &a.zero()), Err(Error::WeightUndefined(_))));
    assert!(matches!(compute_wgt(&s, &a.one()), Err(Error::WeightUndefined(_))));
    let mixed = a.parse_element(&["x3", "x5"]).unwrap();
    assert!(matches!(compute_wgt(&s, &mixed), Err(Error::Inhomogeneous(_))));
}

#[test]
fn obstruction_appears_only_at_height_seven() {
    let s = spin9();
    for m in [0, 1, 6, 8, 9, 12] {
        assert!(find_mwgt_obstruction(&s, m).unwrap().is_none(), "unexpected witness at m = {m}");
    }
    let w = find_mwgt_obstruction(&s, 7).unwrap().expect("witness at m = 7");
    assert_eq!((w.k, w.z_degree, w.u_degree), (4, 32, 36));
    assert_eq!(w.u, "x3^3*x5*x7*x15");
    assert!(w.facts.iter().any(|f| f == "H^32(X) = 0"), "{:?}", w.facts);
}

#[test]
fn mwgt_bound_for_spin9() {
    let s = spin9();
    let b = mwgt_lower_bound(&s, 36).unwrap();
    assert_eq!(b.value, 8);
    assert_eq!(b.witnesses.len(), 1);
    assert_eq!(b.searched_through, 36);
    assert!(b.value >= compute_wgt_space(&s).unwrap());
}

#[test]
fn small_builtins() {
    let toy = Space::builtin("toy-trunc-poly").unwrap();
    assert_eq!(compute_wgt_space(&toy).unwrap(), 3);
    assert_eq!(mwgt_lower_bound(&toy, toy.cohomology().degree_cap()).unwrap().value, 0);
    let unit = Space::builtin("unit").unwrap();
    assert_eq!(compute_wgt_space(&unit).unwrap(), 0);
    assert_eq!(mwgt_lower_bound(&unit, 4).unwrap().value, 0);
}
