use hfk_core::codec::{braid_to_grid, parse_braid, parse_grid, DEFAULT_MAX_GRID};
use hfk_core::floer::{grid_homology, BigradedRanks};
use hfk_core::invariants::{
    certify_unknot, chi_consistency, kauffman_bound_check, seifert_genus, top_group_rank,
    zero_surgery_norm,
};
use hfk_core::LaurentPoly;
use proptest::prelude::*;

fn hat_of_braid(text: &str) -> BigradedRanks {
    let g = braid_to_grid(&parse_braid(text).unwrap(), DEFAULT_MAX_GRID).unwrap();
    grid_homology(&g, DEFAULT_MAX_GRID).unwrap().hat
}

#[test]
fn genus_examples() {
    assert_eq!(seifert_genus(&hat_of_braid("2: 1,1,1")).unwrap(), 1);
    assert_eq!(
        seifert_genus(&BigradedRanks::from_entries([((0, 0), 1)])).unwrap(),
        0
    );
    // T(2,5): (2-1)(5-1)/2
    assert_eq!(seifert_genus(&hat_of_braid("2: 1,1,1,1,1")).unwrap(), 2);
}

#[test]
fn unknot_certification() {
    let g = parse_grid("n=5; O=[4,2,0,3,1]; X=[3,4,1,0,2]").unwrap();
    let h = grid_homology(&g, DEFAULT_MAX_GRID).unwrap().hat;
    assert!(certify_unknot(&h).unwrap());
    assert!(!certify_unknot(&hat_of_braid("2: 1,1,1")).unwrap());
}

#[test]
fn chi_examples() {
    let trefoil = hat_of_braid("2: 1,1,1");
    assert!(chi_consistency(&trefoil, &LaurentPoly::from_symmetric_coeffs(&[1, -1, 1])).passed);
    let c = chi_consistency(&trefoil, &LaurentPoly::from_symmetric_coeffs(&[-1, 3, -1]));
    assert!(!c.passed);
    assert!(c.detail.starts_with("exponent 0: -1 vs 3"), "{}", c.detail);
    let unknot = BigradedRanks::from_entries([((0, 0), 1)]);
    assert!(chi_consistency(&unknot, &LaurentPoly::one()).passed);
}

#[test]
fn surgery_norm_examples() {
    assert_eq!(zero_surgery_norm(2), 2);
    assert_eq!(zero_surgery_norm(1), 0);
    assert_eq!(zero_surgery_norm(0), 0);
    let h = hat_of_braid("2: 1,1,1,1,1");
    assert_eq!(top_group_rank(&h, 2), (1, true));
    assert_eq!(top_group_rank(&hat_of_braid("2: 1,1,1"), 1), (1, false));
}

#[test]
fn bound_examples() {
    assert!(kauffman_bound_check(1, 1).passed);
    assert!(!kauffman_bound_check(0, 1).passed);
}

proptest! {
    #[test]
    fn surgery_norm_is_monotone(g in 0u32..1000) {
        prop_assert!(zero_surgery_norm(g) <= zero_surgery_norm(g + 1));
        prop_assert_eq!(zero_surgery_norm(g) == 0, g <= 1);
    }

    #[test]
    fn bound_passes_iff_at_least_genus(b in -5i32..10, g in 0u32..10) {
        prop_assert_eq!(kauffman_bound_check(b, g).passed, b >= g as i32);
    }
}
