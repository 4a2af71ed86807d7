mod common;

use common::{burau_delta, closure_components};
use hfk_core::codec::{
    braid_to_grid, parse_braid, parse_grid, parse_pd, BraidWord, GridDiagram, Marker,
    DEFAULT_MAX_GRID,
};
use hfk_core::floer::{alexander_from_grid, grid_homology};
use hfk_core::{Error, LaurentPoly};
use proptest::prelude::*;

#[test]
fn oracle_sanity() {
    assert_eq!(burau_delta(2, &[1, 1, 1]), vec![1, -1, 1]);
    assert_eq!(burau_delta(3, &[1, -2, 1, -2]), vec![-1, 3, -1]);
    assert_eq!(burau_delta(3, &[1, 2]), vec![1]);
    assert_eq!(burau_delta(4, &[1, 1, 2, -1, -3, 2, -3]), vec![-2, 5, -2]);
}

/// Braid words whose closure is a knot.
fn knot_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2..=max_strands)
        .prop_flat_map(move |k| {
            let letter = (1..k as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
            (Just(k), prop::collection::vec(letter, 1..=max_len))
        })
        .prop_filter("closure must be a knot", |(k, w)| {
            closure_components(*k, w) == 1
        })
}

fn braid_text(k: usize, w: &[i32]) -> String {
    let letters: Vec<String> = w.iter().map(|l| l.to_string()).collect();
    format!("{k}: {}", letters.join(","))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_to_grid_is_a_valid_knot_grid((k, w) in knot_braid(4, 8)) {
        let b = BraidWord::new(k, w.clone()).unwrap();
        let g = braid_to_grid(&b, 64).unwrap();
        prop_assert_eq!(g.component_count(), 1);
        let fixed = w.iter().fold((0..k).collect::<Vec<_>>(), |mut p, &l| {
            let i = l.unsigned_abs() as usize - 1;
            p.swap(i, i + 1);
            p
        });
        let fixed = fixed.iter().enumerate().filter(|(i, &p)| *i == p).count();
        prop_assert_eq!(g.size(), k + w.len() - fixed);
        for c in 0..g.size() {
            prop_assert_ne!(g.o()[c], g.x()[c]);
        }
    }

    #[test]
    fn grid_delta_matches_burau((k, w) in knot_braid(4, 5)) {
        let b = BraidWord::new(k, w.clone()).unwrap();
        let g = braid_to_grid(&b, DEFAULT_MAX_GRID).unwrap();
        prop_assume!(g.size() <= 8);
        let h = grid_homology(&g, DEFAULT_MAX_GRID).unwrap();
        prop_assert_eq!(
            alexander_from_grid(&h.hat).unwrap(),
            LaurentPoly::from_symmetric_coeffs(&burau_delta(k, &w))
        );
    }

    #[test]
    fn braid_text_round_trips((k, w) in knot_braid(6, 12)) {
        let b = parse_braid(&braid_text(k, &w)).unwrap();
        prop_assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn grid_text_round_trips((k, w) in knot_braid(4, 8)) {
        let g = braid_to_grid(&BraidWord::new(k, w).unwrap(), 64).unwrap();
        prop_assert_eq!(parse_grid(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn stabilization_keeps_one_component(col in 0usize..2, kind in 0usize..4, again in 0usize..3) {
        let markers = [Marker::O, Marker::X];
        let g = GridDiagram::unknot()
            .stabilize(col, markers[kind % 2])
            .stabilize(again, markers[kind / 2]);
        prop_assert_eq!(g.size(), 4);
        prop_assert_eq!(g.component_count(), 1);
        let h = grid_homology(&g, DEFAULT_MAX_GRID).unwrap();
        prop_assert_eq!(h.hat.total(), 1);
        prop_assert_eq!(h.hat.get(0, 0), 1);
    }
}

const PDS: &[&str] = &[
    "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1",
    "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) mark=1",
    "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5) mark=1",
    "X(1,5,2,4) X(3,9,4,8) X(5,1,6,10) X(7,3,8,2) X(9,7,10,6) mark=1",
];

#[test]
fn pd_text_round_trips() {
    for text in PDS {
        let d = parse_pd(text).unwrap();
        assert_eq!(parse_pd(&d.to_string()).unwrap(), d);
    }
    assert_eq!(parse_pd("unknot").unwrap().crossing_count(), 0);
}

#[test]
fn malformed_inputs_are_input_errors() {
    let bad = [
        parse_braid("2: 1,1").map(|_| ()),
        parse_braid("3: 1,3").map(|_| ()),
        parse_braid("2 1,1,1").map(|_| ()),
        parse_grid("n=3; O=[0,1,2]; X=[0,2,1]").map(|_| ()),
        parse_grid("n=3; O=[0,1,1]; X=[1,2,0]").map(|_| ()),
        parse_grid("n=2; O=[0,1]; X=[0,1]").map(|_| ()),
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,7) mark=1").map(|_| ()),
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").map(|_| ()),
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=9").map(|_| ()),
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1 signs=-,-,-").map(|_| ()),
    ];
    for (i, r) in bad.into_iter().enumerate() {
        let e = r.expect_err(&format!("case {i} should fail"));
        assert_eq!(e.exit_code(), 1, "case {i}: {e}");
    }
}

#[test]
fn declared_signs_that_agree_are_accepted() {
    let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1").unwrap();
    let signs: Vec<&str> = d
        .signs()
        .iter()
        .map(|&s| if s > 0 { "+" } else { "-" })
        .collect();
    let text = format!(
        "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1 signs={}",
        signs.join(",")
    );
    assert_eq!(parse_pd(&text).unwrap(), d);
}

#[test]
fn grid_cap_is_a_resource_error() {
    let b = parse_braid("2: 1,1,1,1,1,1,1,1,1,1,1").unwrap();
    let e = braid_to_grid(&b, DEFAULT_MAX_GRID).unwrap_err();
    assert!(matches!(e, Error::Resource(_)));
    assert_eq!(e.exit_code(), 2);
}
