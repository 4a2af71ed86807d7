mod common;

use common::burau_delta;
use hfk_core::codec::parse_pd;
use hfk_core::kauffman::{
    analyze_diagram, difference_epsilon, enumerate_states, is_mod2_symmetric, normalize_s, Regions,
    DEFAULT_MAX_CROSSINGS,
};
use hfk_core::LaurentPoly;

struct Case {
    pd: &'static str,
    strands: usize,
    braid: &'static [i32],
    states: usize,
    genus: i32,
}

const CASES: &[Case] = &[
    Case { pd: "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1", strands: 2, braid: &[1, 1, 1], states: 3, genus: 1 },
    Case { pd: "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) mark=1", strands: 3, braid: &[1, -2, 1, -2], states: 5, genus: 1 },
    Case { pd: "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5) mark=1", strands: 2, braid: &[1, 1, 1, 1, 1], states: 5, genus: 2 },
    Case { pd: "X(1,5,2,4) X(3,9,4,8) X(5,1,6,10) X(7,3,8,2) X(9,7,10,6) mark=1", strands: 3, braid: &[1, 1, 1, 2, -1, 2], states: 7, genus: 1 },
    Case { pd: "X(1,7,2,6) X(3,10,4,11) X(5,3,6,2) X(7,1,8,12) X(9,4,10,5) X(11,9,12,8) mark=1", strands: 4, braid: &[1, 1, 2, -1, -3, 2, -3], states: 9, genus: 1 },
    Case { pd: "X(1,8,2,9) X(3,11,4,10) X(5,1,6,12) X(7,2,8,3) X(9,7,10,6) X(11,5,12,4) mark=1", strands: 3, braid: &[1, 1, 1, -2, 1, -2], states: 11, genus: 2 },
    Case { pd: "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7) mark=1", strands: 3, braid: &[1, 1, -2, 1, -2, -2], states: 13, genus: 2 },
    Case { pd: "X(1,9,2,8) X(3,11,4,10) X(5,13,6,12) X(7,1,8,14) X(9,3,10,2) X(11,5,12,4) X(13,7,14,6) mark=1", strands: 2, braid: &[1, 1, 1, 1, 1, 1, 1], states: 7, genus: 3 },
];

#[test]
fn state_sums_match_the_burau_oracle() {
    for c in CASES {
        let d = parse_pd(c.pd).unwrap();
        let s = analyze_diagram(&d, DEFAULT_MAX_CROSSINGS).unwrap();
        assert_eq!(s.family.len(), c.states, "{}", c.pd);
        assert_eq!(
            s.delta,
            LaurentPoly::from_symmetric_coeffs(&burau_delta(c.strands, c.braid)),
            "{}",
            c.pd
        );
        // alternating diagrams attain the bound
        assert_eq!(s.max_s, c.genus, "{}", c.pd);
    }
}

#[test]
fn states_are_bijections_onto_unmarked_regions() {
    for c in CASES {
        let d = parse_pd(c.pd).unwrap();
        let regions = Regions::of(&d).unwrap();
        assert_eq!(regions.count(), d.crossing_count() + 2);
        let forbidden = regions.beside_edge(&d, d.marked_edge().unwrap()).unwrap();
        let mut allowed: Vec<usize> = (0..regions.count())
            .filter(|r| !forbidden.contains(r))
            .collect();
        allowed.sort_unstable();
        let f = enumerate_states(&d, DEFAULT_MAX_CROSSINGS).unwrap();
        for s in &f.states {
            let mut hit = s.regions.clone();
            hit.sort_unstable();
            assert_eq!(hit, allowed);
            for (ci, (&q, &r)) in s.assignment.iter().zip(&s.regions).enumerate() {
                assert_eq!(regions.region(ci, q as usize), r);
            }
        }
        let mut sorted = f
            .states
            .iter()
            .map(|s| s.assignment.clone())
            .collect::<Vec<_>>();
        sorted.sort();
        let order: Vec<_> = f.states.iter().map(|s| s.assignment.clone()).collect();
        assert_eq!(order, sorted, "enumeration is lexicographic");
    }
}

#[test]
fn epsilon_is_a_coboundary() {
    for c in CASES {
        let f = enumerate_states(&parse_pd(c.pd).unwrap(), DEFAULT_MAX_CROSSINGS).unwrap();
        let x = &f.states;
        for a in x {
            for b in x {
                let ab = difference_epsilon(a, b).unwrap();
                assert_eq!(ab, -difference_epsilon(b, a).unwrap());
                for z in x {
                    assert_eq!(
                        ab + difference_epsilon(b, z).unwrap(),
                        difference_epsilon(a, z).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn normalization_is_symmetric_and_unique() {
    for c in CASES {
        let f = normalize_s(
            &enumerate_states(&parse_pd(c.pd).unwrap(), DEFAULT_MAX_CROSSINGS).unwrap(),
        )
        .unwrap();
        let grades = f.grades().unwrap();
        assert!(is_mod2_symmetric(&grades));
        for (x, gx) in f.states.iter().zip(&grades) {
            for (y, gy) in f.states.iter().zip(&grades) {
                assert_eq!(gx - gy, difference_epsilon(x, y).unwrap());
            }
        }
        let span = grades.iter().max().unwrap() - grades.iter().min().unwrap() + 2;
        for shift in (-span..=span).filter(|&t| t != 0) {
            let moved: Vec<i32> = grades.iter().map(|g| g + shift).collect();
            assert!(!is_mod2_symmetric(&moved), "{} shift {shift}", c.pd);
        }
    }
}

#[test]
fn moving_the_marked_edge_changes_nothing() {
    for c in CASES {
        let d = parse_pd(c.pd).unwrap();
        let base = analyze_diagram(&d, DEFAULT_MAX_CROSSINGS).unwrap();
        for edge in 1..=d.edge_count() {
            let moved = analyze_diagram(&d.remarked(edge).unwrap(), DEFAULT_MAX_CROSSINGS).unwrap();
            assert_eq!(moved.delta, base.delta, "{} edge {edge}", c.pd);
            assert_eq!(moved.max_s, base.max_s, "{} edge {edge}", c.pd);
        }
    }
}

#[test]
fn normalization_shift_examples() {
    use hfk_core::kauffman::symmetric_shift;
    let shift = |r: &[i32]| symmetric_shift(r).unwrap();
    assert_eq!(shift(&[0, 1, 2]), -1);
    assert_eq!(shift(&[0, 1, 1, 1, 2]), -1);
    assert_eq!(shift(&[7]) + 7, 0);
}
