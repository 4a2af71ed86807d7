//! Kauffman states of a marked knot projection, their normalized
//! Alexander-type grading `s`, and the state-sum Alexander polynomial.
//!
//! A state assigns to every crossing one of its four corners so that the
//! corresponding regions are distinct and avoid the two regions adjacent to
//! the marked edge. Local weights are kept doubled so all arithmetic stays
//! in the integers.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::codec::KnotDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Default crossing cap for enumeration.
pub const DEFAULT_MAX_CROSSINGS: usize = 16;

/// How a corner sits relative to the two oriented strands at its crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadrantRole {
    /// Between the two incoming edges.
    Incoming,
    /// Between the two outgoing edges.
    Outgoing,
    /// Between the incoming under-edge and the outgoing over-edge.
    UnderInOverOut,
    /// Between the outgoing under-edge and the incoming over-edge.
    UnderOutOverIn,
}

impl QuadrantRole {
    /// Corner `q` lies between slots `q` and `q + 1` (counterclockwise).
    pub fn of(d: &KnotDiagram, crossing: usize, corner: usize) -> Self {
        let over_in = d.over_in_slot(crossing);
        let (a, b) = (corner, (corner + 1) % 4);
        let (under, over) = if a % 2 == 0 { (a, b) } else { (b, a) };
        match (under == 0, over == over_in) {
            (true, true) => QuadrantRole::Incoming,
            (false, false) => QuadrantRole::Outgoing,
            (true, false) => QuadrantRole::UnderInOverOut,
            (false, true) => QuadrantRole::UnderOutOverIn,
        }
    }

    /// Twice the local Alexander weight.
    pub fn doubled_alexander_weight(self) -> i32 {
        match self {
            QuadrantRole::Incoming => -1,
            QuadrantRole::Outgoing => 1,
            _ => 0,
        }
    }

    /// Local sign exponent, meaningful mod 2.
    pub fn parity_weight(self, sign: i8) -> i32 {
        match (sign > 0, self) {
            (true, QuadrantRole::Outgoing) | (false, QuadrantRole::Incoming) => 1,
            _ => 0,
        }
    }
}

/// Regions of the projection, indexed by corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    corner_region: Vec<[usize; 4]>,
    count: usize,
}

impl Regions {
    /// Traces the faces of the 4-valent planar graph. A connected planar
    /// projection with `c` crossings has `c + 2` of them.
    pub fn of(d: &KnotDiagram) -> Result<Self> {
        let c = d.crossing_count();
        let mut corner_region = vec![[usize::MAX; 4]; c];
        let mut count = 0;
        for ci in 0..c {
            for q in 0..4 {
                if corner_region[ci][q] != usize::MAX {
                    continue;
                }
                let (mut cc, mut cq) = (ci, q);
                while corner_region[cc][cq] == usize::MAX {
                    corner_region[cc][cq] = count;
                    let (nc, ns) = d.other_end(cc, (cq + 1) % 4);
                    cc = nc;
                    cq = ns;
                }
                count += 1;
            }
        }
        if c > 0 && count != c + 2 {
            return Err(Error::NonPlanar {
                faces: count,
                crossings: c,
            });
        }
        Ok(Self {
            corner_region,
            count,
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn region(&self, crossing: usize, corner: usize) -> usize {
        self.corner_region[crossing][corner]
    }

    /// The two regions on either side of an edge.
    pub fn beside_edge(&self, d: &KnotDiagram, edge: usize) -> Option<[usize; 2]> {
        let (ci, s) = d.occurrence(edge)?;
        Some([self.region(ci, s), self.region(ci, (s + 3) % 4)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KauffmanState {
    /// Corner code (0..4) chosen at each crossing.
    pub assignment: Vec<u8>,
    /// Region occupied by each crossing.
    pub regions: Vec<usize>,
    /// Sum of doubled local Alexander weights.
    pub doubled_weight: i32,
    pub m_parity_weight: i32,
    /// Filled in by [`normalize_s`].
    pub s_grading: Option<i32>,
    diagram_key: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFamily {
    pub diagram: KnotDiagram,
    pub states: Vec<KauffmanState>,
    key: u64,
}

impl StateFamily {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.states.iter().all(|s| s.s_grading.is_some())
    }

    pub fn grades(&self) -> Option<Vec<i32>> {
        self.states.iter().map(|s| s.s_grading).collect()
    }
}

fn diagram_key(d: &KnotDiagram) -> u64 {
    let mut h = DefaultHasher::new();
    d.hash(&mut h);
    h.finish()
}

/// All Kauffman states, in lexicographic order of (crossing, corner).
pub fn enumerate_states(d: &KnotDiagram, max_crossings: usize) -> Result<StateFamily> {
    let c = d.crossing_count();
    if c > max_crossings {
        return Err(Error::Resource(format!(
            "{c} crossings exceeds cap {max_crossings}"
        )));
    }
    let key = diagram_key(d);
    if d.is_unknot_literal() {
        return Ok(StateFamily {
            diagram: d.clone(),
            states: vec![KauffmanState {
                assignment: Vec::new(),
                regions: Vec::new(),
                doubled_weight: 0,
                m_parity_weight: 0,
                s_grading: None,
                diagram_key: key,
            }],
            key,
        });
    }
    let regions = Regions::of(d)?;
    let mut used = vec![false; regions.count()];
    let mark = d.marked_edge().expect("crossings imply a marked edge");
    for r in regions.beside_edge(d, mark).expect("marked edge exists") {
        used[r] = true;
    }
    let roles: Vec<[QuadrantRole; 4]> = (0..c)
        .map(|ci| std::array::from_fn(|q| QuadrantRole::of(d, ci, q)))
        .collect();

    let mut states = Vec::new();
    let mut stack: Vec<u8> = Vec::with_capacity(c);
    search(d, &regions, &roles, &mut used, &mut stack, key, &mut states);
    Ok(StateFamily {
        diagram: d.clone(),
        states,
        key,
    })
}

fn search(
    d: &KnotDiagram,
    regions: &Regions,
    roles: &[[QuadrantRole; 4]],
    used: &mut [bool],
    stack: &mut Vec<u8>,
    key: u64,
    out: &mut Vec<KauffmanState>,
) {
    let ci = stack.len();
    if ci == roles.len() {
        let mut s = KauffmanState {
            assignment: stack.clone(),
            regions: Vec::with_capacity(ci),
            doubled_weight: 0,
            m_parity_weight: 0,
            s_grading: None,
            diagram_key: key,
        };
        for (i, &q) in stack.iter().enumerate() {
            let role = roles[i][q as usize];
            s.regions.push(regions.region(i, q as usize));
            s.doubled_weight += role.doubled_alexander_weight();
            s.m_parity_weight += role.parity_weight(d.signs()[i]);
        }
        out.push(s);
        return;
    }
    for q in 0..4u8 {
        let r = regions.region(ci, q as usize);
        if used[r] {
            continue;
        }
        used[r] = true;
        stack.push(q);
        search(d, regions, roles, used, stack, key, out);
        stack.pop();
        used[r] = false;
    }
}

/// The relative grading `s(x) - s(y)`.
pub fn difference_epsilon(x: &KauffmanState, y: &KauffmanState) -> Result<i32> {
    if x.diagram_key != y.diagram_key || x.assignment.len() != y.assignment.len() {
        return Err(Error::DiagramMismatch);
    }
    let diff = x.doubled_weight - y.doubled_weight;
    if diff % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "odd doubled difference {diff}"
        )));
    }
    Ok(diff / 2)
}

/// Whether `#{s = i}` and `#{s = -i}` agree mod 2 for every `i`.
pub fn is_mod2_symmetric(grades: &[i32]) -> bool {
    let mut parity: BTreeMap<i32, bool> = BTreeMap::new();
    for &g in grades {
        *parity.entry(g).or_insert(false) ^= true;
    }
    parity
        .iter()
        .all(|(&g, &odd)| parity.get(&-g).copied().unwrap_or(false) == odd)
}

/// The unique integer shift making relative grades mod-2 symmetric.
pub fn symmetric_shift(relative: &[i32]) -> Result<i32> {
    let (lo, hi) = match (relative.iter().min(), relative.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(Error::Inconsistent("no states".into())),
    };
    // a shift outside [-hi, -lo] puts the whole support on one side of 0
    let candidates: Vec<i32> = (-hi..=-lo)
        .filter(|&t| {
            let shifted: Vec<i32> = relative.iter().map(|r| r + t).collect();
            is_mod2_symmetric(&shifted)
        })
        .collect();
    match candidates.as_slice() {
        [t] => Ok(*t),
        [] => Err(Error::Inconsistent(
            "no shift satisfies the mod-2 symmetry".into(),
        )),
        many => Err(Error::Inconsistent(format!(
            "{} shifts satisfy the mod-2 symmetry",
            many.len()
        ))),
    }
}

/// Fills `s_grading` so that `s(x) - s(y) = epsilon(x, y)` and the counts
/// are symmetric mod 2.
pub fn normalize_s(f: &StateFamily) -> Result<StateFamily> {
    let first = f
        .states
        .first()
        .ok_or_else(|| Error::Inconsistent("empty state family".into()))?;
    let relative = f
        .states
        .iter()
        .map(|s| difference_epsilon(s, first))
        .collect::<Result<Vec<_>>>()?;
    let shift = symmetric_shift(&relative)?;
    let mut out = f.clone();
    for (s, r) in out.states.iter_mut().zip(relative) {
        s.s_grading = Some(r + shift);
    }
    Ok(out)
}

/// `sum_x (-1)^m(x) T^s(x)`, symmetric-normalized.
pub fn alexander_from_states(f: &StateFamily) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for s in &f.states {
        let g = s
            .s_grading
            .ok_or_else(|| Error::Inconsistent("state family is not normalized".into()))?;
        let sign = if s.m_parity_weight.rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        p.add_term(g, sign);
    }
    p.symmetric_normalized()
}

/// Largest `s` over the states; bounds the Seifert genus from above.
pub fn max_s(f: &StateFamily) -> Result<i32> {
    f.states
        .iter()
        .map(|s| s.s_grading)
        .collect::<Option<Vec<_>>>()
        .and_then(|g| g.into_iter().max())
        .ok_or_else(|| Error::Inconsistent("state family is not normalized".into()))
}

/// Enumerate, normalize and sum in one call.
#[derive(Debug, Clone)]
pub struct KauffmanSummary {
    pub family: StateFamily,
    pub delta: LaurentPoly,
    pub max_s: i32,
}

pub fn analyze_diagram(d: &KnotDiagram, max_crossings: usize) -> Result<KauffmanSummary> {
    let family = normalize_s(&enumerate_states(d, max_crossings)?)?;
    let delta = alexander_from_states(&family)?;
    let max_s = max_s(&family)?;
    Ok(KauffmanSummary {
        family,
        delta,
        max_s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_pd;

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) mark=1";

    fn family(pd: &str) -> StateFamily {
        enumerate_states(&parse_pd(pd).unwrap(), DEFAULT_MAX_CROSSINGS).unwrap()
    }

    #[test]
    fn state_counts() {
        assert_eq!(family(TREFOIL).len(), 3);
        assert_eq!(family(FIGURE_EIGHT).len(), 5);
        assert_eq!(family("unknot").len(), 1);
        assert!(family("unknot").states[0].assignment.is_empty());
    }

    #[test]
    fn regions_of_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        let r = Regions::of(&d).unwrap();
        assert_eq!(r.count(), 5);
        let [a, b] = r.beside_edge(&d, 1).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn states_are_bijections_avoiding_marked_regions() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let r = Regions::of(&d).unwrap();
        let forbidden = r.beside_edge(&d, 1).unwrap();
        for s in family(FIGURE_EIGHT).states {
            let mut seen = s.regions.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), 4);
            assert!(s.regions.iter().all(|g| !forbidden.contains(g)));
        }
    }

    #[test]
    fn epsilon_on_trefoil() {
        let f = family(TREFOIL);
        let x = &f.states;
        assert_eq!(difference_epsilon(&x[0], &x[0]).unwrap(), 0);
        assert_eq!(difference_epsilon(&x[0], &x[2]).unwrap(), 2);
        for a in x {
            for b in x {
                for c in x {
                    let ab = difference_epsilon(a, b).unwrap();
                    let bc = difference_epsilon(b, c).unwrap();
                    assert_eq!(ab + bc, difference_epsilon(a, c).unwrap());
                }
                assert_eq!(
                    difference_epsilon(a, b).unwrap(),
                    -difference_epsilon(b, a).unwrap()
                );
            }
        }
    }

    #[test]
    fn epsilon_across_diagrams_is_an_error() {
        let a = family(TREFOIL);
        let b = family(FIGURE_EIGHT);
        assert_eq!(
            difference_epsilon(&a.states[0], &b.states[0]),
            Err(Error::DiagramMismatch)
        );
        let remarked = enumerate_states(
            &parse_pd(TREFOIL).unwrap().remarked(2).unwrap(),
            DEFAULT_MAX_CROSSINGS,
        )
        .unwrap();
        assert_eq!(
            difference_epsilon(&a.states[0], &remarked.states[0]),
            Err(Error::DiagramMismatch)
        );
    }

    #[test]
    fn shifts() {
        assert_eq!(symmetric_shift(&[0, 1, 2]).unwrap(), -1);
        assert_eq!(symmetric_shift(&[0, 1, 1, 1, 2]).unwrap(), -1);
        assert_eq!(symmetric_shift(&[7]).unwrap(), -7);
        assert!(symmetric_shift(&[0, 1]).is_err());
        assert!(symmetric_shift(&[]).is_err());
    }

    #[test]
    fn trefoil_and_figure_eight_sums() {
        let t = analyze_diagram(&parse_pd(TREFOIL).unwrap(), 16).unwrap();
        assert_eq!(t.delta, LaurentPoly::from_symmetric_coeffs(&[1, -1, 1]));
        assert_eq!(t.max_s, 1);
        let mut g = t.family.grades().unwrap();
        g.sort_unstable();
        assert_eq!(g, vec![-1, 0, 1]);

        let e = analyze_diagram(&parse_pd(FIGURE_EIGHT).unwrap(), 16).unwrap();
        assert_eq!(e.delta, LaurentPoly::from_symmetric_coeffs(&[-1, 3, -1]));
        assert_eq!(e.max_s, 1);

        let u = analyze_diagram(&parse_pd("unknot").unwrap(), 16).unwrap();
        assert_eq!(u.delta, LaurentPoly::one());
        assert_eq!(u.max_s, 0);
    }

    #[test]
    fn crossing_cap() {
        assert!(matches!(
            enumerate_states(&parse_pd(TREFOIL).unwrap(), 2),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn unnormalized_family_is_rejected() {
        let f = family(TREFOIL);
        assert!(alexander_from_states(&f).is_err());
        assert!(max_s(&f).is_err());
    }
}
