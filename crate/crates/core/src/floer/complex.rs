use std::collections::BTreeMap;

use rayon::prelude::*;

use super::gradings::GradingContext;
use crate::codec::GridDiagram;
use crate::error::{Error, Result};
use crate::perm::{factorial, PackedPerm};

/// Generators handled per parallel work item when grading all of `S_n`.
const GRADING_CHUNK: u64 = 40_320;

/// One Alexander grading of the tilde complex. The differential preserves
/// the Alexander grading, so strata are independent complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumComplex {
    pub alexander: i32,
    /// Lexicographic ranks of the generators, ascending.
    pub generators: Vec<u64>,
    pub maslov: Vec<i32>,
    /// `boundary[i]` lists the local indices in the boundary of generator
    /// `i`, sorted, with coefficients in the two-element field.
    pub boundary: Vec<Vec<u32>>,
}

impl StratumComplex {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn arrow_count(&self) -> usize {
        self.boundary.iter().map(Vec::len).sum()
    }

    /// Index of the first generator whose boundary of the boundary is
    /// nonzero.
    pub fn square_defect(&self) -> Option<usize> {
        let mut scratch = Vec::new();
        for (i, targets) in self.boundary.iter().enumerate() {
            scratch.clear();
            for &t in targets {
                scratch.extend_from_slice(&self.boundary[t as usize]);
            }
            scratch.sort_unstable();
            if scratch.chunks(2).any(|w| w.len() == 1 || w[0] != w[1]) {
                return Some(i);
            }
        }
        None
    }
}

/// The tilde grid complex split by Alexander grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBoundary {
    pub grid_size: usize,
    pub strata: Vec<StratumComplex>,
}

impl SparseBoundary {
    pub fn generator_count(&self) -> u64 {
        self.strata.iter().map(|s| s.len() as u64).sum()
    }

    pub fn arrow_count(&self) -> u64 {
        self.strata.iter().map(|s| s.arrow_count() as u64).sum()
    }

    /// Checks that the boundary squares to zero in every stratum.
    pub fn check_square_zero(&self) -> Result<()> {
        let defect = self
            .strata
            .par_iter()
            .find_map_any(|s| s.square_defect().map(|i| s.generators[i]));
        match defect {
            Some(generator) => Err(Error::BoundarySquare { generator }),
            None => Ok(()),
        }
    }

    /// Checks every arrow lowers Maslov by one; Alexander is preserved by
    /// construction of the strata.
    pub fn check_arrow_gradings(&self) -> Result<()> {
        for s in &self.strata {
            for (i, targets) in s.boundary.iter().enumerate() {
                for &t in targets {
                    if s.maslov[t as usize] != s.maslov[i] - 1 {
                        return Err(Error::ArrowGrading {
                            from: s.generators[i],
                            to: s.generators[t as usize],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Column pairs `(left, right)` of the empty rectangles starting at a
/// generator: rectangles on the torus with lower-left corner `(left,
/// x[left])` and upper-right corner `(right, x[right])` whose interior
/// holds no marker and no point of the generator.
pub fn empty_rectangles(o: &[u8], x: &[u8], matching: &[u8], out: &mut Vec<(usize, usize)>) {
    let n = matching.len();
    let dist = |row: u8, base: u8| (row as usize + n - base as usize) % n;
    for left in 0..n {
        let base = matching[left];
        // smallest height above `base` of anything already inside the strip
        let mut room = n;
        for width in 1..n {
            let prev = (left + width - 1) % n;
            room = room.min(dist(o[prev], base)).min(dist(x[prev], base));
            if width > 1 {
                room = room.min(dist(matching[prev], base));
            }
            if room == 0 {
                break;
            }
            let right = (left + width) % n;
            let height = dist(matching[right], base);
            if height <= room {
                out.push((left, right));
            }
        }
    }
}

/// Builds the tilde complex of `g`: generators are all `n!` matchings and
/// each empty rectangle contributes one arrow (mod 2).
pub fn build_tilde_complex(g: &GridDiagram, max_grid: usize) -> Result<SparseBoundary> {
    let n = g.size();
    if n > max_grid {
        return Err(Error::Resource(format!(
            "grid size {n} exceeds cap {max_grid}"
        )));
    }
    let total = factorial(n);
    let ctx = GradingContext::new(g);

    let chunks = total.div_ceil(GRADING_CHUNK);
    let graded: Vec<Vec<(i16, i16)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * GRADING_CHUNK;
            let end = (start + GRADING_CHUNK).min(total);
            let mut p = PackedPerm::unrank(n, start);
            let mut rows = [0u8; 16];
            let mut out = Vec::with_capacity((end - start) as usize);
            for _ in start..end {
                for (i, r) in rows.iter_mut().enumerate().take(n) {
                    *r = p.get(i) as u8;
                }
                let (m, a) = ctx.gradings(&rows[..n]);
                out.push((m as i16, a as i16));
                p.advance();
            }
            out
        })
        .collect();
    let grades: Vec<(i16, i16)> = graded.into_iter().flatten().collect();

    let mut by_alexander: BTreeMap<i16, Vec<u64>> = BTreeMap::new();
    for (r, &(_, a)) in grades.iter().enumerate() {
        by_alexander.entry(a).or_default().push(r as u64);
    }
    let mut local = vec![0u32; total as usize];
    for gens in by_alexander.values() {
        for (i, &r) in gens.iter().enumerate() {
            local[r as usize] = i as u32;
        }
    }

    let o: Vec<u8> = g.o().iter().map(|&r| r as u8).collect();
    let x: Vec<u8> = g.x().iter().map(|&r| r as u8).collect();
    let strata = by_alexander
        .into_par_iter()
        .map(|(a, generators)| {
            let mut rects = Vec::new();
            let mut targets: Vec<u32> = Vec::new();
            let mut rows = [0u8; 16];
            let mut boundary = Vec::with_capacity(generators.len());
            for &r in &generators {
                let p = PackedPerm::unrank(n, r);
                for (i, slot) in rows.iter_mut().enumerate().take(n) {
                    *slot = p.get(i) as u8;
                }
                rects.clear();
                empty_rectangles(&o, &x, &rows[..n], &mut rects);
                targets.clear();
                for &(left, right) in &rects {
                    let mut q = p;
                    q.swap(left, right);
                    let t = q.rank();
                    let (tm, ta) = grades[t as usize];
                    if ta != a || tm != grades[r as usize].0 - 1 {
                        return Err(Error::ArrowGrading { from: r, to: t });
                    }
                    targets.push(local[t as usize]);
                }
                targets.sort_unstable();
                boundary.push(cancel_pairs(&targets));
            }
            let maslov = generators
                .iter()
                .map(|&r| grades[r as usize].0 as i32)
                .collect();
            Ok(StratumComplex {
                alexander: a as i32,
                generators,
                maslov,
                boundary,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SparseBoundary {
        grid_size: n,
        strata,
    })
}

/// Keeps the entries of a sorted list that occur an odd number of times.
fn cancel_pairs(sorted: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(sorted.len());
    for &t in sorted {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}
