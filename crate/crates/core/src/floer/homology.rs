use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use super::complex::{SparseBoundary, StratumComplex};
use super::ranks::BigradedRanks;
use crate::error::Result;

/// Bigraded ranks of the homology over the two-element field.
///
/// Fails if the boundary does not square to zero. Strata are reduced
/// independently and in parallel; each reduction is sequential and
/// deterministic.
pub fn homology_f2(b: &SparseBoundary) -> Result<BigradedRanks> {
    b.check_square_zero()?;
    let per_stratum: Vec<Vec<(i32, u64)>> = b.strata.par_iter().map(stratum_homology).collect();
    let mut out = BigradedRanks::new();
    for (s, ranks) in b.strata.iter().zip(per_stratum) {
        for (m, r) in ranks {
            out.add(m, s.alexander, r);
        }
    }
    Ok(out)
}

/// Surviving generator counts per Maslov grading after cancelling every
/// arrow of the stratum.
fn stratum_homology(s: &StratumComplex) -> Vec<(i32, u64)> {
    let mut red = Reducer::new(&s.boundary);
    red.run();
    let mut counts = std::collections::BTreeMap::new();
    for (i, &alive) in red.alive.iter().enumerate() {
        if alive {
            *counts.entry(s.maslov[i]).or_insert(0u64) += 1;
        }
    }
    counts.into_iter().collect()
}

/// Gaussian elimination on the chain complex itself: cancelling an arrow
/// `x -> y` deletes both generators and adds `z -> w` for every zigzag
/// `z -> y`, `x -> w`. The surviving generators have no arrows left and
/// form a basis of homology.
///
/// Pivots: the live source with fewest outgoing arrows, then its target with
/// fewest incoming arrows, ties to the lowest index. This keeps fill-in low.
struct Reducer {
    out: Vec<Vec<u32>>,
    inc: Vec<Vec<u32>>,
    alive: Vec<bool>,
    // sources whose out-list changed during the last cancellation
    pending: Vec<u32>,
}

fn toggle(v: &mut Vec<u32>, t: u32) {
    match v.binary_search(&t) {
        Ok(i) => {
            v.remove(i);
        }
        Err(i) => v.insert(i, t),
    }
}

fn remove(v: &mut Vec<u32>, t: u32) {
    if let Ok(i) = v.binary_search(&t) {
        v.remove(i);
    }
}

impl Reducer {
    fn new(boundary: &[Vec<u32>]) -> Self {
        let n = boundary.len();
        let mut inc = vec![Vec::new(); n];
        for (i, targets) in boundary.iter().enumerate() {
            for &t in targets {
                inc[t as usize].push(i as u32);
            }
        }
        // sources were pushed in increasing order, so each list is sorted
        Self {
            out: boundary.to_vec(),
            inc,
            alive: vec![true; n],
            pending: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut heap: BinaryHeap<Reverse<(usize, u32)>> = (0..self.out.len() as u32)
            .filter(|&x| !self.out[x as usize].is_empty())
            .map(|x| Reverse((self.out[x as usize].len(), x)))
            .collect();
        while let Some(Reverse((deg, x))) = heap.pop() {
            let xu = x as usize;
            // stale entry
            if !self.alive[xu] || self.out[xu].len() != deg || deg == 0 {
                continue;
            }
            let y = *self.out[xu]
                .iter()
                .min_by_key(|&&y| (self.inc[y as usize].len(), y))
                .unwrap();
            self.cancel(x, y);
            for z in self.pending.drain(..) {
                let d = self.out[z as usize].len();
                if d > 0 {
                    heap.push(Reverse((d, z)));
                }
            }
        }
    }

    fn cancel(&mut self, x: u32, y: u32) {
        let (xu, yu) = (x as usize, y as usize);
        let x_out = std::mem::take(&mut self.out[xu]);
        let x_in = std::mem::take(&mut self.inc[xu]);
        let y_out = std::mem::take(&mut self.out[yu]);
        let y_in = std::mem::take(&mut self.inc[yu]);
        for &w in &x_out {
            if w != y {
                remove(&mut self.inc[w as usize], x);
            }
        }
        for &z in &x_in {
            remove(&mut self.out[z as usize], x);
            self.pending.push(z);
        }
        for &w in &y_out {
            remove(&mut self.inc[w as usize], y);
        }
        for &z in &y_in {
            if z != x {
                remove(&mut self.out[z as usize], y);
                self.pending.push(z);
            }
        }
        self.alive[xu] = false;
        self.alive[yu] = false;
        for &z in y_in.iter().filter(|&&z| z != x) {
            for &w in x_out.iter().filter(|&&w| w != y) {
                toggle(&mut self.out[z as usize], w);
                toggle(&mut self.inc[w as usize], z);
            }
        }
    }
}
