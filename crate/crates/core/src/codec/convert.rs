use super::braid::BraidWord;
use super::grid::GridDiagram;
use crate::error::{Error, Result};

/// Default bound on grid size: `10!` generators is the single-machine ceiling.
pub const DEFAULT_MAX_GRID: usize = 10;

/// Horizontal segments in braid-time order: each moves a strand from one
/// column to another, the strand passing under any column in between.
struct Staircase {
    /// Column ids in left-to-right order.
    order: Vec<usize>,
    /// Column id currently occupied by each braid position.
    position: Vec<usize>,
    /// `(from column, to column)` per row, top row first.
    rows: Vec<(usize, usize)>,
    next_id: usize,
}

impl Staircase {
    fn new(strands: usize) -> Self {
        Self {
            order: (0..strands).collect(),
            position: (0..strands).collect(),
            rows: Vec::new(),
            next_id: strands,
        }
    }

    fn fresh_column(&mut self, at: usize) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.order.insert(at, id);
        id
    }

    fn index_of(&self, column: usize) -> usize {
        self.order.iter().position(|&c| c == column).unwrap()
    }

    /// Strand at `pos` moves one column to the right without crossing.
    fn kink(&mut self, pos: usize) {
        let from = self.position[pos];
        let to = self.fresh_column(self.index_of(from) + 1);
        self.rows.push((from, to));
        self.position[pos] = to;
    }

    fn letter(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let (left, right) = (self.position[i], self.position[i + 1]);
        if letter > 0 {
            // left strand passes under the right one
            let to = self.fresh_column(self.index_of(right) + 1);
            self.rows.push((left, to));
            self.position[i] = right;
            self.position[i + 1] = to;
        } else {
            let to = self.fresh_column(self.index_of(left));
            self.rows.push((right, to));
            self.position[i] = to;
            self.position[i + 1] = left;
        }
    }

    fn run(strands: usize, letters: &[i32], kinks: &[usize]) -> Self {
        let mut s = Self::new(strands);
        for &p in kinks {
            s.kink(p);
        }
        for &l in letters {
            s.letter(l);
        }
        s
    }
}

/// Grid presenting the closure of `braid`, of size `strands + letters`
/// (plus one when a strand's column would close on itself, which for a
/// knot closure only happens to the single strand of the empty braid).
///
/// Each letter contributes one column and one row; each strand contributes a
/// column and a closing row. Closing rows reconnect final positions to the
/// initial columns in an order that never passes one closing strand across
/// another.
pub fn braid_to_grid(braid: &BraidWord, max_grid: usize) -> Result<GridDiagram> {
    let k = braid.strand_count();
    let letters = braid.letters();
    let mut s = Staircase::run(k, letters, &[]);
    let kinks: Vec<usize> = (0..k).filter(|&p| s.position[p] == p).collect();
    let n = k + letters.len() + kinks.len();
    if n > max_grid {
        return Err(Error::Resource(format!(
            "grid size {n} exceeds cap {max_grid}"
        )));
    }
    if !kinks.is_empty() {
        s = Staircase::run(k, letters, &kinks);
    }

    let mut col_index = vec![0; s.next_id];
    for (idx, &id) in s.order.iter().enumerate() {
        col_index[id] = idx;
    }
    let (mut rightward, mut leftward): (Vec<usize>, Vec<usize>) =
        (0..k).partition(|&p| col_index[p] > col_index[s.position[p]]);
    rightward.reverse();
    leftward.sort_unstable();
    for p in rightward.into_iter().chain(leftward) {
        s.rows.push((s.position[p], p));
    }
    debug_assert_eq!(s.rows.len(), n);

    let mut o = vec![0; n];
    let mut x = vec![0; n];
    for (t, &(from, to)) in s.rows.iter().enumerate() {
        let row = n - 1 - t;
        o[col_index[from]] = row;
        x[col_index[to]] = row;
    }
    GridDiagram::new(o, x)
}
