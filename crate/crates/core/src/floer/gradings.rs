use crate::codec::GridDiagram;

/// A generator of the grid complex with its bigrading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGenerator {
    /// `matching[col]` is the row of the intersection point in that column.
    pub matching: Vec<usize>,
    pub maslov: i32,
    pub alexander: i32,
}

/// Precomputed marker data for evaluating `(M, A)` on many generators.
///
/// Generator points sit at integer lattice points `(col, row)`, markers at
/// cell centres `(col + 1/2, row + 1/2)`. With `I(P, Q)` the number of pairs
/// `p` in `P`, `q` in `Q` with `p` strictly south-west of `q`,
///
/// `M_O(x) = I(x,x) - I(x,O) - I(O,x) + I(O,O) + 1`,
/// `A(x) = (M_O(x) - M_X(x) - (n - 1)) / 2`.
#[derive(Debug, Clone)]
pub struct GradingContext {
    n: usize,
    o: Vec<u8>,
    x: Vec<u8>,
    oo: i32,
    xx: i32,
}

fn self_pairs(rows: &[u8]) -> i32 {
    let mut c = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            c += (rows[i] < rows[j]) as i32;
        }
    }
    c
}

impl GradingContext {
    pub fn new(g: &GridDiagram) -> Self {
        let o: Vec<u8> = g.o().iter().map(|&r| r as u8).collect();
        let x: Vec<u8> = g.x().iter().map(|&r| r as u8).collect();
        Self {
            n: g.size(),
            oo: self_pairs(&o),
            xx: self_pairs(&x),
            o,
            x,
        }
    }

    /// `I(x, markers) + I(markers, x)`.
    #[inline]
    fn mixed_pairs(points: &[u8], markers: &[u8]) -> i32 {
        let mut c = 0;
        for (i, &p) in points.iter().enumerate() {
            for (j, &m) in markers.iter().enumerate() {
                c += if i <= j {
                    (p <= m) as i32
                } else {
                    (m < p) as i32
                };
            }
        }
        c
    }

    /// `(M, A)` for a generator given as rows per column.
    #[inline]
    pub fn gradings(&self, matching: &[u8]) -> (i32, i32) {
        debug_assert_eq!(matching.len(), self.n);
        let xx = self_pairs(matching);
        let m_o = xx - Self::mixed_pairs(matching, &self.o) + self.oo + 1;
        let m_x = xx - Self::mixed_pairs(matching, &self.x) + self.xx + 1;
        let twice_a = m_o - m_x - (self.n as i32 - 1);
        debug_assert!(twice_a % 2 == 0);
        (m_o, twice_a / 2)
    }
}

/// Maslov and Alexander gradings of one generator.
pub fn grid_gradings(g: &GridDiagram, matching: &[usize]) -> (i32, i32) {
    let rows: Vec<u8> = matching.iter().map(|&r| r as u8).collect();
    GradingContext::new(g).gradings(&rows)
}
