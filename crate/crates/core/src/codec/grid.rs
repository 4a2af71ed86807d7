use std::fmt;
use std::str::FromStr;

use super::lex::Cursor;
use crate::error::{Error, Result};

/// Grid sizes are bounded so a generator fits a packed 64-bit word.
pub const MAX_REPRESENTABLE_GRID: usize = 16;

/// An `n x n` toroidal grid. `o[col]` and `x[col]` are the rows of the O and
/// X markers in each column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    o: Vec<usize>,
    x: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    O,
    X,
}

impl GridDiagram {
    pub fn new(o: Vec<usize>, x: Vec<usize>) -> Result<Self> {
        let n = o.len();
        if !(2..=MAX_REPRESENTABLE_GRID).contains(&n) {
            return Err(Error::Syntax(format!(
                "grid size {n} outside 2..={MAX_REPRESENTABLE_GRID}"
            )));
        }
        if x.len() != n {
            return Err(Error::Syntax(format!(
                "O has {n} entries but X has {}",
                x.len()
            )));
        }
        check_permutation(&o, "O")?;
        check_permutation(&x, "X")?;
        if let Some(column) = (0..n).find(|&c| o[c] == x[c]) {
            return Err(Error::SharedCell { column });
        }
        let g = Self { o, x };
        let components = g.component_count();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        Ok(g)
    }

    /// The 2x2 grid of the unknot.
    pub fn unknot() -> Self {
        Self {
            o: vec![0, 1],
            x: vec![1, 0],
        }
    }

    pub fn size(&self) -> usize {
        self.o.len()
    }

    pub fn o(&self) -> &[usize] {
        &self.o
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    /// Number of link components: cycles of column -> column following the
    /// vertical segment from O to X and then the horizontal segment in that
    /// row back to the next O.
    pub fn component_count(&self) -> usize {
        let n = self.size();
        let mut col_of_o = vec![0; n];
        for (c, &r) in self.o.iter().enumerate() {
            col_of_o[r] = c;
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = col_of_o[self.x[c]];
            }
        }
        count
    }

    /// Replaces the marker of the given kind in `column` by an L of three
    /// markers, inserting a new column right of it and a new row above it.
    /// The knot type is unchanged.
    pub fn stabilize(&self, column: usize, marker: Marker) -> Self {
        let (a, b) = match marker {
            Marker::O => (&self.o, &self.x),
            Marker::X => (&self.x, &self.o),
        };
        let r = a[column];
        let bump = |v: usize| if v > r { v + 1 } else { v };
        let mut na: Vec<usize> = a.iter().map(|&v| bump(v)).collect();
        let mut nb: Vec<usize> = b.iter().map(|&v| bump(v)).collect();
        let old_partner = nb[column];
        nb[column] = r + 1;
        na.insert(column + 1, r + 1);
        nb.insert(column + 1, old_partner);
        match marker {
            Marker::O => Self { o: na, x: nb },
            Marker::X => Self { o: nb, x: na },
        }
    }
}

fn check_permutation(v: &[usize], which: &'static str) -> Result<()> {
    let n = v.len();
    let mut seen = vec![false; n];
    for &r in v {
        if r >= n || seen[r] {
            return Err(Error::NotAPermutation { which, n });
        }
        seen[r] = true;
    }
    Ok(())
}

/// Parses `n=<size>; O=[..]; X=[..]`. Fields may appear in any order and be
/// separated by whitespace, newlines or semicolons.
pub fn parse_grid(text: &str) -> Result<GridDiagram> {
    let mut p = Cursor::new(text);
    let mut n = None;
    let mut o = None;
    let mut x = None;
    loop {
        p.skip_separators();
        if p.at_end() {
            break;
        }
        let key = p.ident()?;
        p.expect('=')?;
        match key.as_str() {
            "n" if n.is_none() => n = Some(p.number()?),
            "O" if o.is_none() => o = Some(p.list()?),
            "X" if x.is_none() => x = Some(p.list()?),
            "n" | "O" | "X" => return Err(Error::Syntax(format!("duplicate field `{key}`"))),
            other => return Err(Error::Syntax(format!("unknown grid field `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Syntax("missing field `n`".into()))?;
    let o = o.ok_or_else(|| Error::Syntax("missing field `O`".into()))?;
    let x = x.ok_or_else(|| Error::Syntax("missing field `X`".into()))?;
    if o.len() != n || x.len() != n {
        return Err(Error::Syntax(format!(
            "n={n} but O has {} and X has {} entries",
            o.len(),
            x.len()
        )));
    }
    GridDiagram::new(o, x)
}

impl FromStr for GridDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_grid(s)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, r) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{r}")?;
    }
    write!(f, "]")
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; O=", self.size())?;
        write_list(f, &self.o)?;
        write!(f, "; X=")?;
        write_list(f, &self.x)
    }
}
