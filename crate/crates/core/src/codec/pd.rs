use std::fmt;
use std::str::FromStr;

use super::lex::Cursor;
use crate::error::{Error, Result};

/// Literal accepted in place of a crossing list for the crossingless unknot.
pub const UNKNOT_LITERAL: &str = "unknot";

/// An oriented knot projection in planar-diagram form with a marked edge.
///
/// Each crossing lists four edge labels counterclockwise starting from the
/// incoming under-edge, so slot 0 is the incoming and slot 2 the outgoing
/// under-edge. Orientation of the over-strand and the crossing sign are
/// derived by tracing the knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotDiagram {
    crossings: Vec<[usize; 4]>,
    over_in_slot: Vec<u8>,
    signs: Vec<i8>,
    marked_edge: Option<usize>,
}

impl KnotDiagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            over_in_slot: Vec::new(),
            signs: Vec::new(),
            marked_edge: None,
        }
    }

    /// Validates a crossing list and derives orientation and signs.
    pub fn new(crossings: Vec<[usize; 4]>, marked_edge: usize) -> Result<Self> {
        let c = crossings.len();
        if c == 0 {
            return Err(Error::Syntax(format!(
                "empty crossing list; use `{UNKNOT_LITERAL}` for the trivial diagram"
            )));
        }
        let edges = 2 * c;
        let mut count = vec![0usize; edges + 1];
        for t in &crossings {
            for &e in t {
                if e == 0 || e > edges {
                    return Err(Error::Syntax(format!("edge label {e} outside 1..={edges}")));
                }
                count[e] += 1;
            }
        }
        if let Some(edge) = (1..=edges).find(|&e| count[e] != 2) {
            return Err(Error::EdgeMultiplicity {
                edge,
                count: count[edge],
            });
        }
        if marked_edge == 0 || marked_edge > edges {
            return Err(Error::Syntax(format!(
                "marked edge {marked_edge} outside 1..={edges}"
            )));
        }

        let mut d = Self {
            crossings,
            over_in_slot: vec![0; c],
            signs: vec![0; c],
            marked_edge: Some(marked_edge),
        };
        d.orient()?;
        Ok(d)
    }

    /// Like [`KnotDiagram::new`] but also cross-checks declared signs.
    pub fn with_declared_signs(
        crossings: Vec<[usize; 4]>,
        marked_edge: usize,
        declared: &[i8],
    ) -> Result<Self> {
        let d = Self::new(crossings, marked_edge)?;
        if declared.len() != d.crossing_count() {
            return Err(Error::Syntax(format!(
                "{} signs declared for {} crossings",
                declared.len(),
                d.crossing_count()
            )));
        }
        for (crossing, (&declared, &computed)) in declared.iter().zip(&d.signs).enumerate() {
            if declared != computed {
                return Err(Error::SignMismatch {
                    crossing,
                    declared,
                    computed,
                });
            }
        }
        Ok(d)
    }

    /// Walks the knot from the outgoing under-edge of crossing 0.
    fn orient(&mut self) -> Result<()> {
        let c = self.crossings.len();
        let total = 2 * c;
        let mut under_seen = vec![false; c];
        let mut over_seen = vec![false; c];
        let (mut ci, mut slot) = (0usize, 2usize);
        let mut visited = 0;
        loop {
            let (nci, ns) = self.other_end(ci, slot);
            visited += 1;
            if visited > total {
                return Err(Error::Orientation { crossing: nci });
            }
            match ns {
                0 => {
                    if under_seen[nci] {
                        return Err(Error::Orientation { crossing: nci });
                    }
                    under_seen[nci] = true;
                }
                2 => return Err(Error::Orientation { crossing: nci }),
                s => {
                    if over_seen[nci] {
                        return Err(Error::Orientation { crossing: nci });
                    }
                    over_seen[nci] = true;
                    self.over_in_slot[nci] = s as u8;
                }
            }
            ci = nci;
            slot = (ns + 2) % 4;
            if (ci, slot) == (0, 2) {
                break;
            }
        }
        if visited != total {
            return Err(Error::DisconnectedTrace { visited, total });
        }
        for (sign, &s) in self.signs.iter_mut().zip(&self.over_in_slot) {
            // over-strand entering from the right of the under-strand
            *sign = if s == 3 { 1 } else { -1 };
        }
        Ok(())
    }

    /// The other occurrence of the edge sitting at `(crossing, slot)`.
    pub fn other_end(&self, crossing: usize, slot: usize) -> (usize, usize) {
        let e = self.crossings[crossing][slot];
        for (ci, t) in self.crossings.iter().enumerate() {
            for (s, &f) in t.iter().enumerate() {
                if f == e && (ci, s) != (crossing, slot) {
                    return (ci, s);
                }
            }
        }
        unreachable!("edge multiplicity validated at construction")
    }

    /// First occurrence of an edge label.
    pub fn occurrence(&self, edge: usize) -> Option<(usize, usize)> {
        self.crossings
            .iter()
            .enumerate()
            .find_map(|(ci, t)| t.iter().position(|&e| e == edge).map(|s| (ci, s)))
    }

    pub fn is_unknot_literal(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i32 {
        self.signs.iter().map(|&s| s as i32).sum()
    }

    /// Slot (1 or 3) through which the over-strand enters a crossing.
    pub fn over_in_slot(&self, crossing: usize) -> usize {
        self.over_in_slot[crossing] as usize
    }

    pub fn marked_edge(&self) -> Option<usize> {
        self.marked_edge
    }

    /// Same projection with a different marked edge.
    pub fn remarked(&self, edge: usize) -> Result<Self> {
        if self.is_unknot_literal() || edge == 0 || edge > self.edge_count() {
            return Err(Error::Syntax(format!("cannot mark edge {edge}")));
        }
        let mut d = self.clone();
        d.marked_edge = Some(edge);
        Ok(d)
    }
}

/// Parses `X(a,b,c,d) ... mark=<edge>` with an optional `signs=+,-,...`
/// clause, or the literal `unknot`.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    if text.trim() == UNKNOT_LITERAL {
        return Ok(KnotDiagram::unknot());
    }
    let mut p = Cursor::new(text);
    let mut crossings = Vec::new();
    let mut mark = None;
    let mut signs: Option<Vec<i8>> = None;
    loop {
        p.skip_separators();
        if p.at_end() {
            break;
        }
        let key = p.ident()?;
        match key.as_str() {
            "X" => {
                p.expect('(')?;
                let mut t = [0usize; 4];
                for (i, slot) in t.iter_mut().enumerate() {
                    if i > 0 {
                        p.expect(',')?;
                    }
                    *slot = p.number()?;
                }
                p.expect(')')?;
                crossings.push(t);
            }
            "mark" if mark.is_none() => {
                p.expect('=')?;
                mark = Some(p.number()?);
            }
            "signs" if signs.is_none() => {
                p.expect('=')?;
                let mut v = Vec::new();
                loop {
                    p.skip_ws();
                    match p.peek() {
                        Some(b'+') => v.push(1),
                        Some(b'-') => v.push(-1),
                        Some(b',') => {}
                        _ => break,
                    }
                    p.bump();
                }
                signs = Some(v);
            }
            "mark" | "signs" => return Err(Error::Syntax(format!("duplicate `{key}` clause"))),
            other => {
                return Err(Error::Syntax(format!(
                    "unexpected `{other}` at byte {}",
                    p.pos()
                )))
            }
        }
    }
    if crossings.is_empty() {
        return Err(Error::Syntax(format!(
            "no crossings; the trivial diagram must be written `{UNKNOT_LITERAL}`"
        )));
    }
    let mark = mark.ok_or_else(|| Error::Syntax("missing `mark=<edge>`".into()))?;
    match signs {
        Some(s) => KnotDiagram::with_declared_signs(crossings, mark, &s),
        None => KnotDiagram::new(crossings, mark),
    }
}

impl FromStr for KnotDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(mark) = self.marked_edge else {
            return write!(f, "{UNKNOT_LITERAL}");
        };
        for [a, b, c, d] in &self.crossings {
            write!(f, "X({a},{b},{c},{d}) ")?;
        }
        write!(f, "mark={mark}")
    }
}
