use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A braid word on `strand_count` strands whose closure is a knot.
///
/// Letter `+i` is the generator that crosses strands `i` and `i + 1` with
/// positive sign, `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self> {
        if strand_count == 0 {
            return Err(Error::Syntax("strand count must be positive".into()));
        }
        for &letter in &letters {
            let a = letter.unsigned_abs() as usize;
            if letter == 0 || a >= strand_count {
                return Err(Error::LetterOutOfRange {
                    letter,
                    strands: strand_count,
                });
            }
        }
        let components = closure_components(strand_count, &letters);
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        Ok(Self {
            strand_count,
            letters,
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Number of cycles of the permutation obtained by composing the
/// transpositions `(i, i + 1)` of all letters.
pub(crate) fn closure_components(strands: usize, letters: &[i32]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = perm[c];
        }
    }
    cycles
}

/// Parses `"<k>: <c1>,<c2>,..."`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::Syntax("braid must look like `<k>: <letters>`".into()))?;
    let strands: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::Syntax(format!("bad strand count `{}`", head.trim())))?;
    let tail = tail.trim();
    let letters = if tail.is_empty() {
        Vec::new()
    } else {
        tail.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i32>()
                    .map_err(|_| Error::Syntax(format!("bad braid letter `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    BraidWord::new(strands, letters)
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strand_count)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i == 0 {
                write!(f, " {l}")?;
            } else {
                write!(f, ",{l}")?;
            }
        }
        Ok(())
    }
}
