//! Knot tables in TOML.
//!
//! ```toml
//! [[knot]]
//! id = "3_1"
//! kind = "braid"
//! text = "2: 1,1,1"
//! pd = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) mark=1"
//!
//! [knot.expected]
//! genus = 1
//! delta = [1, -1, 1]
//! hat_ranks = [[0, 1, 1], [-1, 0, 1], [-2, -1, 1]]
//! provenance = "..."
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use hfk_core::codec::parse_pd;
use hfk_core::floer::BigradedRanks;
use hfk_core::pipeline::{KnotInput, Presentation, PresentationKind};
use hfk_core::LaurentPoly;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// The corpus shipped with the tool.
pub const BUNDLED_CORPUS: &str = include_str!("../data/corpus.toml");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corpus {
    #[serde(default, rename = "knot")]
    pub entries: Vec<CorpusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    pub kind: PresentationKind,
    #[serde(default)]
    pub text: String,
    /// Planar diagram for the state-sum route.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    /// Symmetric coefficient list, lowest exponent first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<i64>>,
    /// `[maslov, alexander, rank]` triples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hat_ranks: Option<Vec<(i32, i32, u64)>>,
    pub provenance: String,
}

impl Expected {
    pub fn delta_poly(&self) -> Option<LaurentPoly> {
        self.delta
            .as_deref()
            .map(LaurentPoly::from_symmetric_coeffs)
    }

    pub fn hat(&self) -> Option<BigradedRanks> {
        self.hat_ranks
            .as_ref()
            .map(|v| BigradedRanks::from_entries(v.iter().map(|&(m, a, r)| ((m, a), r))))
    }
}

impl CorpusEntry {
    /// Parses the presentation text; failures are per-entry.
    pub fn to_input(&self) -> hfk_core::Result<KnotInput> {
        let presentation = Presentation::parse(self.kind, &self.text)?;
        let mut input = KnotInput::new(self.id.clone(), presentation);
        if let Some(pd) = &self.pd {
            input = input.with_planar(parse_pd(pd)?);
        }
        Ok(input)
    }
}

pub fn parse_corpus(text: &str) -> Result<Corpus, CliError> {
    let corpus: Corpus =
        toml::from_str(text).map_err(|e| CliError::Corpus(e.message().to_string()))?;
    let mut seen = BTreeSet::new();
    for e in &corpus.entries {
        if !seen.insert(e.id.as_str()) {
            return Err(CliError::Corpus(format!("duplicate knot id `{}`", e.id)));
        }
        if let Some(x) = &e.expected {
            if x.provenance.trim().is_empty() {
                return Err(CliError::Corpus(format!(
                    "expected block of `{}` has an empty provenance",
                    e.id
                )));
            }
        }
    }
    Ok(corpus)
}

pub fn load_corpus(path: &Path) -> Result<Corpus, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_corpus(&text)
}

pub fn bundled_corpus() -> Corpus {
    parse_corpus(BUNDLED_CORPUS).expect("bundled corpus is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_parses() {
        let c = bundled_corpus();
        assert_eq!(c.entries.len(), 12);
        for e in &c.entries {
            e.to_input().unwrap();
        }
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let text = "[[knot]]\nid='a'\nkind='unknot'\n[[knot]]\nid='a'\nkind='unknot'\n";
        assert!(matches!(parse_corpus(text), Err(CliError::Corpus(_))));
    }

    #[test]
    fn provenance_is_required() {
        let text = "[[knot]]\nid='a'\nkind='unknot'\n[knot.expected]\ngenus=0\n";
        assert!(parse_corpus(text).is_err());
        let text = "[[knot]]\nid='a'\nkind='unknot'\n[knot.expected]\ngenus=0\nprovenance=' '\n";
        assert!(parse_corpus(text).is_err());
    }

    #[test]
    fn empty_corpus_is_valid() {
        assert!(parse_corpus("").unwrap().entries.is_empty());
    }
}
