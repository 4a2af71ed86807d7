//! Presentation → report orchestration for a single knot.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::{
    braid_to_grid, parse_braid, parse_grid, parse_pd, BraidWord, GridDiagram, KnotDiagram,
    DEFAULT_MAX_GRID,
};
use crate::error::{Error, Result};
use crate::floer::{alexander_from_grid, build_tilde_complex, hat_from_tilde, homology_f2};
use crate::invariants::{
    kauffman_bound_check, seifert_genus, top_group_rank, zero_surgery_norm, CheckResult, HFKReport,
};
use crate::kauffman::{analyze_diagram, is_mod2_symmetric, KauffmanSummary, DEFAULT_MAX_CROSSINGS};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresentationKind {
    Braid,
    Grid,
    Pd,
    Unknot,
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationKind::Braid => "braid",
            PresentationKind::Grid => "grid",
            PresentationKind::Pd => "pd",
            PresentationKind::Unknot => "unknot",
        })
    }
}

impl FromStr for PresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "braid" => Ok(PresentationKind::Braid),
            "grid" => Ok(PresentationKind::Grid),
            "pd" => Ok(PresentationKind::Pd),
            "unknot" => Ok(PresentationKind::Unknot),
            other => Err(Error::Syntax(format!(
                "unknown presentation kind `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Braid(BraidWord),
    Grid(GridDiagram),
    Pd(KnotDiagram),
    Unknot,
}

impl Presentation {
    pub fn parse(kind: PresentationKind, text: &str) -> Result<Self> {
        Ok(match kind {
            PresentationKind::Braid => Presentation::Braid(parse_braid(text)?),
            PresentationKind::Grid => Presentation::Grid(parse_grid(text)?),
            PresentationKind::Pd => Presentation::Pd(parse_pd(text)?),
            PresentationKind::Unknot => {
                if !text.trim().is_empty() && text.trim() != "unknot" {
                    return Err(Error::Syntax(format!(
                        "unknot literal takes no text, got `{}`",
                        text.trim()
                    )));
                }
                Presentation::Unknot
            }
        })
    }

    pub fn kind(&self) -> PresentationKind {
        match self {
            Presentation::Braid(_) => PresentationKind::Braid,
            Presentation::Grid(_) => PresentationKind::Grid,
            Presentation::Pd(_) => PresentationKind::Pd,
            Presentation::Unknot => PresentationKind::Unknot,
        }
    }

    /// Normalized text form; equal presentations print identically.
    pub fn canonical_text(&self) -> String {
        match self {
            Presentation::Braid(b) => b.to_string(),
            Presentation::Grid(g) => g.to_string(),
            Presentation::Pd(d) => d.to_string(),
            Presentation::Unknot => "unknot".to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub max_grid: usize,
    pub max_crossings: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            max_grid: DEFAULT_MAX_GRID,
            max_crossings: DEFAULT_MAX_CROSSINGS,
        }
    }
}

/// A knot with its primary presentation and an optional planar diagram
/// used for the state-sum route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInput {
    pub id: String,
    pub presentation: Presentation,
    pub planar: Option<KnotDiagram>,
}

impl KnotInput {
    pub fn new(id: impl Into<String>, presentation: Presentation) -> Self {
        Self {
            id: id.into(),
            presentation,
            planar: None,
        }
    }

    pub fn with_planar(mut self, d: KnotDiagram) -> Self {
        self.planar = Some(d);
        self
    }

    fn grid(&self, max_grid: usize) -> Result<Option<GridDiagram>> {
        match &self.presentation {
            Presentation::Braid(b) => braid_to_grid(b, max_grid).map(Some),
            Presentation::Grid(g) => Ok(Some(g.clone())),
            Presentation::Unknot => Ok(Some(GridDiagram::unknot())),
            Presentation::Pd(_) => Ok(None),
        }
    }

    fn diagram(&self) -> Option<KnotDiagram> {
        match (&self.presentation, &self.planar) {
            (_, Some(d)) => Some(d.clone()),
            (Presentation::Pd(d), None) => Some(d.clone()),
            (Presentation::Unknot, None) => Some(KnotDiagram::unknot()),
            _ => None,
        }
    }
}

/// Hat ranks and grid statistics from the grid route.
#[derive(Debug, Clone)]
pub struct GridRoute {
    pub grid: GridDiagram,
    pub generator_count: u64,
    pub arrow_count: u64,
    pub hat: crate::floer::BigradedRanks,
    pub delta: LaurentPoly,
    pub checks: Vec<CheckResult>,
}

/// Builds the tilde complex, checks it, and reduces to hat ranks.
pub fn run_grid_route(g: &GridDiagram, max_grid: usize) -> Result<GridRoute> {
    let complex = build_tilde_complex(g, max_grid)?;
    let mut checks = Vec::new();
    complex.check_arrow_gradings()?;
    checks.push(CheckResult::pass(
        "arrow_gradings",
        format!("{} arrows", complex.arrow_count()),
    ));
    let tilde = homology_f2(&complex)?;
    checks.push(CheckResult::pass(
        "boundary_squares_to_zero",
        format!("{} generators", complex.generator_count()),
    ));
    let hat = hat_from_tilde(&tilde, g.size())?;
    checks.push(CheckResult::pass(
        "hat_division_exact",
        format!("tilde rank {}, hat rank {}", tilde.total(), hat.total()),
    ));
    checks.push(CheckResult::from_bool(
        "rank_symmetry",
        hat.is_alexander_symmetric(),
        format!("{:?}", hat.columns()),
    ));
    let delta = alexander_from_grid(&hat)?;
    Ok(GridRoute {
        grid: g.clone(),
        generator_count: complex.generator_count(),
        arrow_count: complex.arrow_count(),
        hat,
        delta,
        checks,
    })
}

/// Full analysis of one knot. Errors abort only this knot.
pub fn analyze(input: &KnotInput, cfg: &PipelineConfig) -> Result<HFKReport> {
    let grid_route = match input.grid(cfg.max_grid)? {
        Some(g) => Some(run_grid_route(&g, cfg.max_grid)?),
        None => None,
    };
    let states: Option<KauffmanSummary> = match input.diagram() {
        Some(d) => Some(analyze_diagram(&d, cfg.max_crossings)?),
        None => None,
    };

    let mut diagnostics = Vec::new();
    let mut report = HFKReport {
        knot_id: input.id.clone(),
        grid_size: None,
        generator_count: None,
        arrow_count: None,
        hat_ranks: None,
        delta: LaurentPoly::one(),
        genus: None,
        is_unknot: None,
        zero_surgery_norm: None,
        top_group_rank: None,
        top_group_identified: false,
        state_count: None,
        kauffman_bound: None,
        diagnostics: Vec::new(),
    };

    if let Some(r) = &grid_route {
        diagnostics.extend(r.checks.iter().cloned());
        let genus = seifert_genus(&r.hat)?;
        let (top, identified) = top_group_rank(&r.hat, genus);
        report.grid_size = Some(r.grid.size());
        report.generator_count = Some(r.generator_count);
        report.arrow_count = Some(r.arrow_count);
        report.hat_ranks = Some(r.hat.clone());
        report.delta = r.delta.clone();
        report.genus = Some(genus);
        report.top_group_rank = Some(top);
        report.top_group_identified = identified;
    }

    if let Some(s) = &states {
        let grades = s.family.grades().expect("normalized");
        diagnostics.push(CheckResult::from_bool(
            "mod2_symmetry",
            is_mod2_symmetric(&grades),
            format!("{} states", grades.len()),
        ));
        report.state_count = Some(s.family.len());
        report.kauffman_bound = Some(s.max_s);
        match &grid_route {
            Some(r) => {
                diagnostics.push(CheckResult::from_bool(
                    "cross_route_delta",
                    r.delta == s.delta,
                    format!("grid {} / states {}", r.delta, s.delta),
                ));
            }
            None => {
                report.delta = s.delta.clone();
                // deg(delta) <= genus <= max_s
                let lower = s.delta.half_span();
                if lower == s.max_s {
                    report.genus = Some(lower as u32);
                    diagnostics.push(CheckResult::pass(
                        "genus_pinned_by_bounds",
                        format!("alexander degree and max s both {lower}"),
                    ));
                }
            }
        }
        if let Some(g) = report.genus {
            diagnostics.push(kauffman_bound_check(s.max_s, g));
        }
    }

    if let Some(g) = report.genus {
        report.is_unknot = Some(g == 0);
        report.zero_surgery_norm = Some(zero_surgery_norm(g));
    }
    report.diagnostics = diagnostics;
    Ok(report)
}
