use std::time::Instant;

use hfk_core::invariants::HFKReport;
use hfk_core::pipeline::{analyze, KnotInput, PipelineConfig};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::cache::{cache_key, Cache};
use crate::corpus::Corpus;
use crate::error::ErrorRecord;
use crate::report::{expected_checks, ConfigEcho, EntryRecord, EntryTiming, RunReport, Timings};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub pipeline: PipelineConfig,
    /// Worker threads shared by corpus entries and per-entry strata.
    pub threads: usize,
    pub enforce_expected: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            pipeline: PipelineConfig::default(),
            threads: default_threads(),
            enforce_expected: false,
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

pub fn thread_pool(threads: usize) -> ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

/// Runs one knot inside a pool of the given size.
pub fn compute(
    input: &KnotInput,
    cfg: &PipelineConfig,
    threads: usize,
) -> hfk_core::Result<HFKReport> {
    thread_pool(threads).install(|| analyze(input, cfg))
}

struct Outcome {
    record: EntryRecord,
    timing: EntryTiming,
    fresh: Option<(String, HFKReport)>,
}

/// Processes every entry; a failing entry never stops the others.
pub fn run_corpus(corpus: &Corpus, opts: &RunOptions, mut cache: Option<&mut Cache>) -> RunReport {
    let start = Instant::now();
    let prepared: Vec<_> = corpus
        .entries
        .iter()
        .map(|e| {
            let input = e.to_input();
            let cached = match (&input, cache.as_deref()) {
                (Ok(i), Some(c)) => {
                    let key = cache_key(i, &opts.pipeline);
                    let hit = c.get(&key, &e.id);
                    Some((key, hit))
                }
                _ => None,
            };
            (e, input, cached)
        })
        .collect();

    let outcomes: Vec<Outcome> = thread_pool(opts.threads).install(|| {
        prepared
            .par_iter()
            .map(|(entry, input, cached)| {
                let t = Instant::now();
                let (result, was_cached) = match (input, cached) {
                    (Err(e), _) => (Err(e.clone()), false),
                    (Ok(_), Some((_, Some(hit)))) => (Ok(hit.clone()), true),
                    (Ok(i), _) => (analyze(i, &opts.pipeline), false),
                };
                let wall_us = t.elapsed().as_micros() as u64;
                match result {
                    Ok(report) => {
                        let checks = expected_checks(
                            &report,
                            entry.expected.as_ref(),
                            opts.enforce_expected,
                        );
                        let passed = report.all_passed() && checks.iter().all(|c| c.passed);
                        let fresh = match cached {
                            Some((key, None)) => Some((key.clone(), report.clone())),
                            _ => None,
                        };
                        Outcome {
                            timing: EntryTiming {
                                id: entry.id.clone(),
                                wall_us,
                                grid_size: report.grid_size,
                                generator_count: report.generator_count,
                                cached: was_cached,
                            },
                            record: EntryRecord {
                                id: entry.id.clone(),
                                passed,
                                report: Some(report),
                                error: None,
                                expected_checks: checks,
                            },
                            fresh,
                        }
                    }
                    Err(e) => Outcome {
                        timing: EntryTiming {
                            id: entry.id.clone(),
                            wall_us,
                            grid_size: None,
                            generator_count: None,
                            cached: false,
                        },
                        record: EntryRecord {
                            id: entry.id.clone(),
                            passed: false,
                            report: None,
                            error: Some(ErrorRecord::from(&e)),
                            expected_checks: Vec::new(),
                        },
                        fresh: None,
                    },
                }
            })
            .collect()
    });

    let mut records = Vec::with_capacity(outcomes.len());
    let mut timings = Timings::default();
    for o in outcomes {
        if let (Some(c), Some((key, report))) = (cache.as_deref_mut(), o.fresh) {
            c.insert(key, &report);
        }
        records.push(o.record);
        timings.entries.push(o.timing);
    }
    timings.total_us = start.elapsed().as_micros() as u64;
    let config = ConfigEcho {
        max_grid: opts.pipeline.max_grid,
        max_crossings: opts.pipeline.max_crossings,
        threads: opts.threads,
        enforce_expected: opts.enforce_expected,
    };
    RunReport::new(config, records, timings)
}
