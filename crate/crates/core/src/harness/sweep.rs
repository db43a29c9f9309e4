use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::experiment::{run_on, Algorithm, Analysis, Pass, RunRecord};
use super::generate::{generate_random_instance, GenSpec, DEFAULT_RETRIES};
use super::{Family, HarnessError};
use crate::online::Model;

fn default_model() -> Model {
    Model::RelaxedConnected
}

fn default_width_range() -> (f64, f64) {
    (1.0, 1.0)
}

fn default_retries() -> usize {
    DEFAULT_RETRIES
}

/// A batch of seeded instances from one family. Trial `i` uses seed
/// `seed_start + i` and `n = n_min + seed mod (n_max - n_min + 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialSpec {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    #[serde(default)]
    pub seed_start: u64,
    pub box_size: f64,
    #[serde(default = "default_width_range")]
    pub width_range: (f64, f64),
    #[serde(default)]
    pub log_uniform: bool,
    #[serde(default = "default_model")]
    pub model: Model,
    #[serde(default = "default_retries")]
    pub retries: usize,
    pub algorithms: Vec<Algorithm>,
}

impl TrialSpec {
    pub fn gen_spec(&self, seed: u64) -> GenSpec {
        let span = (self.n_max.saturating_sub(self.n_min) + 1) as u64;
        GenSpec {
            family: self.family,
            n: self.n_min + (seed % span) as usize,
            box_size: self.box_size,
            width_range: self.width_range,
            log_uniform: self.log_uniform,
            model: self.model,
            seed,
            retries: self.retries,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub trials: Vec<TrialSpec>,
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<SweepConfig, HarnessError> {
        let cfg: SweepConfig = toml::from_str(text)?;
        for t in &cfg.trials {
            if t.n_min == 0 || t.n_max < t.n_min {
                return Err(HarnessError::Invalid(format!(
                    "bad size range {}..={}",
                    t.n_min, t.n_max
                )));
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<SweepConfig, HarnessError> {
        SweepConfig::parse(&std::fs::read_to_string(path)?)
    }
}

/// Runs every trial of every batch in parallel. Rows come back sorted by seed,
/// keeping batch and algorithm order among equal seeds.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<RunRecord>, HarnessError> {
    let tol = cfg.tolerance.unwrap_or(crate::geometry::DEFAULT_TOLERANCE);
    let cap = crate::oracles::oracle_cap();
    let jobs: Vec<(&TrialSpec, u64)> = cfg
        .trials
        .iter()
        .flat_map(|t| (0..t.count as u64).map(move |i| (t, t.seed_start + i)))
        .collect();
    let per_job: Vec<Vec<RunRecord>> = jobs
        .par_iter()
        .map(|&(t, seed)| {
            let inst = generate_random_instance(&t.gen_spec(seed))?;
            let a = Analysis::new(&inst, tol, cap)?;
            let mut rows = Vec::new();
            for &alg in &t.algorithms {
                rows.extend(run_on(&a, alg)?.records);
            }
            Ok(rows)
        })
        .collect::<Result<_, HarnessError>>()?;
    let mut rows: Vec<RunRecord> = per_job.into_iter().flatten().collect();
    rows.sort_by_key(|r| r.seed);
    Ok(rows)
}

/// Per `(family, tag)`: largest `alg / opt` and the verdict counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub family: String,
    pub algorithm: String,
    pub rows: usize,
    pub max_ratio: Option<f64>,
    pub failures: usize,
    pub unchecked: usize,
}

pub fn summarize(rows: &[RunRecord]) -> Vec<SummaryRow> {
    let mut by: BTreeMap<(String, String), SummaryRow> = BTreeMap::new();
    for r in rows {
        let s = by
            .entry((r.family.clone(), r.algorithm.clone()))
            .or_insert_with(|| SummaryRow {
                family: r.family.clone(),
                algorithm: r.algorithm.clone(),
                rows: 0,
                max_ratio: None,
                failures: 0,
                unchecked: 0,
            });
        s.rows += 1;
        if let Some(q) = r.ratio() {
            s.max_ratio = Some(s.max_ratio.map_or(q, |m: f64| m.max(q)));
        }
        match r.pass {
            Pass::Fail => s.failures += 1,
            Pass::Unchecked => s.unchecked += 1,
            Pass::Pass => {}
        }
    }
    by.into_values().collect()
}

/// Rows as CSV, then the summary as `#` comment lines.
pub fn write_report<W: Write>(out: W, rows: &[RunRecord]) -> Result<(), HarnessError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record([
        "seed",
        "family",
        "n",
        "algorithm",
        "alg_value",
        "opt_value",
        "zeta",
        "bound_value",
        "pass",
        "wall_ms",
    ])?;
    for r in rows {
        w.serialize(r)?;
    }
    let mut out = w
        .into_inner()
        .map_err(|e| HarnessError::Io(e.into_error()))?;
    let summary = summarize(rows);
    if !summary.is_empty() {
        writeln!(
            out,
            "# summary: family,algorithm,rows,max_ratio,failures,unchecked"
        )?;
    }
    for s in summary {
        let ratio = s.max_ratio.map_or(String::new(), |q| format!("{q:.4}"));
        writeln!(
            out,
            "# {},{},{},{},{},{}",
            s.family, s.algorithm, s.rows, ratio, s.failures, s.unchecked
        )?;
    }
    Ok(())
}

/// Reads a report back and recomputes every verdict from the raw columns.
/// A row whose stored verdict disagrees with the recomputed one is an error.
pub fn read_report<R: Read>(input: R) -> Result<Vec<RunRecord>, HarnessError> {
    let mut rd = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input);
    let mut rows = Vec::new();
    for (i, rec) in rd.deserialize::<RunRecord>().enumerate() {
        let mut r = rec?;
        let (bound, pass) = r.recheck()?;
        if pass != r.pass {
            return Err(HarnessError::Invalid(format!(
                "row {}: stored verdict {:?} but values give {:?}",
                i + 1,
                r.pass,
                pass
            )));
        }
        r.bound_value = bound;
        rows.push(r);
    }
    Ok(rows)
}

pub fn any_failure(rows: &[RunRecord]) -> bool {
    rows.iter().any(|r| r.pass == Pass::Fail)
}
