use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::bounds::{layer_count, zeta_prime, Check};
use super::{Family, HarnessError, Instance};
use crate::graph::{
    independent_kissing_number_with_cap, max_independent_set_with_cap, Graph, GraphError,
    DEFAULT_MIS_CAP,
};
use crate::online::{
    layer_index, ArrivalSequence, CdsDecision, DsDecision, FirstFit, GreedyCds, GreedyDs, Layer,
    Model, RelaxedFirstFit,
};
use crate::oracles::{OracleError, Problem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Algorithm {
    GreedyDs,
    GreedyCds,
    FirstFit,
    Layer,
    RelaxedFirstFit(usize),
}

impl Algorithm {
    pub const STANDARD: [Algorithm; 4] = [
        Algorithm::GreedyDs,
        Algorithm::GreedyCds,
        Algorithm::FirstFit,
        Algorithm::Layer,
    ];
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::GreedyDs => f.write_str("greedy_ds"),
            Algorithm::GreedyCds => f.write_str("greedy_cds"),
            Algorithm::FirstFit => f.write_str("first_fit"),
            Algorithm::Layer => f.write_str("layer"),
            Algorithm::RelaxedFirstFit(t) => write!(f, "relaxed_ff[t={t}]"),
        }
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "greedy_ds" => Algorithm::GreedyDs,
            "greedy_cds" => Algorithm::GreedyCds,
            "first_fit" => Algorithm::FirstFit,
            "layer" => Algorithm::Layer,
            _ => {
                let t = s
                    .strip_prefix("relaxed_ff[t=")
                    .and_then(|r| r.strip_suffix(']'))
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| HarnessError::Invalid(format!("unknown algorithm `{s}`")))?;
                Algorithm::RelaxedFirstFit(t)
            }
        })
    }
}

impl TryFrom<String> for Algorithm {
    type Error = HarnessError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Algorithm> for String {
    fn from(a: Algorithm) -> String {
        a.to_string()
    }
}

/// Tag prefix for checks on the instance itself rather than an algorithm run.
pub const INSTANCE_TAG: &str = "instance";
/// Tag suffix for rows that use the family's `zeta` instead of the instance's.
pub const FAMILY_SUFFIX: &str = "@family";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pass {
    Pass,
    Fail,
    Unchecked,
}

/// One bound check of one run. `algorithm` is `<name>:<check>`, optionally
/// followed by `@family`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub family: String,
    pub n: usize,
    pub algorithm: String,
    pub alg_value: usize,
    pub opt_value: Option<usize>,
    pub zeta: Option<usize>,
    pub bound_value: Option<f64>,
    pub pass: Pass,
    pub wall_ms: f64,
}

impl RunRecord {
    /// Splits the tag into algorithm name, check, and whether `zeta` is the
    /// family value.
    pub fn parse_tag(&self) -> Result<(&str, Check, bool), HarnessError> {
        let (name, rest) = self.algorithm.split_once(':').ok_or_else(|| {
            HarnessError::Invalid(format!("tag `{}` has no check", self.algorithm))
        })?;
        let (check, family) = match rest.strip_suffix(FAMILY_SUFFIX) {
            Some(c) => (c, true),
            None => (rest, false),
        };
        Ok((name, check.parse()?, family))
    }

    /// Verdict from the raw columns alone.
    pub fn recheck(&self) -> Result<(Option<f64>, Pass), HarnessError> {
        let (_, check, _) = self.parse_tag()?;
        Ok(verdict(check, self.alg_value, self.opt_value, self.zeta))
    }

    /// `alg / opt`, when there is a positive optimum.
    pub fn ratio(&self) -> Option<f64> {
        self.opt_value
            .filter(|&o| o > 0)
            .map(|o| self.alg_value as f64 / o as f64)
    }
}

fn verdict(
    check: Check,
    alg: usize,
    opt: Option<usize>,
    zeta: Option<usize>,
) -> (Option<f64>, Pass) {
    match check.bound(opt, zeta) {
        Some(b) if check.holds(alg, b) => (Some(b), Pass::Pass),
        Some(b) => (Some(b), Pass::Fail),
        None => (None, Pass::Unchecked),
    }
}

/// One line of a per-arrival trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub vertex: usize,
    pub decision: String,
    pub solution_size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub records: Vec<RunRecord>,
    pub trace: Vec<TraceRow>,
}

fn capped<T>(r: Result<T, OracleError>) -> Result<Option<T>, HarnessError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(OracleError::CapExceeded { .. })
        | Err(OracleError::Graph(GraphError::CapExceeded { .. })) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn capped_graph<T>(r: Result<T, GraphError>) -> Result<Option<T>, HarnessError> {
    capped(r.map_err(OracleError::from))
}

/// An instance lowered to its graph and arrivals, with exact values computed
/// on first use and shared by every algorithm run on it.
pub struct Analysis<'a> {
    pub instance: &'a Instance,
    pub graph: Graph,
    pub arrivals: ArrivalSequence,
    cap: usize,
    zeta: OnceCell<Option<usize>>,
    max_is: OnceCell<Option<usize>>,
    opt: [OnceCell<Option<usize>>; 4],
}

impl<'a> Analysis<'a> {
    pub fn new(instance: &'a Instance, tol: f64, cap: usize) -> Result<Self, HarnessError> {
        let (graph, arrivals) = instance.lower(tol)?;
        Ok(Analysis {
            instance,
            graph,
            arrivals,
            cap,
            zeta: OnceCell::new(),
            max_is: OnceCell::new(),
            opt: Default::default(),
        })
    }

    pub fn zeta(&self) -> Result<Option<usize>, HarnessError> {
        if let Some(&z) = self.zeta.get() {
            return Ok(z);
        }
        let z = capped_graph(independent_kissing_number_with_cap(
            &self.graph,
            DEFAULT_MIS_CAP,
        ))?
        .map(|r| r.zeta);
        Ok(*self.zeta.get_or_init(|| z))
    }

    pub fn max_independent_set(&self) -> Result<Option<usize>, HarnessError> {
        if let Some(&v) = self.max_is.get() {
            return Ok(v);
        }
        let v = capped_graph(max_independent_set_with_cap(
            &self.graph,
            self.cap.max(DEFAULT_MIS_CAP),
        ))?
        .map(|s| s.len());
        Ok(*self.max_is.get_or_init(|| v))
    }

    pub fn optimum(&self, p: Problem) -> Result<Option<usize>, HarnessError> {
        let cell = &self.opt[Problem::ALL
            .iter()
            .position(|&q| q == p)
            .expect("listed problem")];
        if let Some(&v) = cell.get() {
            return Ok(v);
        }
        let v = capped(p.solve_with_cap(&self.graph, self.cap))?.map(|r| r.value);
        Ok(*cell.get_or_init(|| v))
    }

    fn family(&self) -> Option<Family> {
        self.instance.family()
    }

    fn zeta_prime(&self) -> Result<f64, HarnessError> {
        let disks = self.instance.shapes.iter().all(|s| s.kind_name() == "ball");
        Ok(zeta_prime(
            disks,
            self.instance.fatness()?,
            self.instance.dimension,
        ))
    }
}

struct Emitter<'a, 'b> {
    a: &'b Analysis<'a>,
    records: Vec<RunRecord>,
}

impl Emitter<'_, '_> {
    fn push(
        &mut self,
        name: &str,
        check: Check,
        alg: usize,
        opt: Option<usize>,
        wall_ms: f64,
    ) -> Result<(), HarnessError> {
        let inst = self.a.instance;
        let mut emit = |zeta: Option<usize>, suffix: &str| {
            let (bound_value, pass) = verdict(check, alg, opt, zeta);
            self.records.push(RunRecord {
                seed: inst.seed.unwrap_or(0),
                family: inst.family.clone(),
                n: inst.n(),
                algorithm: format!("{name}:{check}{suffix}"),
                alg_value: alg,
                opt_value: opt,
                zeta,
                bound_value,
                pass,
                wall_ms,
            });
        };
        if !check.needs_zeta() {
            emit(None, "");
            return Ok(());
        }
        emit(self.a.zeta()?, "");
        if let Some(z) = self
            .a
            .family()
            .and_then(|f| f.zeta_bound(inst.m.unwrap_or(1.0)))
        {
            emit(Some(z), FAMILY_SUFFIX);
        }
        Ok(())
    }
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs `alg` on the analyzed instance and checks every bound that applies.
pub fn run_on(a: &Analysis<'_>, alg: Algorithm) -> Result<Outcome, HarnessError> {
    let name = alg.to_string();
    let mut out = Emitter {
        a,
        records: Vec::new(),
    };
    let mut trace = Vec::with_capacity(a.arrivals.len());
    let arrivals = &a.arrivals.arrivals;
    match alg {
        Algorithm::GreedyDs => {
            let t = Instant::now();
            let mut ds = GreedyDs::new();
            for arr in arrivals {
                let d = ds.step(arr);
                let decision = if d == DsDecision::Accepted {
                    "accept"
                } else {
                    "reject"
                };
                trace.push(TraceRow {
                    vertex: arr.vertex,
                    decision: decision.into(),
                    solution_size: ds.solution().len(),
                });
            }
            let (size, ms) = (ds.solution().len(), millis(t));
            out.push(&name, Check::Mds, size, a.optimum(Problem::Mds)?, ms)?;
            out.push(&name, Check::Mids, size, a.optimum(Problem::Mids)?, ms)?;
        }
        Algorithm::GreedyCds => {
            if a.arrivals.model != Model::RelaxedConnected {
                return Err(HarnessError::Invalid(
                    "greedy_cds needs a relaxed_connected instance".into(),
                ));
            }
            let t = Instant::now();
            let mut cds = GreedyCds::new();
            for arr in arrivals {
                let decision = match cds.step(arr)? {
                    CdsDecision::NoChange => "none".to_string(),
                    CdsDecision::AddedSelf => "self".to_string(),
                    CdsDecision::AddedSelfAndNeighbor(u) => format!("self+{u}"),
                };
                trace.push(TraceRow {
                    vertex: arr.vertex,
                    decision,
                    solution_size: cds.solution_size(),
                });
            }
            let (size, ms) = (cds.solution_size(), millis(t));
            let opt = a.optimum(Problem::Mcds)?;
            out.push(&name, Check::McdsAbsolute, size, opt, ms)?;
            out.push(&name, Check::McdsAsymptotic, size, opt, ms)?;
            if a.family() == Some(Family::UnitDisks) {
                out.push(&name, Check::McdsUnitDisk, size, opt, ms)?;
            }
            if let Some(mis) = a.max_independent_set()? {
                out.push(INSTANCE_TAG, Check::MaxIs, mis, opt, 0.0)?;
            }
        }
        Algorithm::FirstFit => {
            let t = Instant::now();
            let mut ff = FirstFit::new();
            for arr in arrivals {
                let c = ff.step(arr);
                trace.push(TraceRow {
                    vertex: arr.vertex,
                    decision: c.to_string(),
                    solution_size: ff.color_count(),
                });
            }
            let (colors, ms) = (ff.color_count(), millis(t));
            out.push(&name, Check::Chi, colors, a.optimum(Problem::Chi)?, ms)?;
        }
        Algorithm::Layer => {
            let m = a.instance.m.ok_or_else(|| {
                HarnessError::Invalid("layer needs an instance with a width bound m".into())
            })?;
            let t = Instant::now();
            let mut layer = Layer::new();
            for arr in arrivals {
                let c = layer.step(arr)?;
                trace.push(TraceRow {
                    vertex: arr.vertex,
                    decision: c.to_string(),
                    solution_size: layer.color_count(),
                });
            }
            let (colors, ms) = (layer.color_count(), millis(t));
            let chi = a.optimum(Problem::Chi)?;
            let zp = a.zeta_prime()?;
            out.push(
                &name,
                Check::LayerChi {
                    zeta_prime: zp,
                    layers: layer_count(m),
                },
                colors,
                chi,
                ms,
            )?;
            let layers: Vec<u32> = a.instance.widths()?.into_iter().map(layer_index).collect();
            let cross = (0..a.graph.n())
                .map(|v| {
                    a.graph
                        .neighbors(v)
                        .iter()
                        .filter(|&&u| layers[u] >= layers[v])
                        .count()
                })
                .max()
                .unwrap_or(0);
            out.push(
                INSTANCE_TAG,
                Check::CrossLayer { zeta_prime: zp },
                cross,
                chi,
                0.0,
            )?;
        }
        Algorithm::RelaxedFirstFit(t_relax) => {
            let t = Instant::now();
            let mut rf = RelaxedFirstFit::new(t_relax);
            for arr in arrivals {
                let c = rf.step(arr);
                trace.push(TraceRow {
                    vertex: arr.vertex,
                    decision: c.to_string(),
                    solution_size: rf.color_count(),
                });
            }
            let ms = millis(t);
            let worst = rf.class_degrees().iter().copied().max().unwrap_or(0);
            out.push(&name, Check::ClassDegree { t: t_relax }, worst, None, ms)?;
        }
    }
    Ok(Outcome {
        records: out.records,
        trace,
    })
}

/// Lowers `instance` and runs one algorithm on it.
pub fn run_experiment(
    instance: &Instance,
    alg: Algorithm,
    tol: f64,
) -> Result<Outcome, HarnessError> {
    let a = Analysis::new(instance, tol, crate::oracles::oracle_cap())?;
    run_on(&a, alg)
}
