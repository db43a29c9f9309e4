use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use geokiss::adversary::{
    self, config_balls_icosahedron, config_congruent_hypercubes, config_disks_radii_1_2,
    config_hypercube_translates, config_regular_kgon, config_unit_disks, verify_config_with,
    wheel_from_translates, KissingConfig, TranslateFamily, Verdict,
};
use geokiss::geometry::DEFAULT_TOLERANCE;
use geokiss::graph::{independent_kissing_number, parse_adjacency_list, Graph};
use geokiss::harness::{
    any_failure, generate_random_instance, ratio_table, render_table, run_experiment, run_sweep,
    summarize, write_report, Algorithm, Family, GenSpec, Instance, Pass, SweepConfig, TableParams,
};
use geokiss::online::Model;
use geokiss::oracles::{oracle_cap, Problem};

#[derive(Parser)]
#[command(
    name = "geokiss",
    version,
    about = "Online domination and coloring on geometric intersection graphs"
)]
struct Cli {
    /// Touching band for intersection predicates.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a random instance.
    Gen(GenArgs),
    /// Write a lower-bound construction.
    Adversary(AdversaryArgs),
    /// Run one algorithm on an instance and check its bounds.
    Run(RunArgs),
    /// Exact optimum of a graph or instance.
    Oracle(OracleArgs),
    /// Independent kissing number of a graph or instance.
    Zeta(Source),
    /// Check a kissing configuration.
    VerifyConfig(VerifyArgs),
    /// Run a batch of experiments from a TOML file.
    Sweep(SweepArgs),
    /// Print the table of competitive ratios.
    Table(TableArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 10.0)]
    box_size: f64,
    #[arg(long, default_value_t = 1.0)]
    width_min: f64,
    #[arg(long, default_value_t = 1.0)]
    width_max: f64,
    #[arg(long)]
    log_uniform: bool,
    #[arg(long, value_enum, default_value_t = ModelArg::RelaxedConnected)]
    model: ModelArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Classical,
    RelaxedConnected,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Classical => Model::Classical,
            ModelArg::RelaxedConnected => Model::RelaxedConnected,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructionFamily {
    UnitDisks,
    UnitSquares,
    Balls,
    HypercubeTranslates,
    CongruentHypercubes,
    RegularKgon,
    DisksRadii12,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sequence {
    /// The configuration itself.
    Config,
    /// Independents first, core last.
    Star,
    /// Cyclone order on a wheel of translates.
    Cyclone,
}

#[derive(Args)]
struct AdversaryArgs {
    #[arg(long, value_enum)]
    family: ConstructionFamily,
    #[arg(long, value_enum, default_value_t = Sequence::Star)]
    sequence: Sequence,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 5)]
    k: u32,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    algorithm: Algorithm,
    /// Per-arrival trace as CSV `vertex,decision,solution_size`.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Adjacency-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Instance file; its intersection graph is used.
    #[arg(long)]
    instance: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// `mds`, `mids`, `mcds`, `chi` or `all`.
    #[arg(long, default_value = "all")]
    problem: String,
    #[command(flatten)]
    source: Source,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    config: PathBuf,
    /// Also require every independent to stay out of the core's interior.
    #[arg(long)]
    standard: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    m: f64,
}

fn load_graph(src: &Source, tol: f64) -> Result<Graph> {
    if let Some(p) = &src.graph {
        let text =
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        return Ok(parse_adjacency_list(&text)?);
    }
    let p = src.instance.as_ref().expect("clap enforces one source");
    let inst = Instance::load(p).with_context(|| format!("loading {}", p.display()))?;
    Ok(inst.lower(tol)?.0)
}

fn write_json<T: serde::Serialize>(path: &Path, v: &T) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")
        .with_context(|| format!("writing {}", path.display()))
}

fn kissing_config(a: &AdversaryArgs) -> Result<KissingConfig> {
    Ok(match a.family {
        ConstructionFamily::UnitDisks => config_unit_disks(a.epsilon)?,
        ConstructionFamily::Balls => config_balls_icosahedron(a.epsilon)?,
        ConstructionFamily::HypercubeTranslates | ConstructionFamily::UnitSquares => {
            let d = if a.family == ConstructionFamily::UnitSquares {
                2
            } else {
                a.d
            };
            config_hypercube_translates(d, a.epsilon)?
        }
        ConstructionFamily::CongruentHypercubes => config_congruent_hypercubes(a.d, a.epsilon)?,
        ConstructionFamily::RegularKgon => config_regular_kgon(a.k)?,
        ConstructionFamily::DisksRadii12 => config_disks_radii_1_2(),
    })
}

fn adversary_cmd(a: &AdversaryArgs) -> Result<()> {
    match a.sequence {
        Sequence::Config => write_json(&a.out, &kissing_config(a)?),
        Sequence::Star => {
            let cfg = kissing_config(a)?;
            let seq = adversary::star_sequence(&cfg)?;
            let (family, m) = match a.family {
                ConstructionFamily::UnitDisks => (Family::UnitDisks.to_string(), Some(1.0)),
                ConstructionFamily::UnitSquares => (Family::UnitSquares.to_string(), None),
                _ => (cfg.family_tag.clone(), None),
            };
            let inst = Instance {
                dimension: cfg.core.dim(),
                model: Model::Classical,
                family,
                m,
                alpha: None,
                seed: None,
                shapes: cfg.shapes(),
                arrival_order: seq.order(),
            };
            Ok(inst.save(&a.out)?)
        }
        Sequence::Cyclone => {
            let (tf, family, m) = match a.family {
                ConstructionFamily::UnitDisks => {
                    (TranslateFamily::UnitDisks, Family::UnitDisks, Some(1.0))
                }
                ConstructionFamily::UnitSquares => {
                    (TranslateFamily::UnitSquares, Family::UnitSquares, None)
                }
                ConstructionFamily::RegularKgon => (
                    TranslateFamily::RegularKGon(a.k),
                    Family::RegularKGon(a.k),
                    None,
                ),
                _ => bail!("cyclone wheels exist for unit-disks, unit-squares and regular-kgon"),
            };
            let (shapes, order) = wheel_from_translates(tf, adversary::DEFAULT_DELTA)?;
            let inst = Instance {
                dimension: 2,
                model: Model::RelaxedConnected,
                family: family.to_string(),
                m,
                alpha: None,
                seed: None,
                shapes,
                arrival_order: order.sequence,
            };
            Ok(inst.save(&a.out)?)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let tol = cli.tolerance;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen(g) => {
            let spec = GenSpec {
                width_range: (g.width_min, g.width_max),
                log_uniform: g.log_uniform,
                ..GenSpec::new(g.family, g.n, g.box_size, g.model.into(), g.seed)
            };
            generate_random_instance(&spec)?.save(&g.out)?;
        }
        Command::Adversary(a) => adversary_cmd(&a)?,
        Command::Run(r) => {
            let inst = Instance::load(&r.instance)
                .with_context(|| format!("loading {}", r.instance.display()))?;
            let outcome = run_experiment(&inst, r.algorithm, tol)?;
            if let Some(p) = &r.trace {
                let mut w = csv::Writer::from_path(p)
                    .with_context(|| format!("writing {}", p.display()))?;
                for row in &outcome.trace {
                    w.serialize(row)?;
                }
                w.flush()?;
            }
            write_report(&mut out, &outcome.records)?;
            if any_failure(&outcome.records) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Oracle(o) => {
            let g = load_graph(&o.source, tol)?;
            let problems = match o.problem.as_str() {
                "all" => Problem::ALL.to_vec(),
                p => vec![Problem::parse(p).with_context(|| format!("unknown problem `{p}`"))?],
            };
            writeln!(out, "problem,value,witness")?;
            for p in problems {
                let r = p.solve_with_cap(&g, oracle_cap())?;
                writeln!(out, "{},{},{}", p.name(), r.value, r.witness.render())?;
            }
        }
        Command::Zeta(src) => {
            let g = load_graph(&src, tol)?;
            let rep = independent_kissing_number(&g)?;
            let v = rep.witness_vertex.map_or(String::new(), |v| v.to_string());
            let set: Vec<String> = rep
                .witness_independent_set
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(out, "zeta,witness_vertex,witness_set")?;
            writeln!(out, "{},{},{}", rep.zeta, v, set.join(" "))?;
        }
        Command::VerifyConfig(v) => {
            let text = std::fs::read_to_string(&v.config)
                .with_context(|| format!("reading {}", v.config.display()))?;
            let cfg: KissingConfig = serde_json::from_str(&text)?;
            match verify_config_with(&cfg, v.standard, tol) {
                Verdict::Valid => writeln!(
                    out,
                    "valid: {} independents ({})",
                    cfg.claimed_zeta, cfg.family_tag
                )?,
                Verdict::Invalid(reason) => {
                    writeln!(out, "invalid: {reason}")?;
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Sweep(s) => {
            let mut cfg = SweepConfig::load(&s.config)
                .with_context(|| format!("loading {}", s.config.display()))?;
            if cfg.tolerance.is_none() {
                cfg.tolerance = Some(tol);
            }
            let rows = run_sweep(&cfg)?;
            let file =
                File::create(&s.out).with_context(|| format!("writing {}", s.out.display()))?;
            write_report(BufWriter::new(file), &rows)?;
            let summary = summarize(&rows);
            for row in &summary {
                let ratio = row.max_ratio.map_or("-".to_string(), |q| format!("{q:.3}"));
                writeln!(
                    out,
                    "{:<20} {:<40} rows {:>5}  max ratio {:>7}  failures {}  unchecked {}",
                    row.family, row.algorithm, row.rows, ratio, row.failures, row.unchecked
                )?;
            }
            let failures = rows.iter().filter(|r| r.pass == Pass::Fail).count();
            writeln!(out, "{} rows, {} failures", rows.len(), failures)?;
            if failures > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Table(t) => {
            let rows = ratio_table(TableParams {
                d: t.d,
                alpha: t.alpha,
                m: t.m,
            });
            write!(out, "{}", render_table(&rows))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
