//! Bound formulas checked against runs, and the table of competitive ratios.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::HarnessError;

/// Slope of the unit-disk bound on independent sets versus an optimal CDS.
pub const DU_DU_SLOPE: f64 = 3.399;
/// Intercept of the same bound.
pub const DU_DU_INTERCEPT: f64 = 4.874;
/// Additive constant in the asymptotic GreedyCDS bound.
pub const GREEDY_CDS_ASYM_CONST: f64 = 2.0;
/// Independent kissing number of disks with radii in `[1, 2]`.
pub const DISK_ZETA_PRIME: f64 = 11.0;

/// Slack for comparing an integer algorithm value with a real bound.
const BOUND_SLACK: f64 = 1e-9;

/// `max(zeta, 1)`: edgeless graphs have `zeta = 0`, yet every bound below
/// still needs a factor of at least one.
pub fn zeta_eff(zeta: usize) -> f64 {
    zeta.max(1) as f64
}

/// `floor(log2 m) + 1` layers for widths in `[1, m]`.
pub fn layer_count(m: f64) -> u32 {
    crate::online::layer_index(m) + 1
}

/// `zeta'` for the Layer and cross-layer checks: 11 for disks, otherwise the
/// fat-object bound `(2 / alpha + 2)^d`.
pub fn zeta_prime(disks: bool, alpha: f64, d: usize) -> f64 {
    if disks && d == 2 {
        DISK_ZETA_PRIME
    } else {
        (2.0 / alpha + 2.0).powi(d as i32)
    }
}

/// One inequality between an algorithm value, an optimum and `zeta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Check {
    /// GreedyDS against the minimum dominating set.
    Mds,
    /// GreedyDS against the minimum independent dominating set.
    Mids,
    /// GreedyCDS, `2 zeta OPT`.
    McdsAbsolute,
    /// GreedyCDS, `2 (zeta - 1) OPT + 2`.
    McdsAsymptotic,
    /// GreedyCDS on unit disks, `2 (3.399 OPT + 4.874)`.
    McdsUnitDisk,
    /// FirstFit, `zeta chi`.
    Chi,
    /// Layer, `zeta' L chi`.
    LayerChi { zeta_prime: f64, layers: u32 },
    /// Maximum independent set, `(zeta - 1) OPT_MCDS + 1`.
    MaxIs,
    /// Most neighbors of an object in its own or higher layers, `zeta' (chi - 1)`.
    CrossLayer { zeta_prime: f64 },
    /// Largest degree inside a color class, at most `t`.
    ClassDegree { t: usize },
}

impl Check {
    pub fn needs_zeta(self) -> bool {
        matches!(
            self,
            Check::Mds
                | Check::Mids
                | Check::McdsAbsolute
                | Check::McdsAsymptotic
                | Check::Chi
                | Check::MaxIs
        )
    }

    pub fn needs_opt(self) -> bool {
        !matches!(self, Check::ClassDegree { .. })
    }

    /// The right-hand side, or `None` when a needed input is missing.
    pub fn bound(self, opt: Option<usize>, zeta: Option<usize>) -> Option<f64> {
        let o = opt.map(|v| v as f64);
        let z = zeta.map(zeta_eff);
        Some(match self {
            Check::Mds | Check::Mids | Check::Chi => z? * o?,
            Check::McdsAbsolute => 2.0 * z? * o?,
            Check::McdsAsymptotic => 2.0 * (z? - 1.0) * o? + GREEDY_CDS_ASYM_CONST,
            Check::McdsUnitDisk => 2.0 * (DU_DU_SLOPE * o? + DU_DU_INTERCEPT),
            Check::LayerChi { zeta_prime, layers } => zeta_prime * layers as f64 * o?,
            Check::MaxIs => (z? - 1.0) * o? + 1.0,
            Check::CrossLayer { zeta_prime } => zeta_prime * (o? - 1.0).max(0.0),
            Check::ClassDegree { t } => t as f64,
        })
    }

    pub fn holds(self, alg: usize, bound: f64) -> bool {
        alg as f64 <= bound + BOUND_SLACK
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Mds => f.write_str("mds"),
            Check::Mids => f.write_str("mids"),
            Check::McdsAbsolute => f.write_str("mcds_abs"),
            Check::McdsAsymptotic => f.write_str("mcds_asym"),
            Check::McdsUnitDisk => f.write_str("mcds_unit_disk"),
            Check::Chi => f.write_str("chi"),
            Check::LayerChi { zeta_prime, layers } => write!(f, "chi[zp={zeta_prime};L={layers}]"),
            Check::MaxIs => f.write_str("max_is"),
            Check::CrossLayer { zeta_prime } => write!(f, "cross_layer[zp={zeta_prime}]"),
            Check::ClassDegree { t } => write!(f, "class_degree[t={t}]"),
        }
    }
}

type Params<'a> = (&'a str, Vec<(&'a str, &'a str)>);

fn params(s: &str) -> Result<Params<'_>, HarnessError> {
    let bad = || HarnessError::Invalid(format!("malformed check `{s}`"));
    let Some((name, rest)) = s.split_once('[') else {
        return Ok((s, Vec::new()));
    };
    let body = rest.strip_suffix(']').ok_or_else(bad)?;
    let kv = body
        .split(';')
        .map(|p| p.split_once('=').ok_or_else(bad))
        .collect::<Result<_, _>>()?;
    Ok((name, kv))
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, kv) = params(s)?;
        let get = |key: &str| -> Result<&str, HarnessError> {
            kv.iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| HarnessError::Invalid(format!("check `{s}` lacks `{key}`")))
        };
        let num = |key: &str| -> Result<f64, HarnessError> {
            get(key)?
                .parse()
                .map_err(|_| HarnessError::Invalid(format!("bad `{key}` in `{s}`")))
        };
        Ok(match name {
            "mds" => Check::Mds,
            "mids" => Check::Mids,
            "mcds_abs" => Check::McdsAbsolute,
            "mcds_asym" => Check::McdsAsymptotic,
            "mcds_unit_disk" => Check::McdsUnitDisk,
            "chi" if kv.is_empty() => Check::Chi,
            "chi" => Check::LayerChi {
                zeta_prime: num("zp")?,
                layers: num("L")? as u32,
            },
            "max_is" => Check::MaxIs,
            "cross_layer" => Check::CrossLayer {
                zeta_prime: num("zp")?,
            },
            "class_degree" => Check::ClassDegree {
                t: num("t")? as usize,
            },
            _ => return Err(HarnessError::Invalid(format!("unknown check `{s}`"))),
        })
    }
}

/// One row of the competitive-ratio table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub mds_mids: f64,
    pub mc: f64,
    pub mcds: f64,
    pub t_relaxed: f64,
}

fn row(family: String, zeta: f64) -> TableRow {
    TableRow {
        family,
        mds_mids: zeta,
        mc: zeta,
        mcds: 2.0 * (zeta - 1.0),
        t_relaxed: 2.0 * zeta * zeta,
    }
}

/// Parameters of the rows that depend on dimension, fatness and width ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableParams {
    pub d: u32,
    pub alpha: f64,
    pub m: f64,
}

impl Default for TableParams {
    fn default() -> Self {
        TableParams {
            d: 2,
            alpha: 1.0,
            m: 1.0,
        }
    }
}

/// Evaluates every cell of the competitive-ratio table from its formula. The
/// fat-object MC cell is the Layer bound `(2 / alpha + 2)^d (floor(log2 m) + 1)`.
pub fn ratio_table(p: TableParams) -> Vec<TableRow> {
    let d = p.d as i32;
    let fat = (p.m / p.alpha + 2.0).powi(d);
    let mut fat_row = row(
        format!("fat objects (alpha={}, m={}, d={})", p.alpha, p.m, p.d),
        fat,
    );
    fat_row.mc = (2.0 / p.alpha + 2.0).powi(d) * layer_count(p.m) as f64;
    vec![
        row("congruent balls in R^3".into(), 12.0),
        row(format!("hypercube translates (d={})", p.d), 2f64.powi(d)),
        row(
            format!("congruent hypercubes (d={})", p.d),
            2f64.powi(d + 1),
        ),
        row("regular k-gon translates".into(), 6.0),
        row("disks with radii in [1, 2]".into(), DISK_ZETA_PRIME),
        fat_row,
    ]
}

fn cell(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.4}")
    }
}

/// The table as CSV with a header line.
pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = String::from("family,mds_mids,mc,mcds,t_relaxed\n");
    for r in rows {
        out.push_str(&format!(
            "\"{}\",{},{},{},{}\n",
            r.family,
            cell(r.mds_mids),
            cell(r.mc),
            cell(r.mcds),
            cell(r.t_relaxed)
        ));
    }
    out
}
