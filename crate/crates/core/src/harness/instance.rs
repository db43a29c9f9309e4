use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::geometry::Shape;
use crate::graph::{build_intersection_graph_with, Graph};
use crate::online::{ArrivalSequence, Model};

/// Families the generator knows how to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Family {
    /// Unit-radius disks.
    UnitDisks,
    /// Disks with radii drawn from the width range.
    MixedDisks,
    /// Axis-parallel unit squares.
    UnitSquares,
    /// Unit squares with uniform rotation.
    CongruentSquares,
    /// Translates of a regular `k`-gon with circumradius 1.
    RegularKGon(u32),
    /// Unit balls in three dimensions.
    UnitBalls,
}

impl Family {
    pub fn dimension(self) -> usize {
        match self {
            Family::UnitBalls => 3,
            _ => 2,
        }
    }

    pub fn is_disks(self) -> bool {
        matches!(
            self,
            Family::UnitDisks | Family::MixedDisks | Family::UnitBalls
        )
    }

    /// Upper bound on `zeta` over the whole family, when one is known.
    pub fn zeta_bound(self, m: f64) -> Option<usize> {
        match self {
            Family::UnitDisks => Some(5),
            Family::MixedDisks if m <= 2.0 => Some(11),
            Family::MixedDisks => Some((m + 2.0).powi(2).floor() as usize),
            Family::UnitSquares => Some(4),
            Family::CongruentSquares => Some(8),
            Family::RegularKGon(_) => Some(6),
            Family::UnitBalls => Some(12),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::UnitDisks => f.write_str("unit_disks"),
            Family::MixedDisks => f.write_str("mixed_disks"),
            Family::UnitSquares => f.write_str("unit_squares"),
            Family::CongruentSquares => f.write_str("congruent_squares"),
            Family::RegularKGon(k) => write!(f, "regular_kgon:{k}"),
            Family::UnitBalls => f.write_str("unit_balls"),
        }
    }
}

impl FromStr for Family {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "unit_disks" => Family::UnitDisks,
            "mixed_disks" => Family::MixedDisks,
            "unit_squares" => Family::UnitSquares,
            "congruent_squares" => Family::CongruentSquares,
            "unit_balls" => Family::UnitBalls,
            _ => {
                let k = s
                    .strip_prefix("regular_kgon:")
                    .and_then(|k| k.parse::<u32>().ok())
                    .filter(|&k| k == 3 || k >= 5)
                    .ok_or_else(|| HarnessError::Invalid(format!("unknown family `{s}`")))?;
                Family::RegularKGon(k)
            }
        })
    }
}

impl TryFrom<String> for Family {
    type Error = HarnessError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

/// Shapes, the order they arrive in, and what is known about their family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub dimension: usize,
    pub model: Model,
    /// Free-form tag; generated instances use the [`Family`] names.
    pub family: String,
    /// Width ratio bound: every width lies in `[1, m]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub shapes: Vec<Shape>,
    pub arrival_order: Vec<usize>,
}

impl Instance {
    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn family(&self) -> Option<Family> {
        self.family.parse().ok()
    }

    pub fn load(path: &Path) -> Result<Instance, HarnessError> {
        let text = std::fs::read_to_string(path)?;
        let inst: Instance = serde_json::from_str(&text)?;
        inst.validate(crate::geometry::DEFAULT_TOLERANCE)?;
        Ok(inst)
    }

    pub fn save(&self, path: &Path) -> Result<(), HarnessError> {
        std::fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    /// Widths from each shape's fatness data, in shape order.
    pub fn widths(&self) -> Result<Vec<f64>, HarnessError> {
        Ok(self
            .shapes
            .iter()
            .map(|s| s.fat_meta().map(|f| f.width))
            .collect::<Result<_, _>>()?)
    }

    /// Smallest fatness over the shapes, or the declared `alpha`.
    pub fn fatness(&self) -> Result<f64, HarnessError> {
        if let Some(a) = self.alpha {
            return Ok(a);
        }
        let mut a = 1.0f64;
        for s in &self.shapes {
            a = a.min(s.fat_meta()?.alpha);
        }
        Ok(a)
    }

    pub fn validate(&self, tol: f64) -> Result<(), HarnessError> {
        for (i, s) in self.shapes.iter().enumerate() {
            s.validate()?;
            if s.dim() != self.dimension {
                return Err(HarnessError::Invalid(format!(
                    "shape {i} has dimension {}, instance has {}",
                    s.dim(),
                    self.dimension
                )));
            }
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a <= 1.0) {
                return Err(HarnessError::Invalid(format!("alpha = {a} not in (0, 1]")));
            }
        }
        if let Some(m) = self.m {
            if !(m >= 1.0 && m.is_finite()) {
                return Err(HarnessError::Invalid(format!("m = {m} < 1")));
            }
            for (i, w) in self.widths()?.into_iter().enumerate() {
                if !(1.0 - tol..=m + tol).contains(&w) {
                    return Err(HarnessError::Invalid(format!(
                        "shape {i} has width {w} outside [1, {m}]"
                    )));
                }
            }
        }
        self.lower(tol)?;
        Ok(())
    }

    /// The intersection graph (vertex `i` is shape `i`) and the arrivals in
    /// order. Widths are attached when `m` is declared.
    pub fn lower(&self, tol: f64) -> Result<(Graph, ArrivalSequence), HarnessError> {
        let g = build_intersection_graph_with(&self.shapes, tol)?;
        let widths = match self.m {
            Some(_) => Some(self.widths()?),
            None => None,
        };
        if self.arrival_order.len() != g.n() {
            return Err(HarnessError::Invalid(format!(
                "arrival order has {} entries for {} shapes",
                self.arrival_order.len(),
                g.n()
            )));
        }
        let seq =
            ArrivalSequence::from_graph(&g, &self.arrival_order, self.model, widths.as_deref())?;
        Ok((g, seq))
    }
}
