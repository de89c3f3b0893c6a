//! Nef/ample certificates and Seshadri constants at fixed points.
//!
//! For a torus-equivariant bundle on `G/P`, nefness and ampleness are
//! decided on the finitely many invariant curves: `E` is nef iff every
//! splitting exponent on every invariant curve is `≥ 0`, and ample iff every
//! exponent is `> 0`. Strictly positive degree on all invariant curves
//! already certifies ampleness, so there is no separate "strictly nef"
//! status.
//!
//! For nef `E` and a fixed point `x`, the Seshadri constant `ε(E, x)` is the
//! least splitting exponent over the invariant curves through `x`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bundles::{restriction_table, BundleExpr, RestrictionTable};
use crate::error::{Error, Result};
use crate::flag::GkmGraph;
use crate::rootsys::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ample,
    NefNotAmple,
    NotNef,
}

impl Status {
    pub fn from_min(global_min: i64) -> Self {
        match global_min {
            m if m > 0 => Status::Ample,
            0 => Status::NefNotAmple,
            _ => Status::NotNef,
        }
    }

    pub fn is_nef(self) -> bool {
        self != Status::NotNef
    }

    pub fn is_ample(self) -> bool {
        self == Status::Ample
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ample => "ample",
            Status::NefNotAmple => "nef-not-ample",
            Status::NotNef => "not-nef",
        }
    }
}

/// A splitting exponent on a specific curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub curve: usize,
    pub entry: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityVerdict {
    pub status: Status,
    pub global_min: i64,
    /// First curve (by id) attaining `global_min`.
    pub witness: Option<Witness>,
    pub table_digest: String,
}

/// Verdict from a precomputed restriction table.
pub fn verdict_from_table(table: &RestrictionTable) -> PositivityVerdict {
    let witness = table
        .entries()
        .iter()
        .enumerate()
        .filter_map(|(curve, s)| s.min_entry().map(|entry| Witness { curve, entry }))
        .fold(None::<Witness>, |best, w| match best {
            Some(b) if b.entry <= w.entry => Some(b),
            _ => Some(w),
        });
    let global_min = witness.map_or(0, |w| w.entry);
    PositivityVerdict {
        status: Status::from_min(global_min),
        global_min,
        witness,
        table_digest: table.digest(),
    }
}

pub fn positivity(e: &BundleExpr, g: &GkmGraph) -> Result<PositivityVerdict> {
    Ok(verdict_from_table(&restriction_table(e, g)?))
}

/// Verdict for a line bundle plus the least curve degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePositivity {
    pub verdict: PositivityVerdict,
    pub min_degree: i64,
}

pub fn line_positivity(lambda: &Weight, g: &GkmGraph) -> Result<LinePositivity> {
    let verdict = positivity(&BundleExpr::line(lambda.clone()), g)?;
    let min_degree = g
        .curves()
        .iter()
        .map(|c| crate::bundles::line_degree(g, lambda, c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .unwrap_or(0);
    Ok(LinePositivity {
        verdict,
        min_degree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriResult {
    pub point: usize,
    /// Always an integer for the bundles modelled here.
    pub value: Ratio<i64>,
    /// Every curve through the point whose least exponent equals `value`.
    pub attaining: Vec<Witness>,
}

fn seshadri_from_table(table: &RestrictionTable, g: &GkmGraph, x: usize) -> Result<SeshadriResult> {
    let through = g.curves_through(x)?;
    let mins: Vec<Witness> = through
        .iter()
        .map(|c| Witness {
            curve: c.id(),
            entry: table
                .get(c.id())
                .and_then(|s| s.min_entry())
                .expect("total table"),
        })
        .collect();
    let value = mins.iter().map(|w| w.entry).min().expect("dim G/P > 0");
    Ok(SeshadriResult {
        point: x,
        value: Ratio::from_integer(value),
        attaining: mins.into_iter().filter(|w| w.entry == value).collect(),
    })
}

fn nef_table(e: &BundleExpr, g: &GkmGraph) -> Result<RestrictionTable> {
    let table = restriction_table(e, g)?;
    let v = verdict_from_table(&table);
    if let (Status::NotNef, Some(w)) = (v.status, v.witness) {
        return Err(Error::NotNef {
            curve: w.curve,
            entry: w.entry,
        });
    }
    Ok(table)
}

/// `ε(E, x)` at the fixed point with id `x`. `E` must be nef.
pub fn seshadri(e: &BundleExpr, g: &GkmGraph, x: usize) -> Result<SeshadriResult> {
    g.fixed_point(x)?;
    seshadri_from_table(&nef_table(e, g)?, g, x)
}

/// `ε(E, x)` at every fixed point, in id order.
pub fn seshadri_all(e: &BundleExpr, g: &GkmGraph) -> Result<Vec<SeshadriResult>> {
    let table = nef_table(e, g)?;
    (0..g.num_fixed_points())
        .map(|x| seshadri_from_table(&table, g, x))
        .collect()
}
