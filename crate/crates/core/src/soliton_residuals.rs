//! The three soliton conditions as pointwise residuals.
//!
//! With `H` the Euclidean mean curvature and `N` the Euclidean unit normal
//! of the jet:
//!
//! | mode        | residual                    |
//! |-------------|-----------------------------|
//! | minimal     | `X3 H + N3`                 |
//! | translator  | `X3^2 H - (X1 N1 + X2 N2)`  |
//! | conformal   | `X3^2 H + (X3 + 1) N3`      |
//!
//! All three are odd under `N -> -N`, so their zero sets do not depend on
//! the orientation. For first- and second-kind surfaces the same equations
//! are also available with denominators cleared (the "reduced" forms); the
//! two formulations differ by the factor `2 W^3`, `W = |Xs x Xt|`.
//!
//! The translator reduction uses `(s f' - f) - t`. A few later manipulations
//! of that equation in the literature write `(s f' + f)`; the former is what
//! follows from the definition and is what is implemented here.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::surface_factory::{GridSpec, SurfaceFamily};
use crate::surface_jets::{ScalarJet2, SurfaceJet2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolitonMode {
    Minimal,
    Translator,
    ConformalSoliton,
}

impl SolitonMode {
    pub const ALL: [SolitonMode; 3] = [
        SolitonMode::Minimal,
        SolitonMode::Translator,
        SolitonMode::ConformalSoliton,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SolitonMode::Minimal => "minimal",
            SolitonMode::Translator => "translator",
            SolitonMode::ConformalSoliton => "conformal",
        }
    }
}

impl fmt::Display for SolitonMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolitonMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "minimal" => Ok(SolitonMode::Minimal),
            "translator" => Ok(SolitonMode::Translator),
            "conformal" | "conformal-soliton" => Ok(SolitonMode::ConformalSoliton),
            other => Err(format!(
                "unknown mode '{other}' (expected minimal, translator or conformal)"
            )),
        }
    }
}

pub fn minimal_residual(j: &SurfaceJet2) -> f64 {
    let x = j.position();
    x.z * j.mean_curvature() + j.normal().z
}

pub fn translator_residual(j: &SurfaceJet2) -> f64 {
    let x = j.position();
    let n = j.normal();
    x.z * x.z * j.mean_curvature() - (x.x * n.x + x.y * n.y)
}

pub fn conformal_residual(j: &SurfaceJet2) -> f64 {
    let x = j.position();
    x.z * x.z * j.mean_curvature() + (x.z + 1.0) * j.normal().z
}

pub fn general_residual(mode: SolitonMode, j: &SurfaceJet2) -> f64 {
    match mode {
        SolitonMode::Minimal => minimal_residual(j),
        SolitonMode::Translator => translator_residual(j),
        SolitonMode::ConformalSoliton => conformal_residual(j),
    }
}

/// The soliton equation for `(s, t + f(s), g(t))` with denominators cleared.
/// Equals `2 W^3` times [`general_residual`] on the corresponding jet, where
/// `W^2 = g'^2 (f'^2 + 1) + 1`.
pub fn reduced_residual_first_kind(
    mode: SolitonMode,
    fj: ScalarJet2,
    gj: ScalarJet2,
    s: f64,
    t: f64,
) -> Result<f64> {
    let g = gj.value;
    if !(g > 0.0) {
        return Err(Error::NonPositiveHeight { z: g });
    }
    let (f, fp, fpp) = (fj.value, fj.d1, fj.d2);
    let (gp, gpp) = (gj.d1, gj.d2);
    let w2 = gp * gp * (fp * fp + 1.0) + 1.0;
    // -f'' g' (1 + g'^2) + g'' (1 + f'^2), i.e. 2 W^3 H
    let curvature = -fpp * gp * (1.0 + gp * gp) + gpp * (1.0 + fp * fp);
    Ok(match mode {
        SolitonMode::Minimal => g * curvature + 2.0 * w2,
        SolitonMode::Translator => g * g * curvature - 2.0 * gp * w2 * ((s * fp - f) - t),
        SolitonMode::ConformalSoliton => g * g * curvature + 2.0 * (g + 1.0) * w2,
    })
}

/// The soliton equation for `(s, f(s) + b, t)` with denominators cleared.
/// Equals `2 W^3` times [`general_residual`], `W^2 = f'^2 + 1`.
pub fn reduced_residual_second_kind(
    mode: SolitonMode,
    fj: ScalarJet2,
    b: f64,
    s: f64,
    t: f64,
) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveHeight { z: t });
    }
    let (f, fp, fpp) = (fj.value, fj.d1, fj.d2);
    Ok(match mode {
        SolitonMode::Minimal => -t * fpp,
        SolitonMode::Translator => -fpp * t * t - 2.0 * (fp * fp + 1.0) * (s * fp - f - b),
        SolitonMode::ConformalSoliton => -t * t * fpp,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSample {
    pub s: f64,
    pub t: f64,
    pub residual: f64,
}

/// A grid node whose jet could not be evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeFailure {
    pub s: f64,
    pub t: f64,
    pub error: Error,
}

/// Residual values over a parameter grid. Summary statistics are always
/// recomputed from `samples`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub mode: SolitonMode,
    pub ns: usize,
    pub nt: usize,
    /// Sorted by `(s, t)`.
    pub samples: Vec<ResidualSample>,
    pub failures: Vec<NodeFailure>,
    pub excluded_margin: f64,
}

impl ResidualReport {
    pub fn max_abs(&self) -> f64 {
        self.samples
            .iter()
            .map(|p| p.residual.abs())
            .fold(0.0, f64::max)
    }

    pub fn mean_abs(&self) -> f64 {
        if self.samples.is_empty() {
            return f64::NAN;
        }
        self.samples.iter().map(|p| p.residual.abs()).sum::<f64>() / self.samples.len() as f64
    }
}

/// Evaluates the general residual of `mode` at every node of `grid` over the
/// family's domain. Nodes are evaluated in parallel; the report is the same
/// for every evaluation order.
pub fn residual_report(
    family: &SurfaceFamily,
    mode: SolitonMode,
    grid: &GridSpec,
) -> Result<ResidualReport> {
    let nodes = family.grid_parameters(grid);
    let evaluated: Vec<std::result::Result<ResidualSample, NodeFailure>> = nodes
        .par_iter()
        .map(|&(s, t)| match family.jet(s, t) {
            Ok(j) => Ok(ResidualSample {
                s,
                t,
                residual: general_residual(mode, &j),
            }),
            Err(error) => Err(NodeFailure { s, t, error }),
        })
        .collect();

    let mut samples = Vec::with_capacity(evaluated.len());
    let mut failures = Vec::new();
    for e in evaluated {
        match e {
            Ok(p) => samples.push(p),
            Err(f) => failures.push(f),
        }
    }
    if samples.is_empty() {
        let count = failures.len();
        let first = failures
            .into_iter()
            .next()
            .map(|f| f.error)
            .unwrap_or_else(|| Error::Integration("empty grid".into()));
        return Err(Error::AllNodesFailed {
            count,
            first: Box::new(first),
        });
    }
    samples.sort_by(|a, b| a.s.total_cmp(&b.s).then(a.t.total_cmp(&b.t)));
    Ok(ResidualReport {
        mode,
        ns: grid.ns(),
        nt: grid.nt(),
        samples,
        failures,
        excluded_margin: grid.margin(),
    })
}
