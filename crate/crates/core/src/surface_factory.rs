//! Samplers for the classified translation surfaces.
//!
//! Each family is immutable after construction. Families built on a profile
//! equation own the integrated trajectory and interpolate it; sampling is a
//! pure function of `(s, t)` and may run on any number of threads.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::profile_odes::{
    integrate_conformal_profile, integrate_grim_reaper, integrate_minimal_profile,
    ConformalProfileParams, GrimReaperParams, IntegrationOptions, MinimalProfileParams,
    ProfileSolution,
};
use crate::surface_jets::{first_kind_jet, second_kind_jet, ScalarJet2, SurfaceJet2};

/// A scalar generator given by its 2-jet.
pub type ScalarGenerator = Arc<dyn Fn(f64) -> Result<ScalarJet2> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    VerticalPlane,
    Horosphere,
    MinimalCylinder,
    GrimReaper,
    ConformalCylinder,
    GenericFirstKind,
    GenericSecondKind,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::VerticalPlane => "vertical-plane",
            FamilyKind::Horosphere => "horosphere",
            FamilyKind::MinimalCylinder => "minimal-cylinder",
            FamilyKind::GrimReaper => "grim-reaper",
            FamilyKind::ConformalCylinder => "conformal-cylinder",
            FamilyKind::GenericFirstKind => "generic-first-kind",
            FamilyKind::GenericSecondKind => "generic-second-kind",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParams {
    /// `(s, c s + d + b, t)`.
    VerticalPlane {
        c: f64,
        d: f64,
        b: f64,
    },
    Horosphere {
        a: f64,
    },
    MinimalCylinder {
        c: f64,
        y0: f64,
    },
    GrimReaper {
        lambda: f64,
        b_slope: f64,
        a_shift: f64,
    },
    ConformalCylinder {
        a_slope: f64,
        y0: f64,
    },
    Generic,
}

impl FamilyParams {
    /// `name=value` pairs, in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FamilyParams::VerticalPlane { c, d, b } => vec![("c", c), ("d", d), ("b", b)],
            FamilyParams::Horosphere { a } => vec![("a", a)],
            FamilyParams::MinimalCylinder { c, y0 } => vec![("c", c), ("y0", y0)],
            FamilyParams::GrimReaper {
                lambda,
                b_slope,
                a_shift,
            } => vec![("lambda", lambda), ("b", b_slope), ("a", a_shift)],
            FamilyParams::ConformalCylinder { a_slope, y0 } => vec![("a", a_slope), ("y0", y0)],
            FamilyParams::Generic => Vec::new(),
        }
    }
}

/// Parameter rectangle. A `t` end flagged as a blow-up end is an open end
/// where the profile leaves the half-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub s_min: f64,
    pub s_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub blowup_low: bool,
    pub blowup_high: bool,
}

impl Domain {
    pub fn new(s: (f64, f64), t: (f64, f64)) -> Result<Self> {
        for (name, (lo, hi)) in [("s", s), ("t", t)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::param(
                    if name == "s" { "s_min" } else { "t_min" },
                    lo,
                    "range must be finite and non-empty",
                ));
            }
        }
        Ok(Domain {
            s_min: s.0,
            s_max: s.1,
            t_min: t.0,
            t_max: t.1,
            blowup_low: false,
            blowup_high: false,
        })
    }

    pub fn contains(&self, s: f64, t: f64) -> bool {
        let t_ok_low = if self.blowup_low {
            t > self.t_min
        } else {
            t >= self.t_min
        };
        let t_ok_high = if self.blowup_high {
            t < self.t_max
        } else {
            t <= self.t_max
        };
        s >= self.s_min && s <= self.s_max && t_ok_low && t_ok_high
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    ns: usize,
    nt: usize,
    margin: f64,
}

impl GridSpec {
    /// `margin` is the fraction of the `t` extent removed at each blow-up end.
    pub fn new(ns: usize, nt: usize, margin: f64) -> Result<Self> {
        if ns < 2 {
            return Err(Error::param("ns", ns as f64, "need at least 2 nodes"));
        }
        if nt < 2 {
            return Err(Error::param("nt", nt as f64, "need at least 2 nodes"));
        }
        if !(0.0..0.5).contains(&margin) {
            return Err(Error::param("margin", margin, "must lie in [0, 0.5)"));
        }
        Ok(GridSpec { ns, nt, margin })
    }

    pub fn ns(&self) -> usize {
        self.ns
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }
}

#[derive(Clone)]
enum Profile {
    Constant(f64),
    /// `g(t) = trajectory(t + shift)`.
    Trajectory {
        solution: Arc<ProfileSolution>,
        shift: f64,
    },
    Function(ScalarGenerator),
}

impl Profile {
    fn variable(&self, t: f64) -> f64 {
        match self {
            Profile::Trajectory { shift, .. } => t + shift,
            _ => t,
        }
    }

    fn eval(&self, t: f64) -> Result<ScalarJet2> {
        match self {
            Profile::Constant(a) => Ok(ScalarJet2::constant(*a)),
            Profile::Trajectory { solution, shift } => solution.jet_at(t + shift),
            Profile::Function(f) => f(t),
        }
    }
}

#[derive(Clone)]
enum Shape {
    FirstKind { f: ScalarGenerator, g: Profile },
    SecondKind { f: ScalarGenerator, b: f64 },
}

/// A surface family: a generator pair plus the parameter rectangle it is
/// sampled on.
#[derive(Clone)]
pub struct SurfaceFamily {
    kind: FamilyKind,
    params: FamilyParams,
    domain: Domain,
    shape: Shape,
    profile: Option<Arc<ProfileSolution>>,
    perturbation: f64,
}

impl fmt::Debug for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfaceFamily")
            .field("kind", &self.kind)
            .field("params", &self.params)
            .field("domain", &self.domain)
            .field("perturbation", &self.perturbation)
            .finish_non_exhaustive()
    }
}

fn linear(slope: f64, intercept: f64) -> ScalarGenerator {
    Arc::new(move |s| Ok(ScalarJet2::linear(slope, intercept, s)))
}

fn perturbed(j: ScalarJet2, eps: f64, v: f64) -> ScalarJet2 {
    let (sin, cos) = v.sin_cos();
    ScalarJet2::new(j.value + eps * cos, j.d1 - eps * sin, j.d2 - eps * cos)
}

fn finite(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::param(name, v, "must be finite"))
    }
}

impl SurfaceFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// The integrated profile, for the families built on one.
    pub fn profile(&self) -> Option<&ProfileSolution> {
        self.profile.as_deref()
    }

    pub fn perturbation(&self) -> f64 {
        self.perturbation
    }

    /// The same family with its profile replaced by
    /// `profile + eps cos(v)` (value, first and second derivative all
    /// perturbed consistently), where `v` is the profile's own variable.
    /// For second-kind surfaces the perturbed profile is `f`.
    pub fn with_profile_perturbation(&self, eps: f64) -> Result<SurfaceFamily> {
        finite("eps", eps)?;
        let mut out = self.clone();
        out.perturbation = self.perturbation + eps;
        out.shape = match &self.shape {
            Shape::FirstKind { f, g } => {
                let inner = g.clone();
                let g_new: ScalarGenerator = Arc::new(move |t| {
                    let j = inner.eval(t)?;
                    Ok(perturbed(j, eps, inner.variable(t)))
                });
                Shape::FirstKind {
                    f: f.clone(),
                    g: Profile::Function(g_new),
                }
            }
            Shape::SecondKind { f, b } => {
                let inner = f.clone();
                Shape::SecondKind {
                    f: Arc::new(move |s| Ok(perturbed(inner(s)?, eps, s))),
                    b: *b,
                }
            }
        };
        Ok(out)
    }

    /// The surface jet at `(s, t)`.
    pub fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        if !self.domain.contains(s, t) {
            return Err(Error::Domain {
                s,
                t,
                reason: format!(
                    "outside [{}, {}] x [{}, {}]",
                    self.domain.s_min, self.domain.s_max, self.domain.t_min, self.domain.t_max
                ),
            });
        }
        match &self.shape {
            Shape::FirstKind { f, g } => first_kind_jet(f(s)?, g.eval(t)?, s, t),
            Shape::SecondKind { f, b } => second_kind_jet(f(s)?, *b, s, t),
        }
    }

    /// Grid nodes in row-major order: index `i * nt + j` holds
    /// `(s_i, t_j)`. The `t` range is shortened by `margin` times its
    /// extent at each blow-up end.
    pub fn grid_parameters(&self, grid: &GridSpec) -> Vec<(f64, f64)> {
        let d = &self.domain;
        let extent = d.t_max - d.t_min;
        let t_lo = if d.blowup_low {
            d.t_min + grid.margin * extent
        } else {
            d.t_min
        };
        let t_hi = if d.blowup_high {
            d.t_max - grid.margin * extent
        } else {
            d.t_max
        };
        let node = |lo: f64, hi: f64, k: usize, n: usize| {
            if k + 1 == n {
                hi
            } else {
                lo + (hi - lo) * (k as f64 / (n - 1) as f64)
            }
        };
        let mut out = Vec::with_capacity(grid.ns * grid.nt);
        for i in 0..grid.ns {
            let s = node(d.s_min, d.s_max, i, grid.ns);
            for j in 0..grid.nt {
                out.push((s, node(t_lo, t_hi, j, grid.nt)));
            }
        }
        out
    }
}

/// `X(s, t) = (s, t, a)`.
pub fn make_horosphere(a: f64) -> Result<SurfaceFamily> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::param("a", a, "horosphere height must be positive"));
    }
    Ok(SurfaceFamily {
        kind: FamilyKind::Horosphere,
        params: FamilyParams::Horosphere { a },
        domain: Domain::new((-1.0, 1.0), (-1.0, 1.0))?,
        shape: Shape::FirstKind {
            f: linear(0.0, 0.0),
            g: Profile::Constant(a),
        },
        profile: None,
        perturbation: 0.0,
    })
}

/// `X(s, t) = (s, c s + d, t)`.
pub fn make_vertical_plane(c: f64, d: f64) -> Result<SurfaceFamily> {
    make_vertical_plane_offset(c, d, 0.0)
}

/// `X(s, t) = (s, c s + d + b, t)`, the second-kind surface of `f = c s + d`
/// with offset `b`. It is a translator iff `d = -b`.
pub fn make_vertical_plane_offset(c: f64, d: f64, b: f64) -> Result<SurfaceFamily> {
    finite("c", c)?;
    finite("d", d)?;
    finite("b", b)?;
    Ok(SurfaceFamily {
        kind: FamilyKind::VerticalPlane,
        params: FamilyParams::VerticalPlane { c, d, b },
        domain: Domain::new((-1.0, 1.0), (0.1, 2.0))?,
        shape: Shape::SecondKind { f: linear(c, d), b },
        profile: None,
        perturbation: 0.0,
    })
}

fn blowup_domain(sol: &ProfileSolution) -> Result<Domain> {
    let ev = sol.events();
    match (ev.left_blowup_t, ev.right_blowup_t) {
        (Some(lo), Some(hi)) => {
            let mut d = Domain::new((-1.0, 1.0), (lo, hi))?;
            d.blowup_low = true;
            d.blowup_high = true;
            Ok(d)
        }
        _ => Err(Error::Integration(
            "profile did not reach its blow-up ends".into(),
        )),
    }
}

/// `X(s, t) = (s, c s + t, g(t))` with the minimal profile `g(0) = y0`.
pub fn make_minimal_cylinder(c: f64, y0: f64) -> Result<SurfaceFamily> {
    let p = MinimalProfileParams::new(c, y0)?;
    let sol = Arc::new(integrate_minimal_profile(
        &p,
        &IntegrationOptions::default(),
    )?);
    Ok(SurfaceFamily {
        kind: FamilyKind::MinimalCylinder,
        params: FamilyParams::MinimalCylinder { c, y0 },
        domain: blowup_domain(&sol)?,
        shape: Shape::FirstKind {
            f: linear(c, 0.0),
            g: Profile::Trajectory {
                solution: sol.clone(),
                shift: 0.0,
            },
        },
        profile: Some(sol),
        perturbation: 0.0,
    })
}

/// Default profile window of the grim reaper, in `v = a + t`.
pub const GRIM_REAPER_V_SPAN: (f64, f64) = (-5.0, 5.0);

/// `X(s, t) = (s, b s + a + t, g(a + t))` with the grim reaper profile of
/// slope `lambda` at `v = 0` and `k = 1/(b^2 + 1)`, sampled for
/// `s in [-2, 2]`, `v in [-5, 5]`.
pub fn make_grim_reaper(lambda: f64, b_slope: f64, a_shift: f64) -> Result<SurfaceFamily> {
    make_grim_reaper_on(lambda, b_slope, a_shift, GRIM_REAPER_V_SPAN)
}

pub fn make_grim_reaper_on(
    lambda: f64,
    b_slope: f64,
    a_shift: f64,
    v_span: (f64, f64),
) -> Result<SurfaceFamily> {
    let p = GrimReaperParams::from_generator(lambda, b_slope, a_shift)?;
    let sol = Arc::new(integrate_grim_reaper(
        &p,
        v_span,
        &IntegrationOptions::default(),
    )?);
    if sol.events().truncated {
        return Err(Error::Integration(
            "grim reaper profile was truncated".into(),
        ));
    }
    Ok(SurfaceFamily {
        kind: FamilyKind::GrimReaper,
        params: FamilyParams::GrimReaper {
            lambda,
            b_slope,
            a_shift,
        },
        domain: Domain::new((-2.0, 2.0), (v_span.0 - a_shift, v_span.1 - a_shift))?,
        shape: Shape::FirstKind {
            f: linear(b_slope, a_shift),
            g: Profile::Trajectory {
                solution: sol.clone(),
                shift: a_shift,
            },
        },
        profile: Some(sol),
        perturbation: 0.0,
    })
}

/// `X(s, t) = (s, a s + t, g(t))` with the conformal profile `g(0) = y0`.
pub fn make_conformal_cylinder(a_slope: f64, y0: f64) -> Result<SurfaceFamily> {
    let p = ConformalProfileParams::new(a_slope, y0)?;
    let sol = Arc::new(integrate_conformal_profile(
        &p,
        &IntegrationOptions::default(),
    )?);
    Ok(SurfaceFamily {
        kind: FamilyKind::ConformalCylinder,
        params: FamilyParams::ConformalCylinder { a_slope, y0 },
        domain: blowup_domain(&sol)?,
        shape: Shape::FirstKind {
            f: linear(a_slope, 0.0),
            g: Profile::Trajectory {
                solution: sol.clone(),
                shift: 0.0,
            },
        },
        profile: Some(sol),
        perturbation: 0.0,
    })
}

/// `X(s, t) = (s, t + f(s), g(t))` for arbitrary generators.
pub fn make_first_kind(f: ScalarGenerator, g: ScalarGenerator, domain: Domain) -> SurfaceFamily {
    SurfaceFamily {
        kind: FamilyKind::GenericFirstKind,
        params: FamilyParams::Generic,
        domain,
        shape: Shape::FirstKind {
            f,
            g: Profile::Function(g),
        },
        profile: None,
        perturbation: 0.0,
    }
}

/// `X(s, t) = (s, f(s) + b, t)` for an arbitrary generator.
pub fn make_second_kind(f: ScalarGenerator, b: f64, domain: Domain) -> Result<SurfaceFamily> {
    finite("b", b)?;
    if domain.t_min <= 0.0 {
        return Err(Error::param(
            "t_min",
            domain.t_min,
            "second-kind heights must be positive",
        ));
    }
    Ok(SurfaceFamily {
        kind: FamilyKind::GenericSecondKind,
        params: FamilyParams::Generic,
        domain,
        shape: Shape::SecondKind { f, b },
        profile: None,
        perturbation: 0.0,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridNode {
    pub s: f64,
    pub t: f64,
    pub jet: Result<SurfaceJet2>,
}

/// Jets over a grid, row-major (`i * nt + j`).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledGrid {
    pub ns: usize,
    pub nt: usize,
    pub nodes: Vec<GridNode>,
}

impl SampledGrid {
    pub fn jets(&self) -> impl Iterator<Item = &SurfaceJet2> {
        self.nodes.iter().filter_map(|n| n.jet.as_ref().ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &GridNode> {
        self.nodes.iter().filter(|n| n.jet.is_err())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }
}

/// Samples the family on the grid. Per-node failures are kept in place;
/// the call fails only if every node fails.
pub fn sample_grid(fam: &SurfaceFamily, grid: &GridSpec) -> Result<SampledGrid> {
    let nodes: Vec<GridNode> = fam
        .grid_parameters(grid)
        .into_iter()
        .map(|(s, t)| GridNode {
            s,
            t,
            jet: fam.jet(s, t),
        })
        .collect();
    if nodes.iter().all(|n| n.jet.is_err()) {
        let first = nodes
            .iter()
            .find_map(|n| n.jet.clone().err())
            .unwrap_or_else(|| Error::Integration("empty grid".into()));
        return Err(Error::AllNodesFailed {
            count: nodes.len(),
            first: Box::new(first),
        });
    }
    Ok(SampledGrid {
        ns: grid.ns,
        nt: grid.nt,
        nodes,
    })
}
