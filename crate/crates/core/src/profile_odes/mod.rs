//! The profile curves `g` of the classified translation cylinders.
//!
//! Three initial value problems appear:
//!
//! * minimal cylinders: `g'' g (1 + c^2) = -2 [g'^2 (1 + c^2) + 1]`,
//!   `g(0) = y0`, `g'(0) = 0`, with first integral
//!   `g'^2 = m / g^4 - 1/(c^2 + 1)`, `m = y0^4 / (c^2 + 1)`;
//! * grim reapers: `g'' = -g' (k + g'^2) 2t / g^2`, `g(0) = 1`,
//!   `g'(0) = lambda`, global on the real line;
//! * conformal cylinders:
//!   `g'' = -2 (g + 1) / g^2 [g'^2 + 1/(1 + a^2)]`, `g(0) = y0`, `g'(0) = 0`,
//!   with first integral `g'^2 = C e^{4/g} / g^4 - 1/(1 + a^2)`.
//!
//! The minimal and conformal profiles live on a finite interval `(-r, r)`
//! and leave through `g -> 0`, `|g'| -> infinity`. They are integrated in
//! `t` while the slope is moderate; past `|g'| = switch_slope` the first
//! integral is used to make `ln g` the independent variable, which carries
//! the solution to the blow-up height with full accuracy.

mod integrator;
pub mod quadrature;

use crate::error::{Error, Result};
use crate::surface_jets::ScalarJet2;

use integrator::{Control, Outcome, StepperOptions};

/// Tolerances and stopping thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Blow-up is declared once `g` drops below this height...
    pub eps_g: f64,
    /// ...or once `|g'|` exceeds this slope.
    pub m_stop: f64,
    /// Slope at which the integration leaves the `t` variable.
    pub switch_slope: f64,
    /// Largest step in `ln g` during the final approach.
    pub tail_max_step: f64,
    pub max_steps: usize,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions {
            rtol: 1e-10,
            atol: 1e-12,
            eps_g: 1e-6,
            m_stop: 1e6,
            switch_slope: 10.0,
            tail_max_step: 0.25,
            max_steps: 200_000,
        }
    }
}

impl IntegrationOptions {
    fn stepper(&self, max_step: f64) -> StepperOptions {
        StepperOptions {
            rtol: self.rtol,
            atol: self.atol,
            max_step,
            max_steps: self.max_steps,
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = [
            ("rtol", self.rtol),
            ("atol", self.atol),
            ("eps_g", self.eps_g),
            ("m_stop", self.m_stop),
            ("switch_slope", self.switch_slope),
            ("tail_max_step", self.tail_max_step),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, v, "must be positive and finite"));
            }
        }
        if self.switch_slope >= self.m_stop {
            return Err(Error::param(
                "switch_slope",
                self.switch_slope,
                "must be below m_stop",
            ));
        }
        Ok(())
    }
}

/// Minimal cylinder profile for `f(s) = c s + d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimalProfileParams {
    pub c: f64,
    /// Translates the surface; does not enter the profile equation.
    pub d: f64,
    pub y0: f64,
    pub m: f64,
}

impl MinimalProfileParams {
    pub fn new(c: f64, y0: f64) -> Result<Self> {
        if !c.is_finite() {
            return Err(Error::param("c", c, "must be finite"));
        }
        if !(y0 > 0.0 && y0.is_finite()) {
            return Err(Error::param("y0", y0, "initial height must be positive"));
        }
        Ok(MinimalProfileParams {
            c,
            d: 0.0,
            y0,
            m: y0.powi(4) / (c * c + 1.0),
        })
    }

    pub fn with_offset(mut self, d: f64) -> Self {
        self.d = d;
        self
    }

    fn k(&self) -> f64 {
        1.0 / (self.c * self.c + 1.0)
    }
}

/// Grim reaper profile: `g'(0) = lambda`, `k = 1/(b^2 + 1)`, and the profile
/// variable is `v = t_shift + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrimReaperParams {
    pub lambda: f64,
    pub k: f64,
    pub t_shift: f64,
}

impl GrimReaperParams {
    pub fn new(lambda: f64, k: f64) -> Result<Self> {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::param("lambda", lambda, "initial slope must be >= 0"));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::param("k", k, "must be positive"));
        }
        Ok(GrimReaperParams {
            lambda,
            k,
            t_shift: 0.0,
        })
    }

    /// Parameters of the grim reaper over `f(s) = b s + a`.
    pub fn from_generator(lambda: f64, b_slope: f64, a_shift: f64) -> Result<Self> {
        if !(b_slope.is_finite() && a_shift.is_finite()) {
            return Err(Error::param("b", b_slope, "slope and shift must be finite"));
        }
        let mut p = GrimReaperParams::new(lambda, 1.0 / (b_slope * b_slope + 1.0))?;
        p.t_shift = a_shift;
        Ok(p)
    }
}

/// Conformal cylinder profile for `f(s) = a s + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalProfileParams {
    pub a: f64,
    pub y0: f64,
    /// First-integral constant `y0^4 e^{-4/y0} / (1 + a^2)`.
    pub c: f64,
}

impl ConformalProfileParams {
    pub fn new(a: f64, y0: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::param("a", a, "must be finite"));
        }
        if !(y0 > 0.0 && y0.is_finite()) {
            return Err(Error::param("y0", y0, "initial height must be positive"));
        }
        Ok(ConformalProfileParams {
            a,
            y0,
            c: y0.powi(4) * (-4.0 / y0).exp() / (1.0 + a * a),
        })
    }

    fn k(&self) -> f64 {
        1.0 / (1.0 + self.a * self.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileParams {
    Minimal(MinimalProfileParams),
    GrimReaper(GrimReaperParams),
    Conformal(ConformalProfileParams),
}

impl ProfileParams {
    /// `g''` from the profile equation at a state `(t, g, g')`.
    pub fn second_derivative(&self, t: f64, g: f64, gp: f64) -> f64 {
        match self {
            ProfileParams::Minimal(p) => minimal_rhs(p, g, gp),
            ProfileParams::GrimReaper(p) => grim_reaper_rhs(p, t, g, gp),
            ProfileParams::Conformal(p) => conformal_rhs(p, g, gp),
        }
    }

    /// Conservation defect, for the families that have a first integral.
    pub fn first_integral_defect(&self, g: f64, gp: f64) -> Option<f64> {
        match self {
            ProfileParams::Minimal(p) => Some(minimal_first_integral_defect(p, g, gp)),
            ProfileParams::GrimReaper(_) => None,
            ProfileParams::Conformal(p) => Some(conformal_first_integral_defect(p, g, gp)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProfileParams::Minimal(_) => "minimal",
            ProfileParams::GrimReaper(_) => "grim-reaper",
            ProfileParams::Conformal(_) => "conformal",
        }
    }
}

fn minimal_rhs(p: &MinimalProfileParams, g: f64, gp: f64) -> f64 {
    -2.0 * (gp * gp + p.k()) / g
}

fn grim_reaper_rhs(p: &GrimReaperParams, t: f64, g: f64, gp: f64) -> f64 {
    -gp * (p.k + gp * gp) * (2.0 * t) / (g * g)
}

fn conformal_rhs(p: &ConformalProfileParams, g: f64, gp: f64) -> f64 {
    -2.0 * (g + 1.0) / (g * g) * (gp * gp + p.k())
}

/// Relative defect of the minimal first integral,
/// `g^4 (g'^2 + 1/(c^2 + 1)) / m - 1`.
///
/// This is `(g'^2 - (m/g^4 - 1/(c^2+1))) * g^4 / m`: the same zero set as the
/// plain difference, but it stays O(1) while `g' -> infinity`.
pub fn minimal_first_integral_defect(p: &MinimalProfileParams, g: f64, gp: f64) -> f64 {
    g.powi(4) * (gp * gp + p.k()) / p.m - 1.0
}

/// Relative defect of the conformal first integral,
/// `g^4 e^{-4/g} (g'^2 + 1/(1 + a^2)) / C - 1`, i.e. the plain difference
/// `g'^2 - (C e^{4/g}/g^4 - 1/(1 + a^2))` scaled by `g^4 e^{-4/g} / C`.
pub fn conformal_first_integral_defect(p: &ConformalProfileParams, g: f64, gp: f64) -> f64 {
    g.powi(4) * (-4.0 / g).exp() * (gp * gp + p.k()) / p.c - 1.0
}

/// A solution of the profile equation with a first integral that leaves
/// the half-space in finite time.
trait BlowupProfile {
    fn y0(&self) -> f64;
    fn second_derivative(&self, g: f64, gp: f64) -> f64;
    /// `g'^2` as a function of `g`.
    fn slope_squared(&self, g: f64) -> f64;
    /// `1 / |g'|` as a function of `g`, finite down to `g = 0`.
    fn inverse_speed(&self, g: f64) -> f64;
}

impl BlowupProfile for MinimalProfileParams {
    fn y0(&self) -> f64 {
        self.y0
    }

    fn second_derivative(&self, g: f64, gp: f64) -> f64 {
        minimal_rhs(self, g, gp)
    }

    fn slope_squared(&self, g: f64) -> f64 {
        self.m / g.powi(4) - self.k()
    }

    fn inverse_speed(&self, g: f64) -> f64 {
        g * g / (self.m - self.k() * g.powi(4)).sqrt()
    }
}

impl BlowupProfile for ConformalProfileParams {
    fn y0(&self) -> f64 {
        self.y0
    }

    fn second_derivative(&self, g: f64, gp: f64) -> f64 {
        conformal_rhs(self, g, gp)
    }

    fn slope_squared(&self, g: f64) -> f64 {
        self.c * (4.0 / g).exp() / g.powi(4) - self.k()
    }

    fn inverse_speed(&self, g: f64) -> f64 {
        let damp = (-2.0 / g).exp();
        g * g * damp / (self.c - self.k() * g.powi(4) * damp * damp).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileNode {
    pub t: f64,
    pub g: f64,
    pub gp: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlowupEvents {
    pub left_blowup_t: Option<f64>,
    pub right_blowup_t: Option<f64>,
    /// Set when a side ended without reaching its target (step-size
    /// underflow or the step budget), not when blow-up was detected.
    pub truncated: bool,
}

/// An integrated profile curve. Nodes are strictly increasing in `t`
/// (the profile's own variable) and carry `g > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSolution {
    params: ProfileParams,
    nodes: Vec<ProfileNode>,
    events: BlowupEvents,
    conserved_max_defect: Option<f64>,
}

impl ProfileSolution {
    fn new(params: ProfileParams, nodes: Vec<ProfileNode>, events: BlowupEvents) -> Self {
        let conserved_max_defect = match params {
            ProfileParams::GrimReaper(_) => None,
            _ => Some(
                nodes
                    .iter()
                    .filter_map(|n| params.first_integral_defect(n.g, n.gp))
                    .map(f64::abs)
                    .fold(0.0, f64::max),
            ),
        };
        ProfileSolution {
            params,
            nodes,
            events,
            conserved_max_defect,
        }
    }

    pub fn params(&self) -> &ProfileParams {
        &self.params
    }

    pub fn nodes(&self) -> &[ProfileNode] {
        &self.nodes
    }

    pub fn events(&self) -> &BlowupEvents {
        &self.events
    }

    pub fn conserved_max_defect(&self) -> Option<f64> {
        self.conserved_max_defect
    }

    pub fn t_range(&self) -> (f64, f64) {
        (self.nodes[0].t, self.nodes[self.nodes.len() - 1].t)
    }

    pub fn second_derivative_at(&self, node: &ProfileNode) -> f64 {
        self.params.second_derivative(node.t, node.g, node.gp)
    }

    pub fn first_integral_defect_at(&self, node: &ProfileNode) -> Option<f64> {
        self.params.first_integral_defect(node.g, node.gp)
    }

    /// `(g, g', g'')` at `t`: cubic Hermite interpolation of `g` (with `g'`
    /// as slope data) and of `g'` (with `g''` from the equation), then `g''`
    /// re-evaluated from the equation at the interpolated state.
    pub fn jet_at(&self, t: f64) -> Result<ScalarJet2> {
        let (lo, hi) = self.t_range();
        if !(t >= lo && t <= hi) {
            return Err(Error::OutOfRange { t, lo, hi });
        }
        let i = match self.nodes.partition_point(|n| n.t <= t) {
            0 => 0,
            k if k >= self.nodes.len() => self.nodes.len() - 2,
            k => k - 1,
        };
        let (a, b) = (&self.nodes[i], &self.nodes[i + 1]);
        let (g, gp) = if t == a.t {
            (a.g, a.gp)
        } else if t == b.t {
            (b.g, b.gp)
        } else {
            let h = b.t - a.t;
            let u = (t - a.t) / h;
            let (h00, h10, h01, h11) = hermite_basis(u);
            let g = h00 * a.g + h10 * h * a.gp + h01 * b.g + h11 * h * b.gp;
            let gpp_a = self.second_derivative_at(a);
            let gpp_b = self.second_derivative_at(b);
            let gp = h00 * a.gp + h10 * h * gpp_a + h01 * b.gp + h11 * h * gpp_b;
            (g, gp)
        };
        if !(g > 0.0) {
            return Err(Error::NonPositiveHeight { z: g });
        }
        Ok(ScalarJet2::new(
            g,
            gp,
            self.params.second_derivative(t, g, gp),
        ))
    }
}

fn hermite_basis(u: f64) -> (f64, f64, f64, f64) {
    let u2 = u * u;
    let u3 = u2 * u;
    (
        2.0 * u3 - 3.0 * u2 + 1.0,
        u3 - 2.0 * u2 + u,
        -2.0 * u3 + 3.0 * u2,
        u3 - u2,
    )
}

struct Side {
    nodes: Vec<ProfileNode>,
    blowup: Option<f64>,
    truncated: bool,
}

fn remaining_time<P: BlowupProfile>(p: &P, g_from: f64, opts: &IntegrationOptions) -> Option<f64> {
    let mut tau = 0.0;
    let out = integrator::integrate(
        |g, _: &[f64; 1]| [p.inverse_speed(g)],
        g_from,
        [0.0],
        0.0,
        &opts.stepper(f64::INFINITY),
        |_, y| {
            tau = y[0];
            Control::Continue
        },
    );
    (out == Outcome::Reached).then_some(tau.abs())
}

/// One half of a blow-up profile, starting at the maximum `t = 0`.
/// `dir = 1` integrates towards `+r`, `dir = -1` towards `-r`.
fn integrate_side<P: BlowupProfile>(p: &P, dir: f64, opts: &IntegrationOptions) -> Side {
    let y0 = p.y0();
    let mut nodes = vec![ProfileNode {
        t: 0.0,
        g: y0,
        gp: 0.0,
    }];
    let stop = |g: f64, gp: f64| g < opts.eps_g || gp.abs() > opts.m_stop;

    let outcome = integrator::integrate(
        |_, y: &[f64; 2]| [y[1], p.second_derivative(y[0], y[1])],
        0.0,
        [y0, 0.0],
        dir * f64::MAX,
        &opts.stepper(f64::INFINITY),
        |t, y| {
            nodes.push(ProfileNode {
                t,
                g: y[0],
                gp: y[1],
            });
            if stop(y[0], y[1]) || y[1].abs() >= opts.switch_slope {
                Control::Stop
            } else {
                Control::Continue
            }
        },
    );
    if outcome != Outcome::Stopped {
        return Side {
            nodes,
            blowup: None,
            truncated: true,
        };
    }

    let switch = *nodes.last().expect("initial node");
    if !stop(switch.g, switch.gp) {
        // dt/du with u = ln g; g decreases away from t = 0 on both sides.
        let t_of_u = |u: f64, _: &[f64; 1]| {
            let g = u.exp();
            [-dir * g * p.inverse_speed(g)]
        };
        let mut last_t = switch.t;
        let outcome = integrator::integrate(
            t_of_u,
            switch.g.ln(),
            [switch.t],
            opts.eps_g.ln() - 1.0,
            &opts.stepper(opts.tail_max_step),
            |u, y| {
                let g = u.exp();
                let gp = -dir * p.slope_squared(g).max(0.0).sqrt();
                if dir * (y[0] - last_t) > 0.0 {
                    last_t = y[0];
                    nodes.push(ProfileNode { t: y[0], g, gp });
                }
                if stop(g, gp) {
                    Control::Stop
                } else {
                    Control::Continue
                }
            },
        );
        if !matches!(outcome, Outcome::Stopped | Outcome::Reached) {
            return Side {
                nodes,
                blowup: None,
                truncated: true,
            };
        }
    }

    let last = *nodes.last().expect("initial node");
    let blowup = remaining_time(p, last.g, opts).map(|tau| last.t + dir * tau);
    Side {
        truncated: blowup.is_none(),
        nodes,
        blowup,
    }
}

fn integrate_blowup_profile<P: BlowupProfile>(
    p: &P,
    params: ProfileParams,
    opts: &IntegrationOptions,
) -> Result<ProfileSolution> {
    opts.validate()?;
    let right = integrate_side(p, 1.0, opts);
    let left = integrate_side(p, -1.0, opts);
    let mut nodes: Vec<ProfileNode> = left.nodes.iter().skip(1).rev().copied().collect();
    nodes.extend(right.nodes.iter().copied());
    let events = BlowupEvents {
        left_blowup_t: left.blowup,
        right_blowup_t: right.blowup,
        truncated: left.truncated || right.truncated,
    };
    Ok(ProfileSolution::new(params, nodes, events))
}

pub fn integrate_minimal_profile(
    p: &MinimalProfileParams,
    opts: &IntegrationOptions,
) -> Result<ProfileSolution> {
    integrate_blowup_profile(p, ProfileParams::Minimal(*p), opts)
}

pub fn integrate_conformal_profile(
    p: &ConformalProfileParams,
    opts: &IntegrationOptions,
) -> Result<ProfileSolution> {
    integrate_blowup_profile(p, ProfileParams::Conformal(*p), opts)
}

/// Integrates the grim reaper equation over `span = (lo, hi)`, `lo <= 0 <= hi`,
/// in the profile variable.
pub fn integrate_grim_reaper(
    p: &GrimReaperParams,
    span: (f64, f64),
    opts: &IntegrationOptions,
) -> Result<ProfileSolution> {
    opts.validate()?;
    let (lo, hi) = span;
    if !(lo.is_finite() && hi.is_finite() && lo <= 0.0 && hi >= 0.0 && lo < hi) {
        return Err(Error::param(
            "span",
            if lo > 0.0 { lo } else { hi },
            "span must contain 0",
        ));
    }
    let stepper = opts.stepper(f64::INFINITY);
    let mut truncated = false;
    let mut sides: Vec<Vec<ProfileNode>> = Vec::with_capacity(2);
    for end in [lo, hi] {
        let mut nodes = vec![ProfileNode {
            t: 0.0,
            g: 1.0,
            gp: p.lambda,
        }];
        let outcome = if p.lambda > 0.0 {
            // (g, ln g') keeps the slope positive through its decay.
            integrator::integrate(
                |t, y: &[f64; 2]| {
                    let gp = y[1].exp();
                    [gp, -(p.k + gp * gp) * (2.0 * t) / (y[0] * y[0])]
                },
                0.0,
                [1.0, p.lambda.ln()],
                end,
                &stepper,
                |t, y| {
                    nodes.push(ProfileNode {
                        t,
                        g: y[0],
                        gp: y[1].exp(),
                    });
                    Control::Continue
                },
            )
        } else {
            integrator::integrate(
                |t, y: &[f64; 2]| [y[1], grim_reaper_rhs(p, t, y[0], y[1])],
                0.0,
                [1.0, 0.0],
                end,
                &stepper,
                |t, y| {
                    nodes.push(ProfileNode {
                        t,
                        g: y[0],
                        gp: y[1],
                    });
                    Control::Continue
                },
            )
        };
        truncated |= outcome != Outcome::Reached;
        sides.push(nodes);
    }
    let mut nodes: Vec<ProfileNode> = sides[0].iter().skip(1).rev().copied().collect();
    nodes.extend(sides[1].iter().copied());
    if nodes.iter().any(|n| !(n.g > 0.0) || !n.g.is_finite()) {
        return Err(Error::Integration(
            "grim reaper profile left the half-space".into(),
        ));
    }
    let events = BlowupEvents {
        left_blowup_t: None,
        right_blowup_t: None,
        truncated,
    };
    Ok(ProfileSolution::new(
        ProfileParams::GrimReaper(*p),
        nodes,
        events,
    ))
}

/// Half-width of the profile interval, `integral_0^{y0} dg / sqrt(V(g))`
/// where `g'^2 = V(g)` is the first integral, written as
/// `V = K expm1(dphi(x))` with `g = y0 (1 - x)`. The substitution
/// `x = u^2` removes the square-root singularity at the turning height.
fn halfwidth_by_quadrature<D>(k: f64, y0: f64, dphi: D) -> f64
where
    D: Fn(f64) -> f64,
{
    let integrand = |u: f64| {
        if u <= 0.0 {
            // limit u -> 0: 2 y0 / sqrt(K dphi'(0))
            let x = 1e-300;
            return 2.0 * y0 / (k * dphi(x) / x).sqrt();
        }
        let x = u * u;
        if x >= 1.0 {
            return 0.0;
        }
        let v_over_x = k * dphi(x).exp_m1() / x;
        2.0 * y0 / v_over_x.sqrt()
    };
    quadrature::integrate(integrand, 0.0, 1.0, 1e-15, 1e-13).0
}

/// Half-width `r` of the minimal profile's interval `(-r, r)`.
pub fn minimal_halfwidth_quadrature(c: f64, y0: f64) -> Result<f64> {
    let p = MinimalProfileParams::new(c, y0)?;
    // V = K (y0^4 / g^4 - 1)
    Ok(halfwidth_by_quadrature(p.k(), y0, |x| -4.0 * (-x).ln_1p()))
}

/// Half-width `r` of the conformal profile's interval `(-r, r)`.
pub fn conformal_halfwidth_quadrature(a: f64, y0: f64) -> Result<f64> {
    let p = ConformalProfileParams::new(a, y0)?;
    // V = K (y0^4 e^{-4/y0} e^{4/g} / g^4 - 1)
    Ok(halfwidth_by_quadrature(p.k(), y0, move |x| {
        -4.0 * (-x).ln_1p() + 4.0 * x / (y0 * (1.0 - x))
    }))
}

/// Measured qualitative behavior of a profile.
#[derive(Debug, Clone, PartialEq)]
pub struct QualitativeVerdict {
    /// `max |g(t) - g(-t)|` over nodes whose mirror lies in the range.
    pub symmetry_defect: f64,
    pub symmetric: bool,
    /// `g'' < 0` at every node.
    pub concave: bool,
    /// `g'' >= 0` for `t < 0`, `g'' <= 0` for `t > 0`, `g''(0) = 0`, with
    /// strict signs wherever `g' != 0`.
    pub convex_then_concave: bool,
    pub monotone_increasing: bool,
    /// `max |g - g(0)|`.
    pub constant_defect: f64,
    pub constant: bool,
    pub inf_g: f64,
    pub sup_g: f64,
    pub bounded: bool,
    pub max_at_zero: bool,
    pub blowup_left: bool,
    pub blowup_right: bool,
    pub blowup_both: bool,
}

pub const SYMMETRY_TOLERANCE: f64 = 1e-8;
pub const CONSTANT_TOLERANCE: f64 = 1e-12;

pub fn qualitative_verdict(sol: &ProfileSolution) -> Result<QualitativeVerdict> {
    let nodes = sol.nodes();
    if nodes.len() < 3 {
        return Err(Error::param(
            "nodes",
            nodes.len() as f64,
            "need at least three nodes",
        ));
    }
    let (lo, hi) = sol.t_range();
    let mut symmetry_defect: f64 = 0.0;
    for n in nodes
        .iter()
        .filter(|n| n.t > 0.0 && -n.t >= lo && -n.t <= hi)
    {
        let mirror = sol.jet_at(-n.t)?;
        symmetry_defect = symmetry_defect.max((n.g - mirror.value).abs());
    }

    let gpp: Vec<f64> = nodes.iter().map(|n| sol.second_derivative_at(n)).collect();
    let concave = gpp.iter().all(|&v| v < 0.0);
    let mut convex_then_concave = true;
    let mut strict_left = false;
    let mut strict_right = false;
    for (n, &v) in nodes.iter().zip(&gpp) {
        let ok = if n.t < 0.0 {
            strict_left |= v > 0.0;
            v > 0.0 || (v == 0.0 && n.gp == 0.0)
        } else if n.t > 0.0 {
            strict_right |= v < 0.0;
            v < 0.0 || (v == 0.0 && n.gp == 0.0)
        } else {
            v == 0.0
        };
        convex_then_concave &= ok;
    }
    convex_then_concave &= strict_left && strict_right;

    let monotone_increasing =
        nodes.windows(2).all(|w| w[1].g >= w[0].g) && nodes[nodes.len() - 1].g > nodes[0].g;

    let center = nodes
        .iter()
        .find(|n| n.t == 0.0)
        .copied()
        .unwrap_or(nodes[0]);
    let constant_defect = nodes
        .iter()
        .map(|n| (n.g - center.g).abs())
        .fold(0.0, f64::max);
    let inf_g = nodes.iter().map(|n| n.g).fold(f64::INFINITY, f64::min);
    let sup_g = nodes.iter().map(|n| n.g).fold(f64::NEG_INFINITY, f64::max);
    let max_at_zero = nodes.iter().all(|n| n.g <= center.g);
    let ev = sol.events();
    Ok(QualitativeVerdict {
        symmetry_defect,
        symmetric: symmetry_defect <= SYMMETRY_TOLERANCE,
        concave,
        convex_then_concave,
        monotone_increasing,
        constant_defect,
        constant: constant_defect <= CONSTANT_TOLERANCE,
        inf_g,
        sup_g,
        bounded: inf_g > 0.0 && sup_g.is_finite(),
        max_at_zero,
        blowup_left: ev.left_blowup_t.is_some(),
        blowup_right: ev.right_blowup_t.is_some(),
        blowup_both: ev.left_blowup_t.is_some() && ev.right_blowup_t.is_some(),
    })
}
