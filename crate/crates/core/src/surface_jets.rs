//! Second-order jets of parameterized surfaces and the curvature data read
//! off them.
//!
//! The orientation is fixed once and for all as `N = Xs x Xt / |Xs x Xt|`.
//! Every mean curvature and every soliton residual in this crate is stated
//! relative to that choice; reversing it negates them.

use crate::error::{Error, Result};
use crate::lie_halfspace::vertical_rotation_matrix;
use crate::Vec3;

/// Below this the tangent vectors are considered collinear.
pub const DEGENERACY_THRESHOLD: f64 = 1e-300;

/// Value and first two derivatives of a scalar function at one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarJet2 {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl ScalarJet2 {
    pub fn new(value: f64, d1: f64, d2: f64) -> Self {
        ScalarJet2 { value, d1, d2 }
    }

    pub fn constant(value: f64) -> Self {
        ScalarJet2::new(value, 0.0, 0.0)
    }

    /// Jet of `slope * x + intercept` at `x`.
    pub fn linear(slope: f64, intercept: f64, x: f64) -> Self {
        ScalarJet2::new(slope * x + intercept, slope, 0.0)
    }
}

/// Value and first two derivatives of a space curve at one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveJet2 {
    pub value: Vec3,
    pub d1: Vec3,
    pub d2: Vec3,
}

impl CurveJet2 {
    pub fn new(value: Vec3, d1: Vec3, d2: Vec3) -> Self {
        CurveJet2 { value, d1, d2 }
    }

    /// The graph curve `s -> (s, f(s), 1)` in the horosphere `z = 1`.
    pub fn horospherical_graph(f: ScalarJet2, s: f64) -> Self {
        CurveJet2::new(
            Vec3::new(s, f.value, 1.0),
            Vec3::new(1.0, f.d1, 0.0),
            Vec3::new(0.0, f.d2, 0.0),
        )
    }

    /// The graph curve `t -> (0, t, g(t))` in the vertical plane `x = 0`.
    pub fn vertical_graph(g: ScalarJet2, t: f64) -> Self {
        CurveJet2::new(
            Vec3::new(0.0, t, g.value),
            Vec3::new(0.0, 1.0, g.d1),
            Vec3::new(0.0, 0.0, g.d2),
        )
    }

    /// The vertical line `t -> (0, b, t)`.
    pub fn vertical_line(b: f64, t: f64) -> Self {
        CurveJet2::new(Vec3::new(0.0, b, t), Vec3::z(), Vec3::zeros())
    }

    pub fn identity() -> Self {
        CurveJet2::new(Vec3::z(), Vec3::zeros(), Vec3::zeros())
    }
}

/// Position and partial derivatives up to order two of a surface `X(s, t)`
/// at one parameter pair. Only immersed jets over the half-space exist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet2 {
    x: Vec3,
    xs: Vec3,
    xt: Vec3,
    xss: Vec3,
    xst: Vec3,
    xtt: Vec3,
}

impl SurfaceJet2 {
    pub fn new(x: Vec3, xs: Vec3, xt: Vec3, xss: Vec3, xst: Vec3, xtt: Vec3) -> Result<Self> {
        for v in [&x, &xs, &xt, &xss, &xst, &xtt] {
            if let Some(bad) = v.iter().copied().find(|c| !c.is_finite()) {
                return Err(Error::NonFinite {
                    what: "surface jet component",
                    value: bad,
                });
            }
        }
        if x.z <= 0.0 {
            return Err(Error::NonPositiveHeight { z: x.z });
        }
        let cross_norm = xs.cross(&xt).norm();
        if cross_norm < DEGENERACY_THRESHOLD {
            return Err(Error::Degenerate { cross_norm });
        }
        Ok(SurfaceJet2 {
            x,
            xs,
            xt,
            xss,
            xst,
            xtt,
        })
    }

    pub fn position(&self) -> Vec3 {
        self.x
    }

    pub fn xs(&self) -> Vec3 {
        self.xs
    }

    pub fn xt(&self) -> Vec3 {
        self.xt
    }

    pub fn xss(&self) -> Vec3 {
        self.xss
    }

    pub fn xst(&self) -> Vec3 {
        self.xst
    }

    pub fn xtt(&self) -> Vec3 {
        self.xtt
    }

    pub fn normal(&self) -> Vec3 {
        unit_normal(self)
    }

    pub fn forms(&self) -> FundamentalForms {
        fundamental_forms(self)
    }

    pub fn mean_curvature(&self) -> f64 {
        euclidean_mean_curvature(&self.forms())
    }

    pub fn hyperbolic_mean_curvature(&self) -> f64 {
        // X3 > 0 is a construction invariant
        self.x.z * self.mean_curvature() + self.normal().z
    }

    /// The jet of the surface after the rotation about the vertical axis.
    pub fn rotated(&self, theta: f64) -> SurfaceJet2 {
        let a = vertical_rotation_matrix(theta);
        SurfaceJet2 {
            x: a * self.x,
            xs: a * self.xs,
            xt: a * self.xt,
            xss: a * self.xss,
            xst: a * self.xst,
            xtt: a * self.xtt,
        }
    }

    pub(crate) fn slots(&self) -> [Vec3; 6] {
        [self.x, self.xs, self.xt, self.xss, self.xst, self.xtt]
    }
}

/// First and second fundamental forms. The letters follow the convention
/// `l <-> ss`, `m <-> tt`, `n <-> st`; `w` is `|Xs x Xt| = sqrt(EG - F^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    pub w: f64,
}

impl FundamentalForms {
    pub fn mean_curvature(&self) -> f64 {
        euclidean_mean_curvature(self)
    }
}

/// Jet of the first-kind surface `(s, t + f(s), g(t))`.
pub fn first_kind_jet(fj: ScalarJet2, gj: ScalarJet2, s: f64, t: f64) -> Result<SurfaceJet2> {
    if !(gj.value > 0.0) {
        return Err(Error::NonPositiveHeight { z: gj.value });
    }
    SurfaceJet2::new(
        Vec3::new(s, fj.value + t, gj.value),
        Vec3::new(1.0, fj.d1, 0.0),
        Vec3::new(0.0, 1.0, gj.d1),
        Vec3::new(0.0, fj.d2, 0.0),
        Vec3::zeros(),
        Vec3::new(0.0, 0.0, gj.d2),
    )
}

/// Jet of the second-kind surface `(s, f(s) + b, t)`, `t > 0`.
pub fn second_kind_jet(fj: ScalarJet2, b: f64, s: f64, t: f64) -> Result<SurfaceJet2> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveHeight { z: t });
    }
    SurfaceJet2::new(
        Vec3::new(s, fj.value + b, t),
        Vec3::new(1.0, fj.d1, 0.0),
        Vec3::z(),
        Vec3::new(0.0, fj.d2, 0.0),
        Vec3::zeros(),
        Vec3::zeros(),
    )
}

/// Derivative slots of `(s, t) -> alpha(s) * beta(t)` without the immersion
/// check, in the order `X, Xs, Xt, Xss, Xst, Xtt`.
pub(crate) fn product_slots(a: &CurveJet2, b: &CurveJet2) -> [Vec3; 6] {
    // (z1 x2 + x1, z1 y2 + y1, z1 z2) is bilinear in (alpha, beta) apart
    // from the additive alpha_1, alpha_2.
    let mix =
        |az: f64, bv: &Vec3, ax: f64, ay: f64| Vec3::new(az * bv.x + ax, az * bv.y + ay, az * bv.z);
    [
        mix(a.value.z, &b.value, a.value.x, a.value.y),
        mix(a.d1.z, &b.value, a.d1.x, a.d1.y),
        mix(a.value.z, &b.d1, 0.0, 0.0),
        mix(a.d2.z, &b.value, a.d2.x, a.d2.y),
        mix(a.d1.z, &b.d1, 0.0, 0.0),
        mix(a.value.z, &b.d2, 0.0, 0.0),
    ]
}

/// Jet of the translation surface `alpha(s) * beta(t)`.
pub fn product_surface_jet(aj: &CurveJet2, bj: &CurveJet2) -> Result<SurfaceJet2> {
    if !(aj.value.z > 0.0) {
        return Err(Error::NonPositiveHeight { z: aj.value.z });
    }
    if !(bj.value.z > 0.0) {
        return Err(Error::NonPositiveHeight { z: bj.value.z });
    }
    let [x, xs, xt, xss, xst, xtt] = product_slots(aj, bj);
    SurfaceJet2::new(x, xs, xt, xss, xst, xtt)
}

pub fn unit_normal(j: &SurfaceJet2) -> Vec3 {
    let c = j.xs.cross(&j.xt);
    c / c.norm()
}

pub fn fundamental_forms(j: &SurfaceJet2) -> FundamentalForms {
    let cross = j.xs.cross(&j.xt);
    let w = cross.norm();
    let n = cross / w;
    FundamentalForms {
        e: j.xs.dot(&j.xs),
        f: j.xs.dot(&j.xt),
        g: j.xt.dot(&j.xt),
        l: j.xss.dot(&n),
        m: j.xtt.dot(&n),
        n: j.xst.dot(&n),
        w,
    }
}

/// `H = (lG - 2nF + Em) / (2(EG - F^2))`.
pub fn euclidean_mean_curvature(ff: &FundamentalForms) -> f64 {
    (ff.l * ff.g - 2.0 * ff.n * ff.f + ff.e * ff.m) / (2.0 * (ff.e * ff.g - ff.f * ff.f))
}

/// Mean curvature in the hyperbolic metric, `X3 (H + N3 / X3)`.
pub fn hyperbolic_mean_curvature(h: f64, n3: f64, x3: f64) -> Result<f64> {
    if !(x3 > 0.0) {
        return Err(Error::NonPositiveHeight { z: x3 });
    }
    Ok(x3 * h + n3)
}

/// Central second-order differences of `eval` on the `(s +- h, t +- h)`
/// stencil.
pub fn finite_difference_jet<F>(eval: F, s: f64, t: f64, h: f64) -> Result<SurfaceJet2>
where
    F: Fn(f64, f64) -> Result<Vec3>,
{
    if !(h > 0.0) {
        return Err(Error::param("h", h, "step must be positive"));
    }
    let at = |ds: f64, dt: f64| -> Result<Vec3> {
        let (ss, tt) = (s + ds, t + dt);
        let v = eval(ss, tt).map_err(|e| Error::Domain {
            s: ss,
            t: tt,
            reason: e.to_string(),
        })?;
        if !(v.z > 0.0) {
            return Err(Error::Domain {
                s: ss,
                t: tt,
                reason: format!("stencil height {} is not positive", v.z),
            });
        }
        Ok(v)
    };
    let c = at(0.0, 0.0)?;
    let sp = at(h, 0.0)?;
    let sm = at(-h, 0.0)?;
    let tp = at(0.0, h)?;
    let tm = at(0.0, -h)?;
    let pp = at(h, h)?;
    let pm = at(h, -h)?;
    let mp = at(-h, h)?;
    let mm = at(-h, -h)?;
    let h2 = h * h;
    SurfaceJet2::new(
        c,
        (sp - sm) / (2.0 * h),
        (tp - tm) / (2.0 * h),
        (sp - 2.0 * c + sm) / h2,
        (pp - pm - mp + mm) / (4.0 * h2),
        (tp - 2.0 * c + tm) / h2,
    )
}

/// Largest componentwise difference between two jets over all six slots.
pub fn jet_distance(a: &SurfaceJet2, b: &SurfaceJet2) -> f64 {
    a.slots()
        .iter()
        .zip(b.slots().iter())
        .map(|(u, v)| (u - v).amax())
        .fold(0.0, f64::max)
}
