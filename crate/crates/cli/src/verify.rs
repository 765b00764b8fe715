//! The verification suite behind `transurf verify`.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transurf::lie_halfspace::{
    lie_inverse, lie_product, rotation_about_vertical, semidirect_to_halfspace, HalfSpacePoint,
    SemidirectPoint,
};
use transurf::profile_odes::{
    conformal_halfwidth_quadrature, integrate_grim_reaper, minimal_halfwidth_quadrature,
    qualitative_verdict, ConformalProfileParams, GrimReaperParams, IntegrationOptions,
};
use transurf::soliton_residuals::{
    general_residual, reduced_residual_first_kind, reduced_residual_second_kind,
};
use transurf::surface_factory::{
    make_conformal_cylinder, make_grim_reaper, make_horosphere, make_minimal_cylinder,
    make_vertical_plane, make_vertical_plane_offset, sample_grid, GridSpec, SurfaceFamily,
};
use transurf::surface_jets::{
    finite_difference_jet, first_kind_jet, jet_distance, product_surface_jet, second_kind_jet,
    CurveJet2, ScalarJet2, SurfaceJet2,
};
use transurf::{residual_report, SolitonMode, Vec3};

use crate::config::{FamilySpec, OdeSpec};
use crate::export;
use crate::CliError;

pub const GROUPS: [&str; 10] = [
    "lie",
    "horosphere",
    "vertical-plane",
    "minimal-cylinder",
    "grim-reaper",
    "conformal-cylinder",
    "reduced-equivalence",
    "finite-difference",
    "falsification",
    "determinism",
];

const SAMPLES: usize = 1000;
const SEED: u64 = 0x7261_6e73_7572_6621;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
    Above(f64),
    Within(f64, f64),
}

impl Bound {
    fn holds(&self, v: f64) -> bool {
        match *self {
            Bound::AtMost(t) => v <= t,
            Bound::AtLeast(t) => v >= t,
            Bound::Above(t) => v > t,
            Bound::Within(lo, hi) => v >= lo && v <= hi,
        }
    }

    fn describe(&self) -> String {
        match *self {
            Bound::AtMost(t) => format!("<= {t:e}"),
            Bound::AtLeast(t) => format!(">= {t}"),
            Bound::Above(t) => format!("> {t:e}"),
            Bound::Within(lo, hi) => format!("in [{lo}, {hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub tolerance: Bound,
    pub seconds: f64,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifySummary {
    pub checks: Vec<CheckResult>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(
                out,
                "{:<4} {:<20} {:<52} {:>22}  {:<14} {:>8.3}s{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.group,
                c.name,
                export::num(c.measured),
                c.tolerance.describe(),
                c.seconds,
                c.error
                    .as_deref()
                    .map(|e| format!("  ({e})"))
                    .unwrap_or_default()
            )
            .unwrap();
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(
            out,
            "{}: {} checks, {} failed",
            if failed == 0 { "OK" } else { "FAILED" },
            self.checks.len(),
            failed
        )
        .unwrap();
        out
    }
}

struct Runner {
    group: &'static str,
    checks: Vec<CheckResult>,
}

impl Runner {
    fn check<F>(&mut self, name: impl Into<String>, tolerance: Bound, f: F)
    where
        F: FnOnce() -> Result<f64, CliError>,
    {
        let start = Instant::now();
        let outcome = f();
        let seconds = start.elapsed().as_secs_f64();
        let (measured, error) = match outcome {
            Ok(v) => (v, None),
            Err(e) => (f64::NAN, Some(e.to_string())),
        };
        self.checks.push(CheckResult {
            group: self.group,
            name: name.into(),
            passed: error.is_none() && tolerance.holds(measured),
            measured,
            tolerance,
            seconds,
            error,
        });
    }
}

/// Runs the named groups (all of them when `only` is empty).
pub fn run_verify(only: &[String]) -> Result<VerifySummary, CliError> {
    for g in only {
        if !GROUPS.contains(&g.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown check group {g:?}; known groups: {}",
                GROUPS.join(", ")
            )));
        }
    }
    let mut summary = VerifySummary::default();
    for group in GROUPS {
        if !only.is_empty() && !only.iter().any(|g| g == group) {
            continue;
        }
        let mut r = Runner {
            group,
            checks: Vec::new(),
        };
        match group {
            "lie" => lie(&mut r),
            "horosphere" => horosphere(&mut r),
            "vertical-plane" => vertical_plane(&mut r),
            "minimal-cylinder" => minimal_cylinder(&mut r),
            "grim-reaper" => grim_reaper(&mut r),
            "conformal-cylinder" => conformal_cylinder(&mut r),
            "reduced-equivalence" => reduced_equivalence(&mut r),
            "finite-difference" => finite_difference(&mut r),
            "falsification" => falsification(&mut r),
            "determinism" => determinism(&mut r),
            _ => unreachable!(),
        }
        summary.checks.extend(r.checks);
    }
    Ok(summary)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn point_defect(p: &HalfSpacePoint, q: &HalfSpacePoint) -> f64 {
    rel(p.x(), q.x())
        .max(rel(p.y(), q.y()))
        .max(rel(p.z(), q.z()))
}

fn random_point(rng: &mut ChaCha8Rng) -> HalfSpacePoint {
    HalfSpacePoint::new(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-2.0f64..2.0).exp(),
    )
    .expect("sampled point is valid")
}

fn max_over<F: FnMut(&mut ChaCha8Rng) -> f64>(seed: u64, mut f: F) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLES).map(|_| f(&mut rng)).fold(0.0, f64::max)
}

fn lie(r: &mut Runner) {
    let tol = Bound::AtMost(1e-12);
    r.check("associativity", tol, || {
        Ok(max_over(SEED, |rng| {
            let (p, q, s) = (random_point(rng), random_point(rng), random_point(rng));
            point_defect(
                &lie_product(&lie_product(&p, &q), &s),
                &lie_product(&p, &lie_product(&q, &s)),
            )
        }))
    });
    r.check("identity", tol, || {
        Ok(max_over(SEED + 1, |rng| {
            let p = random_point(rng);
            let e = HalfSpacePoint::IDENTITY;
            point_defect(&lie_product(&e, &p), &p).max(point_defect(&lie_product(&p, &e), &p))
        }))
    });
    r.check("inverse", tol, || {
        Ok(max_over(SEED + 2, |rng| {
            let p = random_point(rng);
            let e = HalfSpacePoint::IDENTITY;
            let inv = lie_inverse(&p);
            point_defect(&lie_product(&p, &inv), &e).max(point_defect(&lie_product(&inv, &p), &e))
        }))
    });
    r.check("exponential chart homomorphism", tol, || {
        let mut worst: f64 = 0.0;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
        for _ in 0..SAMPLES {
            let mut sample = || {
                SemidirectPoint::new(
                    rng.gen_range(-10.0..10.0),
                    rng.gen_range(-10.0..10.0),
                    rng.gen_range(-2.0..2.0),
                )
                .expect("finite")
            };
            let (a, b) = (sample(), sample());
            let lhs = semidirect_to_halfspace(&a.compose(&b))?;
            let rhs = lie_product(&semidirect_to_halfspace(&a)?, &semidirect_to_halfspace(&b)?);
            worst = worst.max(point_defect(&lhs, &rhs));
        }
        Ok(worst)
    });
    r.check("rotation equivariance", tol, || {
        Ok(max_over(SEED + 4, |rng| {
            let (p, q) = (random_point(rng), random_point(rng));
            let theta = rng.gen_range(-7.0..7.0);
            let lhs = rotation_about_vertical(theta, &lie_product(&p, &q));
            let rhs = lie_product(
                &rotation_about_vertical(theta, &p),
                &rotation_about_vertical(theta, &q),
            );
            point_defect(&lhs, &rhs)
        }))
    });
}

fn grid(ns: usize, nt: usize, margin: f64) -> GridSpec {
    GridSpec::new(ns, nt, margin).expect("valid grid")
}

fn residual_max(fam: &SurfaceFamily, mode: SolitonMode, g: &GridSpec) -> Result<f64, CliError> {
    let report = residual_report(fam, mode, g)?;
    if let Some(f) = report.failures.first() {
        return Err(CliError::Compute(f.error.clone()));
    }
    Ok(report.max_abs())
}

fn horosphere(r: &mut Runner) {
    let g = grid(101, 101, 0.0);
    for a in [0.5, 1.0, 2.0] {
        r.check(
            format!("a={a} translator residual"),
            Bound::AtMost(1e-10),
            || residual_max(&make_horosphere(a)?, SolitonMode::Translator, &g),
        );
        r.check(
            format!("a={a} |hyperbolic H - 1|"),
            Bound::AtMost(1e-10),
            || {
                let sampled = sample_grid(&make_horosphere(a)?, &g)?;
                Ok(sampled
                    .jets()
                    .map(|j| (j.hyperbolic_mean_curvature() - 1.0).abs())
                    .fold(0.0, f64::max))
            },
        );
    }
}

fn vertical_plane(r: &mut Runner) {
    let g = grid(101, 101, 0.0);
    for (c, d) in [(0.0, 0.0), (1.0, -1.0), (3.0, 2.0)] {
        let b = 0.0 - d;
        for mode in SolitonMode::ALL {
            r.check(
                format!("c={c} d={d} b={b} {mode} residual"),
                Bound::AtMost(1e-10),
                || residual_max(&make_vertical_plane_offset(c, d, b)?, mode, &g),
            );
        }
        for mode in [SolitonMode::Minimal, SolitonMode::ConformalSoliton] {
            r.check(
                format!("c={c} d={d} b=0 {mode} residual"),
                Bound::AtMost(1e-10),
                || residual_max(&make_vertical_plane(c, d)?, mode, &g),
            );
        }
    }
}

fn standard_grid() -> GridSpec {
    grid(51, 51, 1e-3)
}

fn minimal_cylinder(r: &mut Runner) {
    let fam = match make_minimal_cylinder(0.0, 1.0) {
        Ok(f) => f,
        Err(e) => {
            r.check("construction", Bound::AtMost(0.0), || Err(e.into()));
            return;
        }
    };
    let sol = fam.profile().expect("profile family").clone();
    r.check("minimal residual", Bound::AtMost(1e-6), || {
        residual_max(&fam, SolitonMode::Minimal, &standard_grid())
    });
    r.check("first-integral defect", Bound::AtMost(1e-8), || {
        Ok(sol.conserved_max_defect().unwrap_or(f64::NAN))
    });
    r.check("symmetry defect", Bound::AtMost(1e-8), || {
        Ok(qualitative_verdict(&sol)?.symmetry_defect)
    });
    r.check(
        "half-width vs quadrature oracle",
        Bound::AtMost(1e-6),
        || {
            let reference = minimal_halfwidth_quadrature(0.0, 1.0)?;
            let ev = sol.events();
            let (lo, hi) = match (ev.left_blowup_t, ev.right_blowup_t) {
                (Some(lo), Some(hi)) => (lo, hi),
                _ => return Err(CliError::Usage("no blow-up detected".into())),
            };
            Ok((hi - reference).abs().max((-lo - reference).abs()))
        },
    );
}

fn grim_reaper(r: &mut Runner) {
    let opts = IntegrationOptions::default();
    r.check("lambda=0 max |g - 1|", Bound::AtMost(1e-12), || {
        let sol = integrate_grim_reaper(&GrimReaperParams::new(0.0, 1.0)?, (-50.0, 50.0), &opts)?;
        Ok(sol
            .nodes()
            .iter()
            .map(|n| (n.g - 1.0).abs())
            .fold(0.0, f64::max))
    });
    let sol = integrate_grim_reaper(
        &GrimReaperParams::new(0.5, 1.0).expect("valid"),
        (-50.0, 50.0),
        &opts,
    );
    let flag = |b: bool| if b { 1.0 } else { 0.0 };
    match sol {
        Ok(sol) => {
            let nodes = sol.nodes();
            let (first, last) = (nodes[0], nodes[nodes.len() - 1]);
            let verdict = qualitative_verdict(&sol);
            match verdict {
                Ok(v) => {
                    r.check("lambda=0.5 monotone increasing", Bound::AtMost(0.0), || {
                        Ok(1.0 - flag(v.monotone_increasing))
                    });
                    r.check(
                        "lambda=0.5 g'' changes sign exactly at 0",
                        Bound::AtMost(0.0),
                        || Ok(1.0 - flag(v.convex_then_concave)),
                    );
                    r.check("lambda=0.5 inf g / g(-50)", Bound::AtLeast(0.9), || {
                        if first.g.is_nan() || first.g <= 0.0 {
                            return Err(CliError::Usage("g(-50) is not positive".into()));
                        }
                        Ok(v.inf_g / first.g)
                    });
                    r.check("lambda=0.5 sup g / g(50)", Bound::AtMost(1.1), || {
                        if !last.g.is_finite() {
                            return Err(CliError::Usage("g(50) is not finite".into()));
                        }
                        Ok(v.sup_g / last.g)
                    });
                }
                Err(e) => r.check("lambda=0.5 qualitative verdict", Bound::AtMost(0.0), || {
                    Err(e.into())
                }),
            }
        }
        Err(e) => r.check("lambda=0.5 integration", Bound::AtMost(0.0), || {
            Err(e.into())
        }),
    }
    r.check(
        "lambda=0.5 surface translator residual",
        Bound::AtMost(1e-6),
        || {
            residual_max(
                &make_grim_reaper(0.5, 0.0, 0.0)?,
                SolitonMode::Translator,
                &standard_grid(),
            )
        },
    );
}

fn conformal_cylinder(r: &mut Runner) {
    let fam = match make_conformal_cylinder(0.0, 1.0) {
        Ok(f) => f,
        Err(e) => {
            r.check("construction", Bound::AtMost(0.0), || Err(e.into()));
            return;
        }
    };
    let sol = fam.profile().expect("profile family").clone();
    r.check("conformal residual", Bound::AtMost(1e-6), || {
        residual_max(&fam, SolitonMode::ConformalSoliton, &standard_grid())
    });
    r.check("|C - e^-4| from initial data", Bound::AtMost(1e-15), || {
        Ok((ConformalProfileParams::new(0.0, 1.0)?.c - (-4f64).exp()).abs())
    });
    r.check("first-integral defect", Bound::AtMost(1e-8), || {
        Ok(sol.conserved_max_defect().unwrap_or(f64::NAN))
    });
    r.check(
        "half-width vs quadrature oracle",
        Bound::AtMost(1e-6),
        || {
            let reference = conformal_halfwidth_quadrature(0.0, 1.0)?;
            Ok((sol.events().right_blowup_t.unwrap_or(f64::NAN) - reference).abs())
        },
    );
    r.check(
        "minimal residual (never minimal)",
        Bound::Above(1e-3),
        || residual_max(&fam, SolitonMode::Minimal, &standard_grid()),
    );
}

fn random_scalar(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> ScalarJet2 {
    ScalarJet2::new(
        rng.gen_range(lo..hi),
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-5.0..5.0),
    )
}

fn reduced_equivalence(r: &mut Runner) {
    for (k, mode) in SolitonMode::ALL.into_iter().enumerate() {
        r.check(format!("first kind {mode}"), Bound::AtMost(1e-10), || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10 + k as u64);
            let mut worst: f64 = 0.0;
            for _ in 0..SAMPLES {
                let (f, g) = (
                    random_scalar(&mut rng, -2.0, 2.0),
                    random_scalar(&mut rng, 0.1, 3.0),
                );
                let (s, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                let j = first_kind_jet(f, g, s, t)?;
                let scaled = general_residual(mode, &j) * 2.0 * j.forms().w.powi(3);
                worst = worst.max(rel(reduced_residual_first_kind(mode, f, g, s, t)?, scaled));
            }
            Ok(worst)
        });
        r.check(format!("second kind {mode}"), Bound::AtMost(1e-10), || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 20 + k as u64);
            let mut worst: f64 = 0.0;
            for _ in 0..SAMPLES {
                let f = random_scalar(&mut rng, -2.0, 2.0);
                let b = rng.gen_range(-2.0..2.0);
                let (s, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(0.1..3.0));
                let j = second_kind_jet(f, b, s, t)?;
                let scaled = general_residual(mode, &j) * 2.0 * j.forms().w.powi(3);
                worst = worst.max(rel(reduced_residual_second_kind(mode, f, b, s, t)?, scaled));
            }
            Ok(worst)
        });
    }
}

type Analytic = (
    &'static str,
    fn(f64, f64) -> Vec3,
    fn(f64, f64) -> transurf::Result<SurfaceJet2>,
);

fn analytic_surfaces() -> [Analytic; 3] {
    [
        (
            "first kind f=sin s, g=2+cos(t)/2",
            |s, t| Vec3::new(s, s.sin() + t, 2.0 + 0.5 * t.cos()),
            |s, t| {
                first_kind_jet(
                    ScalarJet2::new(s.sin(), s.cos(), -s.sin()),
                    ScalarJet2::new(2.0 + 0.5 * t.cos(), -0.5 * t.sin(), -0.5 * t.cos()),
                    s,
                    t,
                )
            },
        ),
        (
            "second kind f=s^3/3+e^(s/2), b=0.7",
            |s, t| Vec3::new(s, s.powi(3) / 3.0 + (0.5 * s).exp() + 0.7, t),
            |s, t| {
                let e = (0.5 * s).exp();
                second_kind_jet(
                    ScalarJet2::new(s.powi(3) / 3.0 + e, s * s + 0.5 * e, 2.0 * s + 0.25 * e),
                    0.7,
                    s,
                    t,
                )
            },
        ),
        (
            "product of two space curves",
            |s, t| {
                let (ax, ay, az) = (s.sin(), s * s, (s / 3.0).exp());
                Vec3::new(az * t + ax, az * t.cos() + ay, az * (1.0 + t * t))
            },
            |s, t| {
                let e = (s / 3.0).exp();
                let alpha = CurveJet2::new(
                    Vec3::new(s.sin(), s * s, e),
                    Vec3::new(s.cos(), 2.0 * s, e / 3.0),
                    Vec3::new(-s.sin(), 2.0, e / 9.0),
                );
                let beta = CurveJet2::new(
                    Vec3::new(t, t.cos(), 1.0 + t * t),
                    Vec3::new(1.0, -t.sin(), 2.0 * t),
                    Vec3::new(0.0, -t.cos(), 2.0),
                );
                product_surface_jet(&alpha, &beta)
            },
        ),
    ]
}

fn finite_difference(r: &mut Runner) {
    let hs = [1e-2, 5e-3, 2.5e-3];
    for (name, eval, jet) in analytic_surfaces() {
        r.check(
            format!("{name}: worst observed order"),
            Bound::Within(1.7, 2.3),
            || {
                let (s, t) = (0.3, 0.7);
                let exact = jet(s, t)?;
                let mut errs = Vec::with_capacity(hs.len());
                for h in hs {
                    let fd = finite_difference_jet(|s, t| Ok(eval(s, t)), s, t, h)?;
                    errs.push(jet_distance(&exact, &fd));
                }
                let orders: Vec<f64> = errs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
                Ok(orders
                    .into_iter()
                    .max_by(|a, b| (a - 2.0).abs().total_cmp(&(b - 2.0).abs()))
                    .unwrap_or(f64::NAN))
            },
        );
    }
}

fn falsification(r: &mut Runner) {
    const EPS: f64 = 1e-2;
    type Build = fn() -> transurf::Result<SurfaceFamily>;
    let cases: [(&str, Build, SolitonMode); 6] = [
        (
            "horosphere a=1",
            || make_horosphere(1.0),
            SolitonMode::Translator,
        ),
        (
            "vertical plane c=1 d=0",
            || make_vertical_plane(1.0, 0.0),
            SolitonMode::Minimal,
        ),
        (
            "vertical plane c=1 d=0",
            || make_vertical_plane(1.0, 0.0),
            SolitonMode::Translator,
        ),
        (
            "minimal cylinder c=0 y0=1",
            || make_minimal_cylinder(0.0, 1.0),
            SolitonMode::Minimal,
        ),
        (
            "grim reaper lambda=0.5",
            || make_grim_reaper(0.5, 0.0, 0.0),
            SolitonMode::Translator,
        ),
        (
            "conformal cylinder a=0 y0=1",
            || make_conformal_cylinder(0.0, 1.0),
            SolitonMode::ConformalSoliton,
        ),
    ];
    for (name, build, mode) in cases {
        r.check(
            format!("{name} + 1e-2 cos, {mode} residual"),
            Bound::Above(1e-4),
            || {
                let fam = build()?;
                let base = residual_max(&fam, mode, &standard_grid())?;
                if base > 1e-6 {
                    return Err(CliError::Usage(format!(
                        "unperturbed residual already {base:e}"
                    )));
                }
                let report =
                    residual_report(&fam.with_profile_perturbation(EPS)?, mode, &standard_grid())?;
                Ok(report.max_abs())
            },
        );
    }
}

fn differing_bytes(a: &str, b: &str) -> f64 {
    let diff = a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count();
    (diff + a.len().abs_diff(b.len())) as f64
}

fn determinism(r: &mut Runner) {
    r.check(
        "mesh rendered twice: differing bytes",
        Bound::AtMost(0.0),
        || {
            let spec = FamilySpec::MinimalCylinder { c: 0.5, y0: 1.0 };
            let render = || -> Result<String, CliError> {
                let fam = spec.build()?;
                export::mesh_obj(&fam, &sample_grid(&fam, &standard_grid())?)
            };
            Ok(differing_bytes(&render()?, &render()?))
        },
    );
    for ode in [
        OdeSpec::Minimal { c: 0.0, y0: 1.0 },
        OdeSpec::GrimReaper {
            lambda: 0.5,
            k: 1.0,
            span: (-10.0, 10.0),
        },
        OdeSpec::Conformal { a: 0.0, y0: 1.0 },
    ] {
        let name = match ode {
            OdeSpec::Minimal { .. } => "minimal",
            OdeSpec::GrimReaper { .. } => "grim-reaper",
            OdeSpec::Conformal { .. } => "conformal",
        };
        r.check(
            format!("{name} profile rendered twice: differing bytes"),
            Bound::AtMost(0.0),
            || {
                let render = || -> Result<String, CliError> {
                    let sol = crate::commands::solve_profile(&ode)?;
                    Ok(export::profile_csv(&sol) + &export::profile_events(&sol))
                };
                Ok(differing_bytes(&render()?, &render()?))
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_group_is_a_usage_error() {
        assert!(matches!(
            run_verify(&["nope".into()]),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn only_filters_groups() {
        let s = run_verify(&["lie".into()]).unwrap();
        assert_eq!(s.checks.len(), 5);
        assert!(s.checks.iter().all(|c| c.group == "lie"));
        assert!(s.passed());
    }

    #[test]
    fn bounds() {
        assert!(Bound::AtMost(1.0).holds(1.0));
        assert!(!Bound::Above(1.0).holds(1.0));
        assert!(!Bound::AtMost(1.0).holds(f64::NAN));
        assert!(Bound::Within(1.7, 2.3).holds(2.0));
    }

    #[test]
    fn overall_pass_is_the_conjunction() {
        let mut s = run_verify(&["horosphere".into()]).unwrap();
        assert!(s.passed());
        s.checks[0].passed = false;
        assert!(!s.passed());
        assert!(s.render().contains("FAILED"));
    }
}
