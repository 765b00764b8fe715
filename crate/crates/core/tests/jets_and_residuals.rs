use nalgebra::Matrix2;
use proptest::prelude::*;
use transurf::soliton_residuals::{
    general_residual, reduced_residual_first_kind, reduced_residual_second_kind, SolitonMode,
};
use transurf::surface_jets::{
    finite_difference_jet, first_kind_jet, jet_distance, product_surface_jet, second_kind_jet,
    CurveJet2, ScalarJet2, SurfaceJet2,
};
use transurf::Vec3;

fn scalar(lo: f64, hi: f64) -> impl Strategy<Value = ScalarJet2> {
    (lo..hi, -3.0..3.0f64, -5.0..5.0f64).prop_map(|(v, d1, d2)| ScalarJet2::new(v, d1, d2))
}

fn mode() -> impl Strategy<Value = SolitonMode> {
    prop::sample::select(SolitonMode::ALL.to_vec())
}

// trace(I^{-1} II) / 2 with the normal Xs x Xt / |Xs x Xt|
fn oracle_mean_curvature(j: &SurfaceJet2) -> f64 {
    let n = j.xs().cross(&j.xt()).normalize();
    let first = Matrix2::new(
        j.xs().dot(&j.xs()),
        j.xs().dot(&j.xt()),
        j.xt().dot(&j.xs()),
        j.xt().dot(&j.xt()),
    );
    let second = Matrix2::new(
        j.xss().dot(&n),
        j.xst().dot(&n),
        j.xst().dot(&n),
        j.xtt().dot(&n),
    );
    0.5 * (first.try_inverse().unwrap() * second).trace()
}

fn oracle_residual(mode: SolitonMode, j: &SurfaceJet2) -> f64 {
    let x = j.position();
    let n = j.xs().cross(&j.xt()).normalize();
    let h = oracle_mean_curvature(j);
    match mode {
        SolitonMode::Minimal => x.z * h + n.z,
        SolitonMode::Translator => x.z * x.z * h - (x.x * n.x + x.y * n.y),
        SolitonMode::ConformalSoliton => x.z * x.z * h + (x.z + 1.0) * n.z,
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_is_unit_and_orthogonal(f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        let n = j.normal();
        prop_assert!((n.norm() - 1.0).abs() <= 1e-14);
        prop_assert!(n.dot(&j.xs()).abs() <= 1e-13 * j.xs().norm());
        prop_assert!(n.dot(&j.xt()).abs() <= 1e-13 * j.xt().norm());
    }

    #[test]
    fn first_kind_closed_form_curvature(f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        let w = (g.d1 * g.d1 * (f.d1 * f.d1 + 1.0) + 1.0).sqrt();
        let h = (-f.d2 * g.d1 * (1.0 + g.d1 * g.d1) + g.d2 * (1.0 + f.d1 * f.d1)) / (2.0 * w.powi(3));
        prop_assert!((j.mean_curvature() - h).abs() <= 1e-12 * (1.0 + h.abs()));
        prop_assert!((oracle_mean_curvature(&j) - h).abs() <= 1e-12 * (1.0 + h.abs()));
        let n = Vec3::new(f.d1 * g.d1, -g.d1, 1.0) / w;
        prop_assert!((j.normal() - n).amax() <= 1e-14);
        let ff = j.forms();
        prop_assert!(close(ff.e, 1.0 + f.d1 * f.d1, 1e-15));
        prop_assert!(close(ff.f, f.d1, 1e-15));
        prop_assert!(close(ff.g, 1.0 + g.d1 * g.d1, 1e-15));
        prop_assert!(close(ff.w, w, 1e-14));
    }

    #[test]
    fn second_kind_closed_form_curvature(f in scalar(-2.0, 2.0), b in -2.0..2.0f64, s in -2.0..2.0f64, t in 0.1..3.0f64) {
        let j = second_kind_jet(f, b, s, t).unwrap();
        let w = (f.d1 * f.d1 + 1.0).sqrt();
        let h = -f.d2 / (2.0 * w.powi(3));
        prop_assert!((j.mean_curvature() - h).abs() <= 1e-13 * (1.0 + h.abs()));
        prop_assert!((j.normal() - Vec3::new(f.d1, -1.0, 0.0) / w).amax() <= 1e-15);
    }

    #[test]
    fn first_kind_is_a_product_of_curves(f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let direct = first_kind_jet(f, g, s, t).unwrap();
        let product = product_surface_jet(
            &CurveJet2::horospherical_graph(f, s),
            &CurveJet2::vertical_graph(g, t),
        ).unwrap();
        prop_assert!(jet_distance(&direct, &product) <= 1e-14);
    }

    #[test]
    fn general_residuals_match_oracle(m in mode(), f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        let r = general_residual(m, &j);
        let o = oracle_residual(m, &j);
        prop_assert!((r - o).abs() <= 1e-11 * (1.0 + o.abs()), "{} vs {}", r, o);
    }

    #[test]
    fn reduced_first_kind_equals_scaled_general(m in mode(), f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        let w = j.forms().w;
        let scaled = general_residual(m, &j) * 2.0 * w.powi(3);
        let reduced = reduced_residual_first_kind(m, f, g, s, t).unwrap();
        prop_assert!(close(reduced, scaled, 1e-10), "{} vs {}", reduced, scaled);
    }

    #[test]
    fn reduced_second_kind_equals_scaled_general(m in mode(), f in scalar(-2.0, 2.0), b in -2.0..2.0f64, s in -2.0..2.0f64, t in 0.1..3.0f64) {
        let j = second_kind_jet(f, b, s, t).unwrap();
        let w = j.forms().w;
        let scaled = general_residual(m, &j) * 2.0 * w.powi(3);
        let reduced = reduced_residual_second_kind(m, f, b, s, t).unwrap();
        prop_assert!(close(reduced, scaled, 1e-10), "{} vs {}", reduced, scaled);
    }

    #[test]
    fn residuals_are_odd_under_orientation_flip(m in mode(), f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        // swapping the parameters reverses Xs x Xt
        let flipped = SurfaceJet2::new(j.position(), j.xt(), j.xs(), j.xtt(), j.xst(), j.xss()).unwrap();
        prop_assert!((flipped.normal() + j.normal()).amax() <= 1e-15);
        let (a, b) = (general_residual(m, &j), general_residual(m, &flipped));
        prop_assert!((a + b).abs() <= 1e-12 * (1.0 + a.abs()));
    }

    #[test]
    fn rotation_covariance(m in mode(), f in scalar(-2.0, 2.0), g in scalar(0.1, 3.0), s in -2.0..2.0f64, t in -2.0..2.0f64, theta in -7.0..7.0f64) {
        let j = first_kind_jet(f, g, s, t).unwrap();
        let r = j.rotated(theta);
        let (a, b) = (j.forms(), r.forms());
        for (x, y) in [(a.e, b.e), (a.f, b.f), (a.g, b.g), (a.l, b.l), (a.m, b.m), (a.n, b.n)] {
            prop_assert!((x - y).abs() <= 1e-10 * (1.0 + x.abs()));
        }
        let (ra, rb) = (general_residual(m, &j), general_residual(m, &r));
        prop_assert!((ra - rb).abs() <= 1e-10 * (1.0 + ra.abs()));
        prop_assert!((j.hyperbolic_mean_curvature() - r.hyperbolic_mean_curvature()).abs() <= 1e-10 * (1.0 + ra.abs()));
    }
}

struct Analytic {
    eval: fn(f64, f64) -> Vec3,
    jet: fn(f64, f64) -> SurfaceJet2,
}

fn analytic_surfaces() -> Vec<Analytic> {
    vec![
        // first kind: f = sin s, g = 2 + cos t / 2
        Analytic {
            eval: |s, t| Vec3::new(s, s.sin() + t, 2.0 + 0.5 * t.cos()),
            jet: |s, t| {
                first_kind_jet(
                    ScalarJet2::new(s.sin(), s.cos(), -s.sin()),
                    ScalarJet2::new(2.0 + 0.5 * t.cos(), -0.5 * t.sin(), -0.5 * t.cos()),
                    s,
                    t,
                )
                .unwrap()
            },
        },
        // second kind: f = s^3 / 3 + exp(s / 2), b = 0.7
        Analytic {
            eval: |s, t| Vec3::new(s, s.powi(3) / 3.0 + (0.5 * s).exp() + 0.7, t),
            jet: |s, t| {
                second_kind_jet(
                    ScalarJet2::new(
                        s.powi(3) / 3.0 + (0.5 * s).exp(),
                        s * s + 0.5 * (0.5 * s).exp(),
                        2.0 * s + 0.25 * (0.5 * s).exp(),
                    ),
                    0.7,
                    s,
                    t,
                )
                .unwrap()
            },
        },
        // product of alpha(s) = (sin s, s^2, e^{s/3}) and beta(t) = (t, cos t, 1 + t^2)
        Analytic {
            eval: |s, t| {
                let (ax, ay, az) = (s.sin(), s * s, (s / 3.0).exp());
                let (bx, by, bz) = (t, t.cos(), 1.0 + t * t);
                Vec3::new(az * bx + ax, az * by + ay, az * bz)
            },
            jet: |s, t| {
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
                product_surface_jet(&alpha, &beta).unwrap()
            },
        },
    ]
}

#[test]
fn analytic_jets_agree_with_their_pointwise_formulas() {
    for a in analytic_surfaces() {
        for (s, t) in [(0.3, 0.7), (-0.4, 1.2)] {
            assert!(((a.jet)(s, t).position() - (a.eval)(s, t)).amax() < 1e-15);
        }
    }
}

#[test]
fn finite_differences_converge_at_second_order() {
    let hs = [1e-2, 5e-3, 2.5e-3];
    for (k, a) in analytic_surfaces().iter().enumerate() {
        let (s, t) = (0.3, 0.7);
        let exact = (a.jet)(s, t);
        let errs: Vec<f64> = hs
            .iter()
            .map(|&h| {
                let fd = finite_difference_jet(|s, t| Ok((a.eval)(s, t)), s, t, h).unwrap();
                jet_distance(&exact, &fd)
            })
            .collect();
        for w in errs.windows(2) {
            let order = (w[0] / w[1]).log2();
            assert!(
                (1.7..=2.3).contains(&order),
                "surface {k}: order {order} from {errs:?}"
            );
        }
    }
}
