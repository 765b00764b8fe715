use statrs::function::beta::beta;
use transurf::profile_odes::{
    conformal_first_integral_defect, conformal_halfwidth_quadrature, integrate_conformal_profile,
    integrate_grim_reaper, integrate_minimal_profile, minimal_first_integral_defect,
    minimal_halfwidth_quadrature, qualitative_verdict, ConformalProfileParams, GrimReaperParams,
    IntegrationOptions, MinimalProfileParams,
};

// Substituting w = (g / y0)^4 turns the half-width into y0 sqrt(c^2+1) B(3/4, 1/2) / 4.
fn minimal_halfwidth_closed_form(c: f64, y0: f64) -> f64 {
    y0 * (c * c + 1.0).sqrt() * beta(0.75, 0.5) / 4.0
}

#[test]
fn minimal_quadrature_matches_beta_function() {
    for c in [0.0, 0.5, 1.0, 3.0] {
        for y0 in [0.25, 0.5, 1.0, 2.0, 7.0] {
            let q = minimal_halfwidth_quadrature(c, y0).unwrap();
            let b = minimal_halfwidth_closed_form(c, y0);
            assert!((q - b).abs() <= 1e-11 * b, "c={c} y0={y0}: {q} vs {b}");
        }
    }
    let r = minimal_halfwidth_quadrature(0.0, 1.0).unwrap();
    assert!((r - 0.5991).abs() < 1e-4);
}

#[test]
fn halfwidth_scaling_and_monotonicity() {
    let base = minimal_halfwidth_quadrature(0.0, 1.0).unwrap();
    for y0 in [0.5, 3.0] {
        assert!((minimal_halfwidth_quadrature(0.0, y0).unwrap() - y0 * base).abs() < 1e-12 * y0);
    }
    let mut prev = 0.0;
    for c in [0.0, 0.5, 1.0, 2.0] {
        let r = minimal_halfwidth_quadrature(c, 1.0).unwrap();
        assert!(r > prev);
        prev = r;
    }
    // the conformal half-width is not homogeneous in y0 but grows with it
    let small = conformal_halfwidth_quadrature(0.0, 0.5).unwrap();
    let large = conformal_halfwidth_quadrature(0.0, 2.0).unwrap();
    assert!(large > small && small > 0.0);
}

#[test]
fn minimal_events_match_quadrature() {
    let opts = IntegrationOptions::default();
    for y0 in [0.5, 1.0, 2.0] {
        for c in [0.0, 1.0] {
            let p = MinimalProfileParams::new(c, y0).unwrap();
            let sol = integrate_minimal_profile(&p, &opts).unwrap();
            let ev = sol.events();
            assert!(!ev.truncated);
            let r = minimal_halfwidth_quadrature(c, y0).unwrap();
            let right = ev.right_blowup_t.unwrap();
            let left = ev.left_blowup_t.unwrap();
            assert!((right - r).abs() <= 1e-6, "c={c} y0={y0}: {right} vs {r}");
            assert_eq!(left, -right);
            assert!(sol.conserved_max_defect().unwrap() <= 1e-8);
            let last = sol.nodes().last().unwrap();
            assert!(last.g <= 1e-3 * y0.max(1.0) || last.gp.abs() >= 1e3);
            assert!(last.t < right);
        }
    }
}

#[test]
fn minimal_profile_shape() {
    let p = MinimalProfileParams::new(0.0, 1.0).unwrap();
    let sol = integrate_minimal_profile(&p, &IntegrationOptions::default()).unwrap();
    let v = qualitative_verdict(&sol).unwrap();
    assert!(v.symmetric && v.symmetry_defect <= 1e-8);
    assert!(v.concave && v.max_at_zero && v.blowup_both);
    let last = sol.nodes().last().unwrap();
    assert!(last.g <= 1e-3 && last.gp.abs() >= 1e3);
    for n in sol.nodes() {
        assert!(minimal_first_integral_defect(&p, n.g, n.gp).abs() <= 1e-8);
    }
}

#[test]
fn interpolation_is_consistent_with_nodes() {
    let p = MinimalProfileParams::new(0.5, 1.0).unwrap();
    let sol = integrate_minimal_profile(&p, &IntegrationOptions::default()).unwrap();
    let nodes = sol.nodes();
    for n in nodes.iter().step_by(17) {
        let j = sol.jet_at(n.t).unwrap();
        assert_eq!((j.value, j.d1), (n.g, n.gp));
    }
    // midpoints obey the first integral to interpolation accuracy
    for w in nodes.windows(2).filter(|w| w[0].gp.abs() < 5.0) {
        let j = sol.jet_at(0.5 * (w[0].t + w[1].t)).unwrap();
        assert!(minimal_first_integral_defect(&p, j.value, j.d1).abs() < 1e-7);
        assert_eq!(j.d2, -2.0 * (j.d1 * j.d1 + 0.8) / j.value);
    }
    let (lo, hi) = sol.t_range();
    assert!(sol.jet_at(hi + 1e-9).is_err());
    assert!(sol.jet_at(lo - 1e-9).is_err());
}

#[test]
fn conformal_profile_conservation_and_events() {
    let p = ConformalProfileParams::new(0.0, 1.0).unwrap();
    assert!((p.c - (-4f64).exp()).abs() <= 1e-18);
    let sol = integrate_conformal_profile(&p, &IntegrationOptions::default()).unwrap();
    let ev = sol.events();
    assert!(!ev.truncated);
    assert!(sol.conserved_max_defect().unwrap() <= 1e-8);
    for n in sol.nodes() {
        assert!(conformal_first_integral_defect(&p, n.g, n.gp).abs() <= 1e-8);
    }
    let r = conformal_halfwidth_quadrature(0.0, 1.0).unwrap();
    assert!((ev.right_blowup_t.unwrap() - r).abs() <= 1e-6);
    let v = qualitative_verdict(&sol).unwrap();
    assert!(v.symmetric && v.concave && v.max_at_zero && v.blowup_both);
    for a in [0.5, -2.0] {
        let p = ConformalProfileParams::new(a, 1.5).unwrap();
        let sol = integrate_conformal_profile(&p, &IntegrationOptions::default()).unwrap();
        let r = conformal_halfwidth_quadrature(a, 1.5).unwrap();
        assert!((sol.events().right_blowup_t.unwrap() - r).abs() <= 1e-6);
    }
}

#[test]
fn grim_reaper_constant_when_initial_slope_vanishes() {
    let p = GrimReaperParams::new(0.0, 1.0).unwrap();
    let sol = integrate_grim_reaper(&p, (-10.0, 10.0), &IntegrationOptions::default()).unwrap();
    assert!(sol.nodes().iter().all(|n| (n.g - 1.0).abs() <= 1e-12));
    let v = qualitative_verdict(&sol).unwrap();
    assert!(v.constant);
}

#[test]
fn grim_reaper_is_monotone_bounded_with_inflection_at_origin() {
    let p = GrimReaperParams::new(0.5, 1.0).unwrap();
    let sol = integrate_grim_reaper(&p, (-50.0, 50.0), &IntegrationOptions::default()).unwrap();
    assert!(!sol.events().truncated);
    let v = qualitative_verdict(&sol).unwrap();
    assert!(v.monotone_increasing && v.convex_then_concave && v.bounded);
    let nodes = sol.nodes();
    let (first, last) = (nodes[0], nodes[nodes.len() - 1]);
    assert_eq!((first.t, last.t), (-50.0, 50.0));
    assert!(v.inf_g >= 0.9 * first.g && first.g > 0.0);
    assert!(v.sup_g <= 1.1 * last.g && last.g.is_finite());
    // the slope decays like exp(-k t^2 / g^2), so the ends are flat
    assert!(first.gp < 1e-12 && last.gp < 1e-12);
    let at_zero = nodes.iter().find(|n| n.t == 0.0).unwrap();
    assert_eq!(sol.second_derivative_at(at_zero), 0.0);
    assert!(sol.conserved_max_defect().is_none());
}
