//! Dormand-Prince 5(4) with FSAL and standard step-size control.
//!
//! The arithmetic is written so that integrating with a negated step from a
//! mirrored state reproduces the forward run bit for bit whenever the right
//! hand side has the matching parity.

#[derive(Debug, Clone, Copy)]
pub(crate) struct StepperOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_step: f64,
    pub max_steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Control {
    Continue,
    Stop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Reached,
    Stopped,
    StepUnderflow,
    MaxSteps,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// fifth minus fourth order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;

fn combine<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (a, k) in terms {
            acc += a * k[i];
        }
        *o += h * acc;
    }
    out
}

fn all_finite<const N: usize>(v: &[f64; N]) -> bool {
    v.iter().all(|x| x.is_finite())
}

fn rms<const N: usize>(v: &[f64; N], scale: &[f64; N]) -> f64 {
    let s: f64 = v.iter().zip(scale).map(|(e, sc)| (e / sc).powi(2)).sum();
    (s / N as f64).sqrt()
}

fn initial_step<const N: usize, F>(
    rhs: &F,
    t0: f64,
    y0: &[f64; N],
    f0: &[f64; N],
    dir: f64,
    opts: &StepperOptions,
) -> f64
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut scale = [0.0; N];
    for i in 0..N {
        scale[i] = opts.atol + opts.rtol * y0[i].abs();
    }
    let d0 = rms(y0, &scale);
    let d1 = rms(f0, &scale);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let y1 = combine(y0, dir * h0, &[(1.0, f0)]);
    let f1 = rhs(t0 + dir * h0, &y1);
    let mut diff = [0.0; N];
    for i in 0..N {
        diff[i] = f1[i] - f0[i];
    }
    let d2 = if all_finite(&f1) {
        rms(&diff, &scale) / h0
    } else {
        f64::INFINITY
    };
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(opts.max_step)
}

/// Integrates `y' = rhs(t, y)` from `t0` towards `t_end`, calling `observer`
/// after every accepted step. The final step lands on `t_end` exactly.
pub(crate) fn integrate<const N: usize, F, O>(
    rhs: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: &StepperOptions,
    mut observer: O,
) -> Outcome
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
    O: FnMut(f64, &[f64; N]) -> Control,
{
    if t_end == t0 {
        return Outcome::Reached;
    }
    let dir = if t_end > t0 { 1.0 } else { -1.0 };
    let mut t = t0;
    let mut y = y0;
    let mut k1 = rhs(t, &y);
    let mut h = initial_step(&rhs, t0, &y0, &k1, dir, opts);
    let mut rejected_last = false;

    for _ in 0..opts.max_steps {
        let remaining = (t_end - t).abs();
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        let hs = dir * h;
        let k2 = rhs(t + C2 * hs, &combine(&y, hs, &[(A21, &k1)]));
        let k3 = rhs(t + C3 * hs, &combine(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(
            t + C4 * hs,
            &combine(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = rhs(
            t + C5 * hs,
            &combine(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = rhs(
            t + hs,
            &combine(
                &y,
                hs,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let y_new = combine(
            &y,
            hs,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let t_new = if last { t_end } else { t + hs };
        let k7 = rhs(t_new, &y_new);

        let mut err = [0.0; N];
        let mut scale = [0.0; N];
        for i in 0..N {
            err[i] =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            scale[i] = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
        }
        let finite = all_finite(&y_new) && all_finite(&k7);
        let err_norm = if finite {
            rms(&err, &scale)
        } else {
            f64::INFINITY
        };

        if err_norm <= 1.0 {
            t = t_new;
            y = y_new;
            k1 = k7;
            if observer(t, &y) == Control::Stop {
                return Outcome::Stopped;
            }
            if last {
                return Outcome::Reached;
            }
            let mut fac = if err_norm == 0.0 {
                FAC_MAX
            } else {
                SAFETY * err_norm.powf(-0.2)
            };
            fac = fac.clamp(FAC_MIN, FAC_MAX);
            if rejected_last {
                fac = fac.min(1.0);
            }
            h = (h * fac).min(opts.max_step);
            rejected_last = false;
        } else {
            let fac = if finite {
                (SAFETY * err_norm.powf(-0.2)).clamp(FAC_MIN, 1.0)
            } else {
                0.25
            };
            h *= fac;
            rejected_last = true;
        }
        if h <= 8.0 * f64::EPSILON * t.abs().max(f64::MIN_POSITIVE) {
            return Outcome::StepUnderflow;
        }
    }
    Outcome::MaxSteps
}
