//! Text renderers for every output file. Numbers are written with 16
//! significant digits in scientific notation, independent of locale.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use transurf::profile_odes::ProfileSolution;
use transurf::surface_factory::{SampledGrid, SurfaceFamily};
use transurf::ResidualReport;

use crate::CliError;

pub fn num(x: f64) -> String {
    format!("{x:.15e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_else(|| "none".to_string())
}

/// `stem` with `ext` appended (`out` -> `out.csv`, `a.b` -> `a.b.csv`).
pub fn with_extension(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn family_lines(out: &mut String, fam: &SurfaceFamily) {
    writeln!(out, "family={}", fam.kind()).unwrap();
    for (name, value) in fam.params().entries() {
        writeln!(out, "{name}={}", num(value)).unwrap();
    }
}

/// `s,t,residual`, one row per evaluated node in row-major order.
pub fn residual_csv(report: &ResidualReport) -> String {
    let mut out = String::from("s,t,residual\n");
    for p in &report.samples {
        writeln!(out, "{},{},{}", num(p.s), num(p.t), num(p.residual)).unwrap();
    }
    out
}

pub fn residual_summary(fam: &SurfaceFamily, report: &ResidualReport) -> String {
    let mut out = String::new();
    family_lines(&mut out, fam);
    writeln!(out, "mode={}", report.mode).unwrap();
    writeln!(out, "grid={}x{}", report.ns, report.nt).unwrap();
    writeln!(out, "margin={}", num(report.excluded_margin)).unwrap();
    writeln!(out, "evaluated={}", report.samples.len()).unwrap();
    writeln!(out, "failed={}", report.failures.len()).unwrap();
    for f in &report.failures {
        writeln!(out, "failure s={} t={}: {}", num(f.s), num(f.t), f.error).unwrap();
    }
    writeln!(out, "max_abs={}", num(report.max_abs())).unwrap();
    writeln!(out, "mean_abs={}", num(report.mean_abs())).unwrap();
    writeln!(out, "MAX_ABS={}", num(report.max_abs())).unwrap();
    out
}

/// `t,g,gp,first_integral_defect`; the defect is `NaN` for equations
/// without a first integral.
pub fn profile_csv(sol: &ProfileSolution) -> String {
    let mut out = String::from("t,g,gp,first_integral_defect\n");
    for n in sol.nodes() {
        let defect = sol.first_integral_defect_at(n).unwrap_or(f64::NAN);
        writeln!(
            out,
            "{},{},{},{}",
            num(n.t),
            num(n.g),
            num(n.gp),
            num(defect)
        )
        .unwrap();
    }
    out
}

pub fn profile_events(sol: &ProfileSolution) -> String {
    let ev = sol.events();
    let (lo, hi) = sol.t_range();
    let mut out = String::new();
    writeln!(out, "ode={}", sol.params().name()).unwrap();
    writeln!(out, "nodes={}", sol.nodes().len()).unwrap();
    writeln!(out, "t_first={}", num(lo)).unwrap();
    writeln!(out, "t_last={}", num(hi)).unwrap();
    writeln!(out, "left_blowup_t={}", opt(ev.left_blowup_t)).unwrap();
    writeln!(out, "right_blowup_t={}", opt(ev.right_blowup_t)).unwrap();
    writeln!(out, "truncated={}", ev.truncated).unwrap();
    writeln!(
        out,
        "max_first_integral_defect={}",
        opt(sol.conserved_max_defect())
    )
    .unwrap();
    out
}

/// Wavefront OBJ: `v` lines row-major over the grid, then two triangles per
/// quad split along the `(i, j)`-`(i + 1, j + 1)` diagonal. Every node must
/// have been sampled.
pub fn mesh_obj(fam: &SurfaceFamily, grid: &SampledGrid) -> Result<String, CliError> {
    if let Some(bad) = grid.failures().next() {
        return Err(CliError::Usage(format!(
            "{} of {} grid nodes could not be sampled (first at s={}, t={}): {}; a larger --margin may help",
            grid.failure_count(),
            grid.nodes.len(),
            bad.s,
            bad.t,
            bad.jet.as_ref().unwrap_err()
        )));
    }
    let mut out = String::new();
    writeln!(out, "# {} {}x{}", fam.kind(), grid.ns, grid.nt).unwrap();
    for (name, value) in fam.params().entries() {
        writeln!(out, "# {name}={}", num(value)).unwrap();
    }
    for x in grid.jets().map(|j| j.position()) {
        writeln!(out, "v {} {} {}", num(x.x), num(x.y), num(x.z)).unwrap();
    }
    let id = |i: usize, j: usize| i * grid.nt + j + 1;
    for i in 0..grid.ns - 1 {
        for j in 0..grid.nt - 1 {
            writeln!(out, "f {} {} {}", id(i, j), id(i + 1, j), id(i + 1, j + 1)).unwrap();
            writeln!(out, "f {} {} {}", id(i, j), id(i + 1, j + 1), id(i, j + 1)).unwrap();
        }
    }
    Ok(out)
}
