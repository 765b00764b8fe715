//! The four subcommands. Each validates, computes, then writes its files.

use transurf::profile_odes::{
    integrate_conformal_profile, integrate_grim_reaper, integrate_minimal_profile,
    ConformalProfileParams, GrimReaperParams, IntegrationOptions, MinimalProfileParams,
    ProfileSolution,
};
use transurf::residual_report;
use transurf::surface_factory::sample_grid;

use crate::config::{OdeSpec, RunConfig};
use crate::export::{self, with_extension, write_file};
use crate::verify::{run_verify, VerifySummary};
use crate::CliError;

fn wrong(cmd: &str) -> CliError {
    CliError::Usage(format!(
        "{cmd} called with a different command's configuration"
    ))
}

/// Writes `<out>.csv` and `<out>.summary.txt`. Succeeds whatever the
/// residual size.
pub fn cmd_residual(cfg: &RunConfig) -> Result<(), CliError> {
    let RunConfig::Residual {
        family,
        mode,
        grid,
        out,
    } = cfg
    else {
        return Err(wrong("residual"));
    };
    let fam = family.build()?;
    let report = residual_report(&fam, *mode, grid)?;
    write_file(&with_extension(out, "csv"), &export::residual_csv(&report))?;
    write_file(
        &with_extension(out, "summary.txt"),
        &export::residual_summary(&fam, &report),
    )?;
    println!(
        "{} {}: max_abs={} over {} nodes ({} failed)",
        fam.kind(),
        mode,
        export::num(report.max_abs()),
        report.samples.len(),
        report.failures.len()
    );
    Ok(())
}

pub fn solve_profile(ode: &OdeSpec) -> Result<ProfileSolution, CliError> {
    let opts = IntegrationOptions::default();
    Ok(match *ode {
        OdeSpec::Minimal { c, y0 } => {
            integrate_minimal_profile(&MinimalProfileParams::new(c, y0)?, &opts)?
        }
        OdeSpec::GrimReaper { lambda, k, span } => {
            integrate_grim_reaper(&GrimReaperParams::new(lambda, k)?, span, &opts)?
        }
        OdeSpec::Conformal { a, y0 } => {
            integrate_conformal_profile(&ConformalProfileParams::new(a, y0)?, &opts)?
        }
    })
}

/// Writes `<out>.csv` (`t,g,gp,first_integral_defect`) and
/// `<out>.events.txt`.
pub fn cmd_profile(cfg: &RunConfig) -> Result<(), CliError> {
    let RunConfig::Profile { ode, out } = cfg else {
        return Err(wrong("profile"));
    };
    let sol = solve_profile(ode)?;
    write_file(&with_extension(out, "csv"), &export::profile_csv(&sol))?;
    write_file(
        &with_extension(out, "events.txt"),
        &export::profile_events(&sol),
    )?;
    let ev = sol.events();
    let at = |t: Option<f64>| t.map_or_else(|| "none".to_string(), |t| format!("{t:.10}"));
    println!(
        "{} profile: {} nodes, blow-up at {} / {}{}",
        sol.params().name(),
        sol.nodes().len(),
        at(ev.left_blowup_t),
        at(ev.right_blowup_t),
        if ev.truncated { " (truncated)" } else { "" }
    );
    Ok(())
}

/// Writes `<out>.obj`.
pub fn cmd_mesh(cfg: &RunConfig) -> Result<(), CliError> {
    let RunConfig::Mesh { family, grid, out } = cfg else {
        return Err(wrong("mesh"));
    };
    let fam = family.build()?;
    let sampled = sample_grid(&fam, grid)?;
    let obj = export::mesh_obj(&fam, &sampled)?;
    write_file(&with_extension(out, "obj"), &obj)?;
    println!(
        "{}: {} vertices, {} triangles",
        fam.kind(),
        grid.ns() * grid.nt(),
        2 * (grid.ns() - 1) * (grid.nt() - 1)
    );
    Ok(())
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifySummary, CliError> {
    let RunConfig::Verify { only } = cfg else {
        return Err(wrong("verify"));
    };
    run_verify(only)
}
