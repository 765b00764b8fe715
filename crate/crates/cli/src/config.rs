//! Command-line arguments and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use transurf::surface_factory::{
    make_conformal_cylinder, make_grim_reaper, make_horosphere, make_minimal_cylinder,
    make_vertical_plane_offset, GridSpec, SurfaceFamily,
};
use transurf::SolitonMode;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "transurf",
    version,
    about = "Soliton translation surfaces in hyperbolic 3-space"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Evaluate a soliton residual over a grid of a surface family.
    Residual(SurfaceArgs),
    /// Integrate a profile equation and write the trajectory.
    Profile(ProfileArgs),
    /// Write a triangle mesh of a surface family.
    Mesh(SurfaceArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    Horosphere,
    VerticalPlane,
    MinimalCylinder,
    GrimReaper,
    ConformalCylinder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OdeChoice {
    Minimal,
    GrimReaper,
    Conformal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeChoice {
    Minimal,
    Translator,
    Conformal,
}

impl From<ModeChoice> for SolitonMode {
    fn from(m: ModeChoice) -> Self {
        match m {
            ModeChoice::Minimal => SolitonMode::Minimal,
            ModeChoice::Translator => SolitonMode::Translator,
            ModeChoice::Conformal => SolitonMode::ConformalSoliton,
        }
    }
}

/// Generator parameters. Which ones apply depends on the family:
///
/// | family             | parameters                              |
/// |--------------------|-----------------------------------------|
/// | horosphere         | `a` (height, default 1)                 |
/// | vertical-plane     | `c`, `d`, `b` (default 0)               |
/// | minimal-cylinder   | `c` (default 0), `y0` (default 1)       |
/// | grim-reaper        | `lambda` (0.5), `b` slope, `a` shift    |
/// | conformal-cylinder | `a` slope (default 0), `y0` (default 1) |
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    #[arg(long, value_enum)]
    pub family: FamilyChoice,
    #[arg(long, value_enum, default_value = "minimal")]
    pub mode: ModeChoice,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Grid size as `NSxNT`.
    #[arg(long, default_value = "51x51")]
    pub grid: String,
    /// Fraction of the t extent dropped at each blow-up end.
    #[arg(long, default_value_t = 1e-3)]
    pub margin: f64,
    /// Output path stem; extensions are appended.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[arg(long, value_enum)]
    pub ode: OdeChoice,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Integration window `lo:hi` for the grim reaper.
    #[arg(long, default_value = "-10:10", allow_hyphen_values = true)]
    pub span: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only these check groups (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Horosphere {
        a: f64,
    },
    VerticalPlane {
        c: f64,
        d: f64,
        b: f64,
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
}

impl FamilySpec {
    pub fn build(&self) -> transurf::Result<SurfaceFamily> {
        match *self {
            FamilySpec::Horosphere { a } => make_horosphere(a),
            FamilySpec::VerticalPlane { c, d, b } => make_vertical_plane_offset(c, d, b),
            FamilySpec::MinimalCylinder { c, y0 } => make_minimal_cylinder(c, y0),
            FamilySpec::GrimReaper {
                lambda,
                b_slope,
                a_shift,
            } => make_grim_reaper(lambda, b_slope, a_shift),
            FamilySpec::ConformalCylinder { a_slope, y0 } => make_conformal_cylinder(a_slope, y0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OdeSpec {
    Minimal {
        c: f64,
        y0: f64,
    },
    GrimReaper {
        lambda: f64,
        k: f64,
        span: (f64, f64),
    },
    Conformal {
        a: f64,
        y0: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Residual {
        family: FamilySpec,
        mode: SolitonMode,
        grid: GridSpec,
        out: PathBuf,
    },
    Profile {
        ode: OdeSpec,
        out: PathBuf,
    },
    Mesh {
        family: FamilySpec,
        grid: GridSpec,
        out: PathBuf,
    },
    Verify {
        only: Vec<String>,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_grid(text: &str) -> Result<(usize, usize), CliError> {
    let (ns, nt) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| usage(format!("grid must look like NSxNT, got {text:?}")))?;
    let ns = ns
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad grid count {ns:?}")))?;
    let nt = nt
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad grid count {nt:?}")))?;
    Ok((ns, nt))
}

pub fn parse_span(text: &str) -> Result<(f64, f64), CliError> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("span must look like LO:HI, got {text:?}")))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad span bound {lo:?}")))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad span bound {hi:?}")))?;
    if !(lo.is_finite() && hi.is_finite() && lo <= 0.0 && 0.0 <= hi && lo < hi) {
        return Err(usage(format!(
            "span {lo}:{hi} must be finite and contain 0"
        )));
    }
    Ok((lo, hi))
}

fn finite(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(usage(format!("--{name} must be finite, got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(format!("--{name} must be positive, got {v}")))
    }
}

fn reject(name: &str, v: Option<f64>, family: &str) -> Result<(), CliError> {
    match v {
        Some(_) => Err(usage(format!("--{name} does not apply to {family}"))),
        None => Ok(()),
    }
}

fn family_spec(family: FamilyChoice, p: &ParamArgs) -> Result<FamilySpec, CliError> {
    let get = |v: Option<f64>, default: f64| v.unwrap_or(default);
    Ok(match family {
        FamilyChoice::Horosphere => {
            for (n, v) in [
                ("b", p.b),
                ("c", p.c),
                ("d", p.d),
                ("y0", p.y0),
                ("lambda", p.lambda),
                ("k", p.k),
            ] {
                reject(n, v, "horosphere")?;
            }
            FamilySpec::Horosphere {
                a: positive("a", get(p.a, 1.0))?,
            }
        }
        FamilyChoice::VerticalPlane => {
            for (n, v) in [("a", p.a), ("y0", p.y0), ("lambda", p.lambda), ("k", p.k)] {
                reject(n, v, "vertical-plane")?;
            }
            FamilySpec::VerticalPlane {
                c: finite("c", get(p.c, 0.0))?,
                d: finite("d", get(p.d, 0.0))?,
                b: finite("b", get(p.b, 0.0))?,
            }
        }
        FamilyChoice::MinimalCylinder => {
            for (n, v) in [
                ("a", p.a),
                ("b", p.b),
                ("d", p.d),
                ("lambda", p.lambda),
                ("k", p.k),
            ] {
                reject(n, v, "minimal-cylinder")?;
            }
            FamilySpec::MinimalCylinder {
                c: finite("c", get(p.c, 0.0))?,
                y0: positive("y0", get(p.y0, 1.0))?,
            }
        }
        FamilyChoice::GrimReaper => {
            for (n, v) in [("c", p.c), ("d", p.d), ("y0", p.y0), ("k", p.k)] {
                reject(n, v, "grim-reaper (k is fixed by --b)")?;
            }
            let lambda = finite("lambda", get(p.lambda, 0.5))?;
            if lambda < 0.0 {
                return Err(usage(format!("--lambda must be >= 0, got {lambda}")));
            }
            FamilySpec::GrimReaper {
                lambda,
                b_slope: finite("b", get(p.b, 0.0))?,
                a_shift: finite("a", get(p.a, 0.0))?,
            }
        }
        FamilyChoice::ConformalCylinder => {
            for (n, v) in [
                ("b", p.b),
                ("c", p.c),
                ("d", p.d),
                ("lambda", p.lambda),
                ("k", p.k),
            ] {
                reject(n, v, "conformal-cylinder")?;
            }
            FamilySpec::ConformalCylinder {
                a_slope: finite("a", get(p.a, 0.0))?,
                y0: positive("y0", get(p.y0, 1.0))?,
            }
        }
    })
}

fn ode_spec(ode: OdeChoice, p: &ParamArgs, span: &str) -> Result<OdeSpec, CliError> {
    let get = |v: Option<f64>, default: f64| v.unwrap_or(default);
    Ok(match ode {
        OdeChoice::Minimal => {
            for (n, v) in [
                ("a", p.a),
                ("b", p.b),
                ("d", p.d),
                ("lambda", p.lambda),
                ("k", p.k),
            ] {
                reject(n, v, "the minimal profile")?;
            }
            OdeSpec::Minimal {
                c: finite("c", get(p.c, 0.0))?,
                y0: positive("y0", get(p.y0, 1.0))?,
            }
        }
        OdeChoice::GrimReaper => {
            for (n, v) in [("a", p.a), ("b", p.b), ("c", p.c), ("d", p.d), ("y0", p.y0)] {
                reject(n, v, "the grim reaper profile")?;
            }
            let lambda = finite("lambda", get(p.lambda, 0.5))?;
            if lambda < 0.0 {
                return Err(usage(format!("--lambda must be >= 0, got {lambda}")));
            }
            OdeSpec::GrimReaper {
                lambda,
                k: positive("k", get(p.k, 1.0))?,
                span: parse_span(span)?,
            }
        }
        OdeChoice::Conformal => {
            for (n, v) in [
                ("b", p.b),
                ("c", p.c),
                ("d", p.d),
                ("lambda", p.lambda),
                ("k", p.k),
            ] {
                reject(n, v, "the conformal profile")?;
            }
            OdeSpec::Conformal {
                a: finite("a", get(p.a, 0.0))?,
                y0: positive("y0", get(p.y0, 1.0))?,
            }
        }
    })
}

fn grid_spec(grid: &str, margin: f64) -> Result<GridSpec, CliError> {
    let (ns, nt) = parse_grid(grid)?;
    GridSpec::new(ns, nt, margin).map_err(|e| usage(e.to_string()))
}

impl RunConfig {
    /// Validates every parameter; nothing is computed here.
    pub fn from_cli(cli: Cli) -> Result<RunConfig, CliError> {
        Ok(match cli.command {
            CommandArgs::Residual(a) => RunConfig::Residual {
                family: family_spec(a.family, &a.params)?,
                mode: a.mode.into(),
                grid: grid_spec(&a.grid, a.margin)?,
                out: a.out.unwrap_or_else(|| PathBuf::from("residual")),
            },
            CommandArgs::Mesh(a) => RunConfig::Mesh {
                family: family_spec(a.family, &a.params)?,
                grid: grid_spec(&a.grid, a.margin)?,
                out: a.out.unwrap_or_else(|| PathBuf::from("mesh")),
            },
            CommandArgs::Profile(a) => RunConfig::Profile {
                ode: ode_spec(a.ode, &a.params, &a.span)?,
                out: a.out.unwrap_or_else(|| PathBuf::from("profile")),
            },
            CommandArgs::Verify(a) => RunConfig::Verify { only: a.only },
        })
    }
}
