//! Command-line surface of the `rfa` binary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rfa_core::analytic::{contour_integral_with, derivative_cr, Path as ContourPath, Quadrature};
use rfa_core::Lc;

use crate::error::{CliError, Result};
use crate::expr::{Bindings, Expr};
use crate::literal::{format_element, parse_element};
use crate::scenario::{
    preset, run_scenario, Format, PlotSpec, ProjectionName, ScenarioConfig, ScenarioOutput,
    SystemKind, PRESETS,
};

#[derive(Debug, Parser)]
#[command(
    name = "rfa",
    version,
    about = "Calculus and dynamics on fuzzy numbers r + qA"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ExprOpts {
    /// Expression, e.g. "(1+2*A) * exp(z)".
    pub expr: String,
    /// Bind a variable: NAME=LITERAL (repeatable).
    #[arg(long = "var", value_name = "NAME=LITERAL")]
    pub vars: Vec<String>,
    /// Single point of the 1-level of A, used by psi_mul.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub core: f64,
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Output path without extension (overrides the configuration).
    #[arg(long)]
    pub output: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression.
    Eval(ExprOpts),
    /// Cauchy-Riemann derivative of an expression in `z`.
    Derive {
        #[command(flatten)]
        expr: ExprOpts,
        /// Point of evaluation, e.g. "1 + 1*A".
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = rfa_core::analytic::DEFAULT_STEP)]
        step: f64,
    },
    /// Contour integral of an expression in `z`.
    Integrate {
        #[command(flatten)]
        expr: ExprOpts,
        /// Vertices joined by `->`, e.g. "0 -> 1 -> 1 + 1*A".
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        /// Samples per straight piece.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        simpson: bool,
    },
    /// Run a system described by a JSON configuration.
    Solve {
        #[arg(value_enum)]
        system: SystemKind,
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run one of the figure presets (fig2 .. fig15), or `list` them.
    Preset {
        name: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Phase portrait of an oscillator or Lotka-Volterra run.
    Phase {
        #[arg(long, value_enum)]
        projection: ProjectionName,
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        config: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn bindings(opts: &ExprOpts) -> Result<Bindings> {
    let mut b = Bindings::with_core(opts.core);
    for spec in &opts.vars {
        let (name, lit) = spec
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("--var expects NAME=LITERAL, got `{spec}`")))?;
        b.bind(name.trim(), parse_element(lit)?);
    }
    Ok(b)
}

/// Vertices of `"a -> b -> c"`.
pub fn parse_path(spec: &str) -> Result<Vec<Lc>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in spec.split("->") {
        let z = parse_element(piece).map_err(|e| match e {
            CliError::Parse { offset: o, message } => CliError::Parse {
                offset: offset + o,
                message,
            },
            other => other,
        })?;
        out.push(z);
        offset += piece.len() + 2;
    }
    if out.len() < 2 {
        return Err(CliError::parse(
            0,
            "a path needs at least two vertices joined by `->`",
        ));
    }
    Ok(out)
}

fn apply_output(cfg: &mut ScenarioConfig, out: &OutputOpts) {
    if let Some(o) = &out.output {
        cfg.output = Some(o.clone());
    }
    if let Some(f) = out.format {
        cfg.format = f;
    }
}

fn named_preset(name: &str) -> Result<ScenarioConfig> {
    preset(name).ok_or_else(|| {
        CliError::Config(format!(
            "unknown preset `{name}`; available: {}",
            PRESETS.join(", ")
        ))
    })
}

fn summary(out: &ScenarioOutput) -> String {
    let mut s = String::new();
    let tr = &out.trajectory;
    if let Some((t, state)) = tr.last() {
        let _ = writeln!(s, "{} steps, t_end = {t}", tr.len());
        for (name, z) in tr.names().iter().zip(state) {
            let _ = writeln!(s, "{name}(t_end) = {}", format_element(*z));
        }
    }
    let _ = writeln!(
        s,
        "{} rows x {} columns",
        out.table.rows().len(),
        out.table.headers().len()
    );
    for f in &out.files {
        let _ = writeln!(s, "wrote {}", f.display());
    }
    s
}

/// Executes `cli` and returns what should be printed on success.
pub fn run(cli: Cli, out_dir: Option<&Path>) -> Result<String> {
    match cli.command {
        Command::Eval(opts) => {
            let v = Expr::parse(&opts.expr)?.eval(&bindings(&opts)?)?;
            Ok(format!("{}\n", format_element(v)))
        }
        Command::Derive { expr, at, step } => {
            let f = Expr::parse(&expr.expr)?.to_mapping("z", &bindings(&expr)?)?;
            let r = derivative_cr(&f, parse_element(&at)?, step)?;
            Ok(format!(
                "{}\nresiduals: |u_x - v_y| = {:e}, |u_y + v_x| = {:e}\n",
                format_element(r.derivative),
                r.residual1,
                r.residual2
            ))
        }
        Command::Integrate {
            expr,
            path,
            samples,
            simpson,
        } => {
            let f = Expr::parse(&expr.expr)?.to_mapping("z", &bindings(&expr)?)?;
            let vertices = parse_path(&path)?;
            let p = if vertices.len() == 2 {
                ContourPath::segment(vertices[0], vertices[1], samples)
            } else {
                ContourPath::polyline(vertices, samples)
            };
            let rule = if simpson {
                Quadrature::Simpson
            } else {
                Quadrature::Trapezoid
            };
            Ok(format!(
                "{}\n",
                format_element(contour_integral_with(&f, &p, rule)?)
            ))
        }
        Command::Solve {
            system,
            config,
            out,
        } => {
            let mut cfg = ScenarioConfig::load(&config)?;
            if cfg.system != system {
                return Err(CliError::Config(format!(
                    "{} describes a {} system, not {}",
                    config.display(),
                    cfg.system.name(),
                    system.name()
                )));
            }
            apply_output(&mut cfg, &out);
            Ok(summary(&run_scenario(&cfg, out_dir)?))
        }
        Command::Preset { name, out } => {
            if name == "list" {
                return Ok(PRESETS.iter().map(|p| format!("{p}\n")).collect());
            }
            let mut cfg = named_preset(&name)?;
            apply_output(&mut cfg, &out);
            Ok(summary(&run_scenario(&cfg, out_dir)?))
        }
        Command::Phase {
            projection,
            config,
            preset: preset_name,
            out,
        } => {
            let mut cfg = match (&config, &preset_name) {
                (Some(path), _) => ScenarioConfig::load(path)?,
                (None, Some(name)) => {
                    let mut c = named_preset(name)?;
                    let suffix = match projection {
                        ProjectionName::XVsS => "x-vs-s",
                        ProjectionName::RVsY => "r-vs-y",
                    };
                    c.output = Some(format!("{name}-phase-{suffix}"));
                    c
                }
                (None, None) => return Err(CliError::Config("give --config or --preset".into())),
            };
            cfg.plot = Some(PlotSpec::Phase { projection });
            apply_output(&mut cfg, &out);
            Ok(summary(&run_scenario(&cfg, out_dir)?))
        }
    }
}
