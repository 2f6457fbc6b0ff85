//! Run configurations, the figure presets, and scenario execution.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rfa_core::dynamics::{
    phase_portrait, simulate_with_bands, LinearParams, LvParams, Method, OscillatorParams,
    Projection, System,
};
use rfa_core::{Basis, Lc, Space, Traj};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::export::ExportTable;
use crate::literal::{parse_basis, parse_element};
use crate::svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKind {
    Linear,
    LinearPsi,
    Oscillator,
    Lv,
}

impl SystemKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Linear => "linear",
            Self::LinearPsi => "linear-psi",
            Self::Oscillator => "oscillator",
            Self::Lv => "lv",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionName {
    XVsS,
    RVsY,
}

impl From<ProjectionName> for Projection {
    fn from(p: ProjectionName) -> Self {
        match p {
            ProjectionName::XVsS => Projection::XVsS,
            ProjectionName::RVsY => Projection::RVsY,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodName {
    #[default]
    Auto,
    Analytic,
    Rk4,
}

impl From<MethodName> for Method {
    fn from(m: MethodName) -> Self {
        match m {
            MethodName::Auto => Method::Auto,
            MethodName::Analytic => Method::Analytic,
            MethodName::Rk4 => Method::Rk4,
        }
    }
}

/// What, if anything, to draw alongside the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PlotSpec {
    /// α-bands of one variable against time.
    Bands { var: String },
    /// Real and fuzzy coefficients of every variable against time.
    Components,
    /// Phase portrait; also switches the exported table to phase columns.
    Phase { projection: ProjectionName },
}

fn default_alphas() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

fn default_dt() -> f64 {
    rfa_core::dynamics::DEFAULT_DT
}

fn default_stride() -> usize {
    1
}

/// A complete run description; every literal is kept as text and parsed on
/// validation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub system: SystemKind,
    pub basis: String,
    /// `lambda` for linear systems; optional `c_x`, `c_y` for the oscillator;
    /// `alpha`, `beta`, `a`, `b` for Lotka-Volterra.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    /// `w` for linear systems, `x` and `y` otherwise.
    pub initial: BTreeMap<String, String>,
    pub t_span: (f64, f64),
    #[serde(default = "default_dt")]
    pub dt: f64,
    #[serde(default = "default_alphas")]
    pub alphas: Vec<f64>,
    #[serde(default)]
    pub format: Format,
    /// Output path without extension; `None` computes without writing.
    #[serde(default)]
    pub output: Option<String>,
    /// Keep every `stride`-th step in the exported table.
    #[serde(default = "default_stride")]
    pub stride: usize,
    #[serde(default)]
    pub method: MethodName,
    #[serde(default)]
    pub plot: Option<PlotSpec>,
    #[serde(default)]
    pub title: Option<String>,
}

/// A validated configuration with every literal parsed.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub space: Space,
    pub system: System<f64>,
    pub t_span: (f64, f64),
    pub dt: f64,
    pub alphas: Vec<f64>,
    pub method: Method,
}

#[derive(Clone, Debug)]
pub struct ScenarioOutput {
    pub trajectory: Traj,
    pub table: ExportTable,
    pub svg: Option<String>,
    pub files: Vec<PathBuf>,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    fn param(&self, map: &BTreeMap<String, String>, key: &str, what: &str) -> Result<Lc> {
        let text = map.get(key).ok_or_else(|| {
            CliError::Config(format!("{} needs {what} `{key}`", self.system.name()))
        })?;
        parse_element(text).map_err(|e| CliError::Config(format!("{what} `{key}`: {e}")))
    }

    fn param_or(&self, key: &str, default: Lc) -> Result<Lc> {
        match self.params.get(key) {
            Some(_) => self.param(&self.params, key, "parameter"),
            None => Ok(default),
        }
    }

    pub fn validate(&self) -> Result<Scenario> {
        let (t0, t1) = self.t_span;
        if !(t0.is_finite() && t1.is_finite() && t1 > t0) {
            return Err(CliError::Config(format!("t_span [{t0}, {t1}] is empty")));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(CliError::Config(format!(
                "dt = {} must be positive",
                self.dt
            )));
        }
        if self.alphas.is_empty() {
            return Err(CliError::Config("alpha grid is empty".into()));
        }
        if self.alphas.iter().any(|a| !(0.0..=1.0).contains(a)) {
            return Err(CliError::Config("alpha grid must lie in [0, 1]".into()));
        }
        if self
            .alphas
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(Ordering::Less))
        {
            return Err(CliError::Config(
                "alpha grid must be strictly ascending".into(),
            ));
        }
        if self.stride == 0 {
            return Err(CliError::Config("stride must be at least 1".into()));
        }
        let basis: Basis =
            parse_basis(&self.basis).map_err(|e| CliError::Config(format!("basis: {e}")))?;
        let space = Space::new(basis)?;

        let init = |key| self.param(&self.initial, key, "initial condition");
        let system = match self.system {
            SystemKind::Linear | SystemKind::LinearPsi => {
                let params = LinearParams {
                    lambda: self.param(&self.params, "lambda", "parameter")?,
                    w0: init("w")?,
                };
                if self.system == SystemKind::Linear {
                    System::Linear(params)
                } else {
                    System::LinearPsi {
                        params,
                        core: space.psi_core()?,
                    }
                }
            }
            SystemKind::Oscillator => System::Oscillator(OscillatorParams {
                c_x: self.param_or("c_x", Lc::real(1.0))?,
                c_y: self.param_or("c_y", Lc::real(1.0))?,
                x0: init("x")?,
                y0: init("y")?,
            }),
            SystemKind::Lv => {
                let p = LvParams {
                    alpha: self.param(&self.params, "alpha", "parameter")?,
                    beta: self.param(&self.params, "beta", "parameter")?,
                    a: self.param(&self.params, "a", "parameter")?,
                    b: self.param(&self.params, "b", "parameter")?,
                    x0: init("x")?,
                    y0: init("y")?,
                };
                p.validate().map_err(|_| {
                    CliError::Config("Lotka-Volterra rates a and b must be nonzero".into())
                })?;
                System::LotkaVolterra(p)
            }
        };
        let names = system.variable_names();
        match &self.plot {
            Some(PlotSpec::Bands { var }) if !names.contains(var) => {
                return Err(CliError::Config(format!("no variable `{var}` to plot")));
            }
            Some(PlotSpec::Phase { .. }) if names.len() != 2 => {
                return Err(CliError::Config(format!(
                    "{} has no phase plane",
                    self.system.name()
                )));
            }
            _ => {}
        }
        Ok(Scenario {
            space,
            system,
            t_span: self.t_span,
            dt: self.dt,
            alphas: self.alphas.clone(),
            method: self.method.into(),
        })
    }
}

/// Joins `output` onto `out_dir` when given (keeping only the file name), and
/// leaves it alone otherwise.
pub fn resolve_output(output: &str, out_dir: Option<&Path>) -> PathBuf {
    let p = PathBuf::from(output);
    match (out_dir, p.file_name()) {
        (Some(dir), Some(name)) => dir.join(name),
        _ => p,
    }
}

/// Runs the configured system, builds the table and plot, and writes the
/// requested files. `out_dir` overrides the directory of `cfg.output`.
pub fn run_scenario(cfg: &ScenarioConfig, out_dir: Option<&Path>) -> Result<ScenarioOutput> {
    let sc = cfg.validate()?;
    let trajectory = simulate_with_bands(
        &sc.system,
        sc.t_span,
        sc.dt,
        sc.method,
        sc.space.basis(),
        &sc.alphas,
    )
    .map_err(|e| match e {
        rfa_core::Error::IntegrationAbort { time } => {
            CliError::Numeric(rfa_core::Error::Evaluation(format!(
                "{} integration aborted at t = {time}",
                cfg.system.name()
            )))
        }
        other => other.into(),
    })?;
    let shown = trajectory.decimate(cfg.stride);
    let title = cfg
        .title
        .clone()
        .unwrap_or_else(|| cfg.system.name().to_string());

    let names = trajectory.names().to_vec();
    let (table, plot) = match &cfg.plot {
        Some(PlotSpec::Phase { projection }) => {
            let portrait =
                phase_portrait(&shown, (*projection).into(), sc.space.basis(), &sc.alphas)?;
            let pair = (names[0].as_str(), names[1].as_str());
            (
                ExportTable::from_phase(&portrait, pair),
                Some(svg::phase_plot(&portrait, pair, &title)),
            )
        }
        Some(PlotSpec::Bands { var }) => {
            let v = shown.var_index(var).expect("checked in validate");
            (
                ExportTable::from_trajectory(&shown),
                Some(svg::bands_plot(&shown, v, &title)),
            )
        }
        Some(PlotSpec::Components) => (
            ExportTable::from_trajectory(&shown),
            Some(svg::components_plot(&shown, &title)),
        ),
        None => (ExportTable::from_trajectory(&shown), None),
    };
    let svg = plot.map(|p| p.render());

    let mut files = Vec::new();
    if let Some(output) = &cfg.output {
        let stem = resolve_output(output, out_dir);
        if let Some(dir) = stem.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        let with_ext = |ext: &str| {
            let mut name = stem.as_os_str().to_owned();
            name.push(".");
            name.push(ext);
            PathBuf::from(name)
        };
        if matches!(cfg.format, Format::Csv | Format::Both) {
            let p = with_ext("csv");
            table.write_csv(&p)?;
            files.push(p);
        }
        if matches!(cfg.format, Format::Json | Format::Both) {
            let p = with_ext("json");
            table.write_json(&p)?;
            files.push(p);
        }
        if let Some(svg) = &svg {
            let p = with_ext("svg");
            fs::write(&p, svg).map_err(|e| CliError::io(&p, e))?;
            files.push(p);
        }
    }
    Ok(ScenarioOutput {
        trajectory,
        table,
        svg,
        files,
    })
}

/// Names of the built-in presets.
pub const PRESETS: [&str; 14] = [
    "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12",
    "fig13", "fig14", "fig15",
];

fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn linear_preset(name: &str, system: SystemKind, lambda: &str, title: &str) -> ScenarioConfig {
    ScenarioConfig {
        system,
        basis: "tri(-0.5;0;0.51)".into(),
        params: map(&[("lambda", lambda)]),
        initial: map(&[("w", "2 + 2*A")]),
        t_span: (0.0, 10.0),
        dt: 1e-3,
        alphas: default_alphas(),
        format: Format::Csv,
        output: Some(name.into()),
        stride: 10,
        method: MethodName::Auto,
        plot: Some(PlotSpec::Bands { var: "w".into() }),
        title: Some(title.into()),
    }
}

fn planar_preset(name: &str, system: SystemKind, plot: PlotSpec, title: &str) -> ScenarioConfig {
    let (basis, params, initial) = match system {
        SystemKind::Oscillator => (
            "tri(-1;0;1.01)",
            BTreeMap::new(),
            map(&[("x", "100 + 2*A"), ("y", "100 + 2*A")]),
        ),
        _ => (
            "tri(-0.5;0;0.51)",
            map(&[
                ("alpha", "0.25 + 0.001*A"),
                ("beta", "0.18 + 0.003*A"),
                ("a", "0.01"),
                ("b", "0.007"),
            ]),
            map(&[("x", "100 + 5*A"), ("y", "30 + 2*A")]),
        ),
    };
    ScenarioConfig {
        system,
        basis: basis.into(),
        params,
        initial,
        t_span: (0.0, 50.0),
        dt: 1e-3,
        alphas: default_alphas(),
        format: Format::Csv,
        output: Some(name.into()),
        stride: 50,
        method: MethodName::Rk4,
        plot: Some(plot),
        title: Some(title.into()),
    }
}

/// The configuration behind figure preset `name`.
pub fn preset(name: &str) -> Option<ScenarioConfig> {
    use PlotSpec::{Bands, Components, Phase};
    use ProjectionName::{RVsY, XVsS};
    use SystemKind::{Linear, LinearPsi, Lv, Oscillator};
    let bands = |v: &str| Bands { var: v.into() };
    Some(match name {
        "fig2" => linear_preset(name, Linear, "-0.5 + 0.8*A", "w' = λ⊙w, decay"),
        "fig3" => linear_preset(name, LinearPsi, "-0.5 + 0.8*A", "w' = λ⊙_Ψ w, decay"),
        "fig4" => linear_preset(name, Linear, "0.5 + 1*A", "w' = λ⊙w, growth"),
        "fig5" => linear_preset(name, LinearPsi, "0.5 + 1*A", "w' = λ⊙_Ψ w, growth"),
        "fig6" => planar_preset(
            name,
            Oscillator,
            Phase { projection: XVsS },
            "oscillator phase (x, s)",
        ),
        "fig7" => planar_preset(
            name,
            Oscillator,
            Phase { projection: RVsY },
            "oscillator phase (r, y)",
        ),
        "fig8" => planar_preset(name, Oscillator, Components, "oscillator r, p, s, q"),
        "fig9" => planar_preset(name, Oscillator, bands("x"), "oscillator x"),
        "fig10" => planar_preset(name, Oscillator, bands("y"), "oscillator y"),
        "fig11" => planar_preset(
            name,
            Lv,
            Phase { projection: XVsS },
            "Lotka-Volterra phase (x, s)",
        ),
        "fig12" => planar_preset(
            name,
            Lv,
            Phase { projection: RVsY },
            "Lotka-Volterra phase (r, y)",
        ),
        "fig13" => planar_preset(name, Lv, Components, "Lotka-Volterra r, p, s, q"),
        "fig14" => planar_preset(name, Lv, bands("x"), "Lotka-Volterra prey x"),
        "fig15" => planar_preset(name, Lv, bands("y"), "Lotka-Volterra predator y"),
        _ => return None,
    })
}
