//! Flags, per-command defaults and validation.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pmech::{ForceProfile, OscillatorParams, Pulse, SymbolPoly};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "pmech", version, about = "Heisenberg-group mechanics experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Coherent-state expectation against the classical value as h shrinks.
    LimitSweep(RunArgs),
    /// Number-state transition probabilities of a forced oscillator from rest.
    Transitions(RunArgs),
    /// Envelope of the response to a cosine force.
    Resonance(RunArgs),
    /// Classical trajectory, closed form next to RK4.
    Flow(RunArgs),
    /// Coherent kernel on a grid, built from its vector and from the closed form.
    Kernel(RunArgs),
    /// Run every property suite and report pass/fail per suite.
    Verify(RunArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::LimitSweep(_) => "limit-sweep",
            Self::Transitions(_) => "transitions",
            Self::Resonance(_) => "resonance",
            Self::Flow(_) => "flow",
            Self::Kernel(_) => "kernel",
            Self::Verify(_) => "verify",
        }
    }

    pub fn args(&self) -> &RunArgs {
        match self {
            Self::LimitSweep(a)
            | Self::Transitions(a)
            | Self::Resonance(a)
            | Self::Flow(a)
            | Self::Kernel(a)
            | Self::Verify(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForceKind {
    Zero,
    Cosine,
    Pulse,
}

/// Raw flags; anything left unset takes the command's default.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub mass: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Force amplitude (cosine amplitude or pulse peak).
    #[arg(long = "Z0", allow_negative_numbers = true)]
    pub z0: Option<f64>,
    /// Cosine force frequency.
    #[arg(long = "Omega")]
    pub big_omega: Option<f64>,
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Fock truncation.
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// RK4 step.
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum)]
    pub force: Option<ForceKind>,
    /// Start of the pulse support or of the cosine window.
    #[arg(long, allow_negative_numbers = true)]
    pub t0: Option<f64>,
    /// End of the pulse support or of the cosine window.
    #[arg(long, allow_negative_numbers = true)]
    pub t1: Option<f64>,
    /// Number of samples of a bump pulse.
    #[arg(long)]
    pub pulse_samples: Option<usize>,
    /// Number of output time samples.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Observable polynomial in q and p, e.g. "q^2 + 0.5*q*p".
    #[arg(long)]
    pub observable: Option<String>,
    /// Descending list of h values.
    #[arg(long, value_delimiter = ',')]
    pub h_grid: Option<Vec<f64>>,
    /// Half-width of the square kernel grid.
    #[arg(long)]
    pub extent: Option<f64>,
    /// Kernel grid spacing.
    #[arg(long)]
    pub step: Option<f64>,
    /// Restrict verify to these suites.
    #[arg(long)]
    pub suite: Vec<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Fully resolved and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: &'static str,
    pub h: f64,
    pub omega: f64,
    pub mass: f64,
    pub a: f64,
    pub b: f64,
    pub z0: f64,
    pub big_omega: f64,
    pub t_max: f64,
    pub n: usize,
    pub n_max: usize,
    pub dt: f64,
    pub tol: f64,
    pub force: ForceKind,
    pub t0: f64,
    pub t1: f64,
    pub pulse_samples: usize,
    pub steps: usize,
    pub observable: String,
    pub h_grid: Vec<f64>,
    pub extent: f64,
    pub step: f64,
    pub suites: Vec<String>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn positive(name: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("--{name} must be positive and finite, got {v}")))
    }
}

fn finite(name: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("--{name} must be finite, got {v}")))
    }
}

impl RunConfig {
    pub fn resolve(command: &Command) -> Result<Self, CliError> {
        let r = command.args();
        let name = command.name();
        let (a, b, force, t_max, steps, big_omega) = match name {
            "limit-sweep" => (0.7, -0.3, ForceKind::Zero, 10.0, 101, 1.5),
            "transitions" => (0.0, 0.0, ForceKind::Pulse, 10.0, 101, 1.0),
            "resonance" => (0.0, 0.0, ForceKind::Cosine, 200.0, 2001, 1.5),
            "flow" => (1.0, 0.0, ForceKind::Zero, 10.0, 101, 1.5),
            _ => (0.0, 0.0, ForceKind::Zero, 10.0, 101, 1.5),
        };
        let cfg = RunConfig {
            command: name,
            h: r.h.unwrap_or(1.0),
            omega: r.omega.unwrap_or(1.0),
            mass: r.mass.unwrap_or(1.0),
            a: r.a.unwrap_or(a),
            b: r.b.unwrap_or(b),
            z0: r.z0.unwrap_or(if name == "transitions" { 0.25 } else { 1.0 }),
            big_omega: r.big_omega.unwrap_or(big_omega),
            t_max: r.t_max.unwrap_or(t_max),
            n: r.n.unwrap_or(64),
            n_max: r.n_max.unwrap_or(12),
            dt: r.dt.unwrap_or(if name == "resonance" { 1e-2 } else { 1e-3 }),
            tol: r.tol.unwrap_or(1e-10),
            force: r.force.unwrap_or(force),
            t0: r.t0.unwrap_or(0.0),
            t1: r.t1.unwrap_or(5.0),
            pulse_samples: r.pulse_samples.unwrap_or(201),
            steps: r.steps.unwrap_or(steps),
            observable: r.observable.clone().unwrap_or_else(|| "q^2".into()),
            h_grid: r.h_grid.clone().unwrap_or_else(|| vec![1.0, 0.1, 0.01, 0.001]),
            extent: r.extent.unwrap_or(3.0),
            step: r.step.unwrap_or(0.25),
            suites: r.suite.clone(),
            output: r.output.clone(),
            format: r.format,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        positive("h", self.h)?;
        positive("omega", self.omega)?;
        positive("mass", self.mass)?;
        finite("a", self.a)?;
        finite("b", self.b)?;
        finite("Z0", self.z0)?;
        positive("Omega", self.big_omega)?;
        positive("t-max", self.t_max)?;
        positive("dt", self.dt)?;
        positive("tol", self.tol)?;
        finite("t0", self.t0)?;
        finite("t1", self.t1)?;
        if self.n < 2 {
            return Err(invalid(format!("--N must be at least 2, got {}", self.n)));
        }
        if self.steps < 2 {
            return Err(invalid(format!("--steps must be at least 2, got {}", self.steps)));
        }
        match self.command {
            "limit-sweep" => {
                self.symbol()?;
                if self.h_grid.is_empty() {
                    return Err(invalid("--h-grid is empty"));
                }
                if self.h_grid.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
                    return Err(invalid("--h-grid values must be positive"));
                }
                if self.h_grid.windows(2).any(|w| w[1] >= w[0]) {
                    return Err(invalid("--h-grid must be strictly descending"));
                }
            }
            "transitions" => {
                if 2 * self.n_max >= self.n {
                    return Err(invalid(format!(
                        "--n-max {} needs --N > {}; got --N {}",
                        self.n_max,
                        2 * self.n_max,
                        self.n
                    )));
                }
                if self.force != ForceKind::Zero && self.t1 <= self.t0 {
                    return Err(invalid(format!("force window needs --t1 > --t0, got [{}, {}]", self.t0, self.t1)));
                }
                if self.force == ForceKind::Pulse && self.pulse_samples < 2 {
                    return Err(invalid("--pulse-samples must be at least 2"));
                }
            }
            "flow" => {
                if self.force == ForceKind::Pulse && (self.t1 <= self.t0 || self.pulse_samples < 2) {
                    return Err(invalid("pulse needs --t1 > --t0 and --pulse-samples >= 2"));
                }
            }
            "kernel" => {
                positive("extent", self.extent)?;
                positive("step", self.step)?;
                if self.extent / self.step > 2000.0 {
                    return Err(invalid("kernel grid is too fine (more than 4001 points per axis)"));
                }
            }
            "verify" => {
                if let Some(bad) = self.suites.iter().find(|s| !pmech::verify::SUITES.contains(&s.as_str())) {
                    return Err(invalid(format!(
                        "unknown suite '{bad}'; expected one of {}",
                        pmech::verify::SUITES.join(", ")
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn params(&self) -> OscillatorParams {
        OscillatorParams::new(self.omega, self.mass).expect("validated")
    }

    pub fn symbol(&self) -> Result<SymbolPoly, CliError> {
        let f: SymbolPoly =
            self.observable.parse().map_err(|e| invalid(format!("--observable '{}': {e}", self.observable)))?;
        if f.degree() > pmech::fock::MAX_SYMBOL_DEGREE {
            return Err(invalid(format!(
                "--observable degree {} exceeds {}",
                f.degree(),
                pmech::fock::MAX_SYMBOL_DEGREE
            )));
        }
        Ok(f)
    }

    pub fn force_profile(&self) -> Result<ForceProfile, CliError> {
        Ok(match self.force {
            ForceKind::Zero => ForceProfile::Zero,
            ForceKind::Cosine => ForceProfile::cosine(self.z0, self.big_omega).map_err(|e| invalid(e.to_string()))?,
            ForceKind::Pulse => ForceProfile::Pulse(
                Pulse::bump(self.t0, self.t1, self.z0, self.pulse_samples).map_err(|e| invalid(e.to_string()))?,
            ),
        })
    }

    /// Every setting, in a fixed order, for the output header.
    pub fn meta(&self) -> Vec<(&'static str, MetaValue)> {
        use MetaValue::*;
        vec![
            ("command", Text(self.command.into())),
            ("h", Float(self.h)),
            ("omega", Float(self.omega)),
            ("mass", Float(self.mass)),
            ("a", Float(self.a)),
            ("b", Float(self.b)),
            ("Z0", Float(self.z0)),
            ("Omega", Float(self.big_omega)),
            ("t_max", Float(self.t_max)),
            ("N", Int(self.n as i64)),
            ("n_max", Int(self.n_max as i64)),
            ("dt", Float(self.dt)),
            ("tol", Float(self.tol)),
            ("force", Text(format!("{:?}", self.force).to_lowercase())),
            ("t0", Float(self.t0)),
            ("t1", Float(self.t1)),
            ("pulse_samples", Int(self.pulse_samples as i64)),
            ("steps", Int(self.steps as i64)),
            ("observable", Text(self.observable.clone())),
            ("h_grid", List(self.h_grid.clone())),
            ("extent", Float(self.extent)),
            ("step", Float(self.step)),
            ("suites", Text(self.suites.join(","))),
            ("format", Text(format!("{:?}", self.format).to_lowercase())),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MetaValue {
    Int(i64),
    Float(f64),
    Text(String),
    List(Vec<f64>),
}
