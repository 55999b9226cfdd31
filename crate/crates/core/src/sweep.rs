//! Parameter sweeps and deterministic CSV emission.

use std::fs;
use std::path::{Path, PathBuf};

use crate::energetics::evaluate;
use crate::error::{OttoError, Result};
use crate::params::CycleParams;
use crate::regimes::{classify, Regime, VariedParam, DEFAULT_EPSILON};

/// Energy unit of emitted rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    /// ħω_c (dimensionless internal unit)
    HbarOmegaC,
    /// picoelectronvolt
    PeV,
}

impl std::fmt::Display for Unit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Unit::HbarOmegaC => "hw_c",
            Unit::PeV => "peV",
        })
    }
}

/// One linear sweep over r or ξ, endpoints inclusive.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub vary: VariedParam,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub base: CycleParams<f64>,
    pub unit: Unit,
}

impl SweepSpec {
    fn validate(&self) -> Result<()> {
        if self.from > self.to || self.from.is_nan() || self.to.is_nan() {
            return Err(OttoError::InvalidParam {
                field: "from",
                value: self.from,
                constraint: "from <= to",
            });
        }
        if self.steps < 2 {
            return Err(OttoError::InvalidParam {
                field: "steps",
                value: self.steps as f64,
                constraint: "steps >= 2",
            });
        }
        Ok(())
    }

    fn grid_value(&self, k: usize) -> f64 {
        if k == self.steps - 1 {
            self.to
        } else {
            self.from + k as f64 * (self.to - self.from) / (self.steps - 1) as f64
        }
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    pub xi: f64,
    pub q_cold: f64,
    pub q_hot: f64,
    pub w_net: f64,
    pub eta: Option<f64>,
    pub cop: Option<f64>,
    pub regime: Regime,
}

/// Evaluate every grid point of the sweep, in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let mut rows = Vec::with_capacity(spec.steps);
    for k in 0..spec.steps {
        let value = spec.grid_value(k);
        let params = match spec.vary {
            VariedParam::R => spec.base.with_r(value),
            VariedParam::Xi => spec.base.with_xi(value),
        }?;
        let out = evaluate(&params);
        let regime = classify(&out, DEFAULT_EPSILON)?;
        let scale = match spec.unit {
            Unit::HbarOmegaC => 1.0,
            Unit::PeV => params.hbar_omega_c_pev(),
        };
        rows.push(SweepRow {
            r: params.r(),
            xi: params.xi(),
            q_cold: out.q_cold * scale,
            q_hot: out.q_hot * scale,
            w_net: out.w_net * scale,
            eta: out.eta,
            cop: out.cop,
            regime,
        });
    }
    Ok(rows)
}

/// Fixed CSV header.
pub const CSV_HEADER: &str = "r,xi,q_cold,q_hot,w_net,eta,cop,regime";

fn push_opt(line: &mut String, value: Option<f64>) {
    if let Some(v) = value {
        line.push_str(&format!("{v}"));
    }
}

/// Render rows as CSV: fixed header, shortest round-trip numeric formatting,
/// empty cells for absent η/COP, LF line endings.
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let mut line = format!("{},{},{},{},{},", row.r, row.xi, row.q_cold, row.q_hot, row.w_net);
        push_opt(&mut line, row.eta);
        line.push(',');
        push_opt(&mut line, row.cop);
        line.push(',');
        line.push_str(&row.regime.to_string());
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Write rows to `destination`; returns the byte count written.
pub fn write_csv(rows: &[SweepRow], destination: &Path) -> Result<u64> {
    let text = render_csv(rows);
    fs::write(destination, text.as_bytes()).map_err(|source| OttoError::Io {
        path: destination.to_path_buf(),
        source,
    })?;
    Ok(text.len() as u64)
}

/// Parse one data line back into a row; used by the round-trip tests and
/// external consumers of the emitted files.
pub fn parse_csv_row(line: &str) -> Option<SweepRow> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 8 {
        return None;
    }
    let num = |s: &str| s.parse::<f64>().ok();
    let opt = |s: &str| {
        if s.is_empty() {
            Some(None)
        } else {
            s.parse::<f64>().ok().map(Some)
        }
    };
    let regime = match fields[7] {
        "engine" => Regime::Engine,
        "refrigerator" => Regime::Refrigerator,
        "heater_i" => Regime::HeaterI,
        "heater_ii" => Regime::HeaterII,
        other => {
            use crate::regimes::Quantity;
            match other {
                "boundary:q_cold" => Regime::Boundary(Quantity::QCold),
                "boundary:q_hot" => Regime::Boundary(Quantity::QHot),
                "boundary:w_net" => Regime::Boundary(Quantity::WNet),
                _ => return None,
            }
        }
    };
    Some(SweepRow {
        r: num(fields[0])?,
        xi: num(fields[1])?,
        q_cold: num(fields[2])?,
        q_hot: num(fields[3])?,
        w_net: num(fields[4])?,
        eta: opt(fields[5])?,
        cop: opt(fields[6])?,
        regime,
    })
}

/// Manifest entry for one emitted figure dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureFile {
    pub name: String,
    pub rows: usize,
    pub bytes: u64,
}

/// Number of grid points per figure series.
pub const FIGURE_STEPS: usize = 301;

fn figure_sweep(xi: f64) -> Result<Vec<SweepRow>> {
    run_sweep(&SweepSpec {
        vary: VariedParam::R,
        from: 0.0,
        to: 1.5,
        steps: FIGURE_STEPS,
        base: CycleParams::paper_defaults().with_xi(xi)?,
        unit: Unit::HbarOmegaC,
    })
}

/// Emit the four figure datasets into `output_dir`:
///
/// * `fig2a.csv` — Q_c, Q_h, W_net vs r at ξ = 0.2
/// * `fig2b.csv` — the same at ξ = 0 (quasi-static)
/// * `fig3.csv`  — η vs r for ξ ∈ {0, 0.1, 0.2} (engine region only)
/// * `fig4.csv`  — COP vs r for ξ ∈ {0, 0.1, 0.2} (refrigerator region only)
///
/// All series run over r ∈ [0, 1.5] with 301 points at the default
/// parameters, energies in ħω_c units.
pub fn figure_datasets(output_dir: &Path) -> Result<Vec<FigureFile>> {
    fs::create_dir_all(output_dir).map_err(|source| OttoError::Io {
        path: output_dir.to_path_buf(),
        source,
    })?;

    let mut manifest = Vec::new();
    let mut emit = |name: &str, rows: Vec<SweepRow>| -> Result<()> {
        let path: PathBuf = output_dir.join(name);
        let bytes = write_csv(&rows, &path)?;
        manifest.push(FigureFile { name: name.to_string(), rows: rows.len(), bytes });
        Ok(())
    };

    emit("fig2a.csv", figure_sweep(0.2)?)?;
    emit("fig2b.csv", figure_sweep(0.0)?)?;

    let mut fig3 = Vec::new();
    let mut fig4 = Vec::new();
    for xi in [0.0, 0.1, 0.2] {
        let rows = figure_sweep(xi)?;
        fig3.extend(rows.iter().cloned().map(|mut row| {
            row.cop = None;
            row
        }));
        fig4.extend(rows.into_iter().map(|mut row| {
            row.eta = None;
            row
        }));
    }
    emit("fig3.csv", fig3)?;
    emit("fig4.csv", fig4)?;
    Ok(manifest)
}
