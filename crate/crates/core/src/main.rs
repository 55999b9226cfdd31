use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use squeezed_otto::energetics::evaluate;
use squeezed_otto::error::OttoError;
use squeezed_otto::regimes::{boundary_scan, classify, VariedParam, DEFAULT_EPSILON};
use squeezed_otto::sweep::{figure_datasets, render_csv, run_sweep, write_csv, SweepSpec, Unit};
use squeezed_otto::verify::verify_grid;
use squeezed_otto::{CycleOutcome64, CycleParams64};

/// Two-level quantum Otto machine under a squeezed hot reservoir:
/// per-cycle energetics, regime classification, boundary scans, figure
/// datasets and oracle verification.
#[derive(Parser)]
#[command(name = "squeezed-otto", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Reservoir and frequency flags shared by all subcommands. Defaults are the
/// reference parameter set: ω_c = 2π kHz, ω_h = 3.5ω_c, β_c = 1/(10 peV),
/// β_h = 0.7β_c.
#[derive(Args)]
struct ParamFlags {
    /// Cold-stage cyclic frequency in Hz (stored as angular, 2π × this)
    #[arg(long, default_value_t = 1e3)]
    omega_c_hz: f64,

    /// ω_h/ω_c
    #[arg(long, default_value_t = 3.5)]
    omega_ratio: f64,

    /// Cold inverse temperature β_c in peV⁻¹
    #[arg(long, default_value_t = 0.1)]
    beta_c_inv_pev: f64,

    /// β_h/β_c
    #[arg(long, default_value_t = 0.7)]
    beta_ratio: f64,
}

impl ParamFlags {
    fn build(&self, r: f64, xi: f64) -> Result<CycleParams64, OttoError> {
        CycleParams64::new(
            2.0 * std::f64::consts::PI * self.omega_c_hz,
            self.omega_ratio,
            self.beta_c_inv_pev,
            self.beta_ratio,
            r,
            xi,
        )
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitArg {
    #[value(name = "hw_c")]
    HwC,
    #[value(name = "peV")]
    PeV,
}

impl From<UnitArg> for Unit {
    fn from(arg: UnitArg) -> Unit {
        match arg {
            UnitArg::HwC => Unit::HbarOmegaC,
            UnitArg::PeV => Unit::PeV,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum VaryArg {
    R,
    Xi,
}

impl From<VaryArg> for VariedParam {
    fn from(arg: VaryArg) -> VariedParam {
        match arg {
            VaryArg::R => VariedParam::R,
            VaryArg::Xi => VariedParam::Xi,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one cycle: heats, net work, η/COP and regime
    Eval {
        #[command(flatten)]
        params: ParamFlags,
        /// Squeezing parameter
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        /// Adiabaticity parameter (transition probability)
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::HwC)]
        units: UnitArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Classify the operating regime at one parameter point
    Classify {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Sweep r or ξ and emit a CSV dataset
    Sweep {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, value_enum, default_value_t = VaryArg::R)]
        vary: VaryArg,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.5)]
        to: f64,
        /// Grid points, endpoints inclusive
        #[arg(long, default_value_t = 301)]
        steps: usize,
        /// Fixed squeezing when varying ξ
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        /// Fixed adiabaticity when varying r
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::HwC)]
        units: UnitArg,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate regime boundaries along r or ξ by bisection
    Boundaries {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, value_enum, default_value_t = VaryArg::R)]
        vary: VaryArg,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.5)]
        to: f64,
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        /// Initial bracketing samples
        #[arg(long, default_value_t = 400)]
        samples: usize,
        /// Bisection tolerance in the varied parameter
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Emit the four figure datasets (fig2a/fig2b/fig3/fig4 CSVs)
    Figures {
        /// Output directory, created if missing
        #[arg(long, default_value = "figures")]
        out_dir: PathBuf,
    },
    /// Run the oracle-vs-closed-form grid and the identity suite
    Verify {
        /// Grid points in r over [0, 1.5]
        #[arg(long, default_value_t = 51)]
        grid_r: usize,
        /// Grid points in ξ over [0, 0.45]
        #[arg(long, default_value_t = 16)]
        grid_xi: usize,
        /// Residual tolerance
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn outcome_json(out: &CycleOutcome64, regime: &str, scale: f64, units: &str) -> serde_json::Value {
    json!({
        "q_cold": out.q_cold * scale,
        "q_hot": out.q_hot * scale,
        "w_net": out.w_net * scale,
        "eta": out.eta,
        "cop": out.cop,
        "regime": regime,
        "units": units,
    })
}

fn print_outcome_table(out: &CycleOutcome64, regime: &str, scale: f64, units: &str) {
    println!("{:<8} {:>22}", "regime", regime);
    println!("{:<8} {:>22} {units}", "q_cold", format!("{:+.12e}", out.q_cold * scale));
    println!("{:<8} {:>22} {units}", "q_hot", format!("{:+.12e}", out.q_hot * scale));
    println!("{:<8} {:>22} {units}", "w_net", format!("{:+.12e}", out.w_net * scale));
    match out.eta {
        Some(eta) => println!("{:<8} {:>22}", "eta", format!("{eta:.12}")),
        None => println!("{:<8} {:>22}", "eta", "-"),
    }
    match out.cop {
        Some(cop) => println!("{:<8} {:>22}", "cop", format!("{cop:.12}")),
        None => println!("{:<8} {:>22}", "cop", "-"),
    }
}

fn run(cli: Cli) -> Result<ExitCode, OttoError> {
    match cli.command {
        Command::Eval { params, r, xi, units, format } => {
            let p = params.build(r, xi)?;
            let out = evaluate(&p);
            let regime = classify(&out, DEFAULT_EPSILON)?.to_string();
            let unit: Unit = units.into();
            let scale = match unit {
                Unit::HbarOmegaC => 1.0,
                Unit::PeV => p.hbar_omega_c_pev(),
            };
            match format {
                FormatArg::Json => {
                    println!("{}", outcome_json(&out, &regime, scale, &unit.to_string()))
                }
                FormatArg::Table => print_outcome_table(&out, &regime, scale, &unit.to_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { params, r, xi, format } => {
            let p = params.build(r, xi)?;
            let out = evaluate(&p);
            let regime = classify(&out, DEFAULT_EPSILON)?.to_string();
            match format {
                FormatArg::Json => {
                    println!("{}", outcome_json(&out, &regime, 1.0, "hw_c"))
                }
                FormatArg::Table => print_outcome_table(&out, &regime, 1.0, "hw_c"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { params, vary, from, to, steps, r, xi, units, out } => {
            let spec = SweepSpec {
                vary: vary.into(),
                from,
                to,
                steps,
                base: params.build(r, xi)?,
                unit: units.into(),
            };
            let rows = run_sweep(&spec)?;
            match out {
                Some(path) => {
                    let bytes = write_csv(&rows, &path)?;
                    println!("{} {} {}", path.display(), rows.len(), bytes);
                }
                None => print!("{}", render_csv(&rows)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundaries { params, vary, from, to, r, xi, samples, tol, format } => {
            let base = params.build(r, xi)?;
            let points = boundary_scan(&base, vary.into(), from, to, samples, tol)?;
            match format {
                FormatArg::Json => {
                    let list: Vec<_> = points
                        .iter()
                        .map(|p| {
                            json!({
                                "value": p.value,
                                "vanishing": p.vanishing.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                                "below": p.below.to_string(),
                                "above": p.above.to_string(),
                            })
                        })
                        .collect();
                    println!("{}", json!({ "vary": VariedParam::from(vary).to_string(), "boundaries": list }));
                }
                FormatArg::Table => {
                    for p in &points {
                        let vanishing: Vec<String> =
                            p.vanishing.iter().map(|q| q.to_string()).collect();
                        println!(
                            "{} = {:.10}  zero: {}  {} -> {}",
                            VariedParam::from(vary),
                            p.value,
                            vanishing.join("+"),
                            p.below,
                            p.above
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Figures { out_dir } => {
            let manifest = figure_datasets(&out_dir)?;
            for entry in &manifest {
                println!("{} {} {}", entry.name, entry.rows, entry.bytes);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { grid_r, grid_xi, tol } => {
            if tol <= 0.0 || tol.is_nan() {
                return Err(OttoError::InvalidParam {
                    field: "tol",
                    value: tol,
                    constraint: "tol > 0",
                });
            }
            let report = verify_grid(grid_r.max(1), grid_xi.max(1), tol)?;
            for check in &report.checks {
                println!(
                    "{:<40} max residual {:>12.3e} at (r={:.3}, xi={:.3}) over {} points [{}]",
                    check.name,
                    check.max_residual,
                    check.worst_at.0,
                    check.worst_at.1,
                    check.points,
                    if check.passed() { "ok" } else { "FAIL" }
                );
            }
            if report.all_passed() {
                println!("verification passed");
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("verification failed");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                OttoError::InvalidParam { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
