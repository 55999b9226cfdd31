//! Cross-validation grid: density-matrix oracle against the closed forms,
//! plus the algebraic identity suite.

use crate::energetics::{cycle_energetics, ratio_r};
use crate::error::Result;
use crate::oracle::run_cycle;
use crate::params::CycleParams;

/// Grid corner values.
pub const R_MAX: f64 = 1.5;
pub const XI_MAX: f64 = 0.45;

/// Phases the oracle is run at; all energies must be independent of them.
pub const CHI_VALUES: [f64; 3] = [0.0, 0.7, 2.9];

/// Tolerance for χ-independence of the oracle energies.
pub const CHI_TOLERANCE: f64 = 1e-14;

/// Denominator floor below which a grid point counts as singular for the
/// ratio-based identities (the energetics themselves stay finite there).
const SKIP_THRESHOLD: f64 = 1e-9;

/// Worst residual of one check over the grid.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_residual: f64,
    /// (r, ξ) where the worst residual occurred.
    pub worst_at: (f64, f64),
    pub tolerance: f64,
    /// Grid points actually compared (singular points are skipped).
    pub points: usize,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.max_residual < self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

struct Accumulator {
    name: &'static str,
    max_residual: f64,
    worst_at: (f64, f64),
    tolerance: f64,
    points: usize,
}

impl Accumulator {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Accumulator { name, max_residual: 0.0, worst_at: (0.0, 0.0), tolerance, points: 0 }
    }

    fn record(&mut self, residual: f64, at: (f64, f64)) {
        self.points += 1;
        if residual > self.max_residual {
            self.max_residual = residual;
            self.worst_at = at;
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            max_residual: self.max_residual,
            worst_at: self.worst_at,
            tolerance: self.tolerance,
            points: self.points,
        }
    }
}

fn linspace(hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![0.0];
    }
    (0..n)
        .map(|k| if k == n - 1 { hi } else { k as f64 * hi / (n - 1) as f64 })
        .collect()
}

/// Run the full verification suite on a `grid_r` × `grid_xi` grid over
/// r ∈ [0, 1.5], ξ ∈ [0, 0.45]. Oracle-agreement and identity checks use
/// `tolerance`; χ-independence uses the fixed [`CHI_TOLERANCE`].
pub fn verify_grid(grid_r: usize, grid_xi: usize, tolerance: f64) -> Result<VerifyReport> {
    let base: CycleParams<f64> = CycleParams::paper_defaults();

    let mut oracle_q_cold = Accumulator::new("oracle q_cold", tolerance);
    let mut oracle_q_hot = Accumulator::new("oracle q_hot", tolerance);
    let mut oracle_w_net = Accumulator::new("oracle w_net", tolerance);
    let mut chi_independence = Accumulator::new("chi independence", CHI_TOLERANCE);
    let mut first_law = Accumulator::new("first law closure", tolerance);
    let mut eta_forms = Accumulator::new("efficiency forms (eq. ratio vs -W/Qh)", tolerance);
    let mut cop_forms = Accumulator::new("cop forms (eq. ratio vs Qc/W)", tolerance);
    let mut generalized = Accumulator::new("generalized eta-cop relation", tolerance);

    for &r in &linspace(R_MAX, grid_r) {
        for &xi in &linspace(XI_MAX, grid_xi) {
            let params = base.with_r(r)?.with_xi(xi)?;
            let out = cycle_energetics(&params);
            let at = (r, xi);

            let mut strokes = Vec::with_capacity(CHI_VALUES.len());
            for &chi in &CHI_VALUES {
                let s = run_cycle(&params, chi)?;
                oracle_q_cold.record((s.q_cold - out.q_cold).abs(), at);
                oracle_q_hot.record((s.q_hot - out.q_hot).abs(), at);
                oracle_w_net.record((s.w_net() - out.w_net).abs(), at);
                strokes.push(s);
            }
            for s in &strokes[1..] {
                let spread = (s.e1 - strokes[0].e1)
                    .abs()
                    .max((s.e2 - strokes[0].e2).abs())
                    .max((s.e3 - strokes[0].e3).abs())
                    .max((s.e4 - strokes[0].e4).abs());
                chi_independence.record(spread, at);
            }

            let scale = out.q_cold.abs().max(out.q_hot.abs()).max(out.w_net.abs()).max(1e-30);
            first_law.record((out.q_cold + out.q_hot + out.w_net).abs() / scale, at);

            let gap_ok = {
                let angles = crate::params::derive_angles(&params);
                (angles.theta_c.tanh() - angles.zeta * angles.theta_h.tanh()).abs()
                    > SKIP_THRESHOLD
            };
            if !gap_ok {
                continue;
            }
            let ratio = ratio_r(&params)?.ratio;
            let omega_ratio = params.omega_ratio();

            // the formal ratios diverge where their denominators vanish, so
            // residuals are taken relative to the compared magnitude
            if out.q_hot.abs() > SKIP_THRESHOLD {
                let eta_energetic = -out.w_net / out.q_hot;
                let eta_ratio = 1.0 - ratio / omega_ratio;
                let scale = eta_ratio.abs().max(1.0);
                eta_forms.record((eta_energetic - eta_ratio).abs() / scale, at);
            }
            if out.w_net.abs() > SKIP_THRESHOLD {
                let cop_energetic = out.q_cold / out.w_net;
                let cop_otto = 1.0 / (omega_ratio - 1.0);
                let cop_ratio = ratio * cop_otto / (1.0 + cop_otto * (1.0 - ratio));
                let scale = cop_ratio.abs().max(1.0);
                cop_forms.record((cop_energetic - cop_ratio).abs() / scale, at);
            }
            if out.q_hot.abs() > SKIP_THRESHOLD && out.w_net.abs() > SKIP_THRESHOLD {
                let product = (out.q_cold / out.w_net) * (-out.w_net / out.q_hot);
                let scale = ratio.abs().max(1.0);
                generalized.record((product - ratio / omega_ratio).abs() / scale, at);
            }
        }
    }

    Ok(VerifyReport {
        checks: vec![
            oracle_q_cold.finish(),
            oracle_q_hot.finish(),
            oracle_w_net.finish(),
            chi_independence.finish(),
            first_law.finish(),
            eta_forms.finish(),
            cop_forms.finish(),
            generalized.finish(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coarse_grid_passes_at_default_tolerance() {
        let report = verify_grid(11, 6, 1e-12).unwrap();
        assert!(report.all_passed(), "{:#?}", report.checks);
    }

    #[test]
    fn single_point_grid_still_runs_all_checks() {
        let report = verify_grid(1, 1, 1e-12).unwrap();
        assert_eq!(report.checks.len(), 8);
        assert!(report.checks.iter().all(|c| c.points > 0));
        assert!(report.all_passed());
    }

    #[test]
    fn unachievable_tolerance_fails() {
        let report = verify_grid(5, 3, 1e-18).unwrap();
        assert!(!report.all_passed());
    }
}
