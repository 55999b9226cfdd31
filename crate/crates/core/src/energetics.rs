//! Closed-form cycle thermodynamics.
//!
//! All energies are expressed in units of ħω_c. Sign convention: Q > 0 is
//! heat flowing into the working substance, W_net > 0 is work flowing in.

use crate::error::{OttoError, Result};
use crate::params::{derive_angles, CycleParams};
use crate::scalar::Real;

/// Threshold below which tanhθ_c − ζtanhθ_h counts as singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e-15;

/// Heats and net work of one cycle, with η / COP attached where the machine
/// actually operates as an engine / refrigerator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleOutcome<T> {
    /// Heat exchanged with the cold reservoir, ħω_c units.
    pub q_cold: T,
    /// Heat exchanged with the squeezed hot reservoir, ħω_c units.
    pub q_hot: T,
    /// Net work, ħω_c units; negative means work extracted.
    pub w_net: T,
    /// −W_net/Q_h, present only under the engine sign pattern.
    pub eta: Option<T>,
    /// Q_c/W_net, present only under the refrigerator sign pattern.
    pub cop: Option<T>,
}

/// Heats and net work from the closed forms.
///
/// Q_c = −½(tanhθ_c − ζtanhθ_h) − ξζtanhθ_h and
/// Q_h = (ω_h/ω_c)[½(tanhθ_c − ζtanhθ_h) − ξtanhθ_c], with
/// W_net = −(Q_c + Q_h).
pub fn cycle_energetics<T: Real>(params: &CycleParams<T>) -> CycleOutcome<T> {
    let a = derive_angles(params);
    let half = T::lit(0.5);
    let t_c = a.theta_c.tanh();
    let zt_h = a.zeta * a.theta_h.tanh();
    let gap = t_c - zt_h;
    let q_cold = -half * gap - params.xi() * zt_h;
    let q_hot = params.omega_ratio() * (half * gap - params.xi() * t_c);
    CycleOutcome { q_cold, q_hot, w_net: -(q_cold + q_hot), eta: None, cop: None }
}

/// Full evaluation: energetics plus η and COP where defined.
pub fn evaluate<T: Real>(params: &CycleParams<T>) -> CycleOutcome<T> {
    let mut out = cycle_energetics(params);
    out.eta = efficiency_of(&out);
    out.cop = cop_of(&out);
    out
}

fn efficiency_of<T: Real>(out: &CycleOutcome<T>) -> Option<T> {
    let zero = T::zero();
    if out.q_hot > zero && out.q_cold < zero && out.w_net < zero {
        Some(-out.w_net / out.q_hot)
    } else {
        None
    }
}

fn cop_of<T: Real>(out: &CycleOutcome<T>) -> Option<T> {
    let zero = T::zero();
    if out.q_cold > zero && out.q_hot < zero && out.w_net > zero {
        Some(out.q_cold / out.w_net)
    } else {
        None
    }
}

/// Engine efficiency η = −W_net/Q_h, present iff the machine operates as an
/// engine (Q_h > 0, Q_c < 0, W_net < 0) at these parameters.
pub fn efficiency<T: Real>(params: &CycleParams<T>) -> Option<T> {
    efficiency_of(&cycle_energetics(params))
}

/// Refrigerator COP = Q_c/W_net, present iff the machine operates as a
/// refrigerator (Q_c > 0, Q_h < 0, W_net > 0) at these parameters.
pub fn cop<T: Real>(params: &CycleParams<T>) -> Option<T> {
    cop_of(&cycle_energetics(params))
}

/// The finite-time correction ratio R = (1 + 2ξF)/(1 − 2ξG) with its
/// intermediates F and G.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioParts<T> {
    pub f: T,
    pub g: T,
    pub ratio: T,
}

/// F, G and R. Errors when tanhθ_c − ζtanhθ_h is singular; the energetics
/// stay finite there and never route through these intermediates.
pub fn ratio_r<T: Real>(params: &CycleParams<T>) -> Result<RatioParts<T>> {
    let a = derive_angles(params);
    let t_c = a.theta_c.tanh();
    let zt_h = a.zeta * a.theta_h.tanh();
    let gap = t_c - zt_h;
    if gap.abs() < T::lit(SINGULARITY_THRESHOLD) {
        return Err(OttoError::SingularSwitchingPoint { denominator: gap.as_f64() });
    }
    let f = zt_h / gap;
    let g = t_c / gap;
    let two_xi = T::lit(2.0) * params.xi();
    let ratio = (T::one() + two_xi * f) / (T::one() - two_xi * g);
    Ok(RatioParts { f, g, ratio })
}

/// Largest ξ for which work can still be extracted (W_net < 0) at the given
/// r; `None` when the engine is impossible at any ξ. Ignores `params.xi()`.
pub fn engine_xi_bound<T: Real>(params: &CycleParams<T>) -> Option<T> {
    let a = derive_angles(params);
    let t_c = a.theta_c.tanh();
    let zt_h = a.zeta * a.theta_h.tanh();
    let num = (params.omega_ratio() - T::one()) * (t_c - zt_h);
    let den = T::lit(2.0) * (params.omega_ratio() * t_c + zt_h);
    let bound = num / den;
    (bound > T::zero()).then_some(bound)
}

/// Largest ξ for which refrigeration is possible (Q_c > 0) at the given r;
/// `None` when the value is non-positive. Ignores `params.xi()`.
pub fn fridge_xi_bound<T: Real>(params: &CycleParams<T>) -> Option<T> {
    let a = derive_angles(params);
    let t_c = a.theta_c.tanh();
    let zt_h = a.zeta * a.theta_h.tanh();
    let bound = T::lit(0.5) * (T::one() - t_c / zt_h);
    (bound > T::zero()).then_some(bound)
}

/// Quasi-static limits: η_Otto = 1 − ω_c/ω_h and COP_Otto = ω_c/(ω_h − ω_c).
pub fn otto_limits<T: Real>(omega_ratio: T) -> Result<(T, T)> {
    if !(omega_ratio.is_finite() && omega_ratio > T::one()) {
        return Err(OttoError::InvalidParam {
            field: "omega_ratio",
            value: omega_ratio.as_f64(),
            constraint: "omega_ratio > 1",
        });
    }
    let eta_otto = T::one() - omega_ratio.recip();
    let cop_otto = (omega_ratio - T::one()).recip();
    Ok((eta_otto, cop_otto))
}

/// Residual of the generalized efficiency–COP relation,
/// |COP·η − (ω_c/ω_h)·R|, evaluated with the formal (sign-unrestricted)
/// ratios η = −W_net/Q_h and COP = Q_c/W_net. Algebraically zero.
pub fn generalized_relation_residual<T: Real>(params: &CycleParams<T>) -> Result<T> {
    let out = cycle_energetics(params);
    if out.q_hot == T::zero() {
        return Err(OttoError::DivisionByZero { quantity: "q_hot" });
    }
    if out.w_net == T::zero() {
        return Err(OttoError::DivisionByZero { quantity: "w_net" });
    }
    let eta_formal = -out.w_net / out.q_hot;
    let cop_formal = out.q_cold / out.w_net;
    let r = ratio_r(params)?.ratio;
    Ok((cop_formal * eta_formal - r / params.omega_ratio()).abs())
}
