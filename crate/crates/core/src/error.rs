use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the cycle library.
#[derive(Debug, Error)]
pub enum OttoError {
    /// A cycle parameter violates its domain.
    #[error("invalid parameter `{field}` = {value}: must satisfy {constraint}")]
    InvalidParam {
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// tanh(theta_c) - zeta*tanh(theta_h) is below the singularity threshold,
    /// so the finite-time correction ratio and its intermediates diverge.
    #[error("quasi-static switching point: |tanh(theta_c) - zeta*tanh(theta_h)| = {denominator:e} is singular")]
    SingularSwitchingPoint { denominator: f64 },

    /// A formal ratio was requested where its denominator vanishes.
    #[error("{quantity} vanishes; formal ratio undefined")]
    DivisionByZero { quantity: &'static str },

    /// A sign pattern of (Q_c, Q_h, W_net) that the closed forms cannot
    /// produce; indicates numerical corruption upstream.
    #[error(
        "unreachable sign pattern: q_cold = {q_cold:e}, q_hot = {q_hot:e}, w_net = {w_net:e}"
    )]
    InconsistentSigns {
        q_cold: f64,
        q_hot: f64,
        w_net: f64,
    },

    /// The literal squeeze map annihilated the state.
    #[error("degenerate squeeze map: output trace = {trace:e}")]
    DegenerateSqueezeMap { trace: f64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = OttoError> = std::result::Result<T, E>;
