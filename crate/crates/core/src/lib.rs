//! Thermodynamics of a two-level quantum Otto machine operating between a
//! cold thermal reservoir and a squeezed hot thermal reservoir.
//!
//! The crate computes the per-cycle heats and net work in closed form,
//! classifies the operating regime (engine, refrigerator, two heater types),
//! locates regime boundaries by bisection, emits sweep datasets as CSV, and
//! cross-validates everything against a brute-force density-matrix
//! simulation of the four strokes.
//!
//! All closed-form math is generic over the scalar type ([`Real`], i.e. f32
//! or f64); sweeps and the CLI work in f64. Energies are expressed in ħω_c
//! units unless converted to peV explicitly.

pub mod energetics;
pub mod error;
pub mod oracle;
pub mod params;
pub mod regimes;
pub mod scalar;
pub mod sweep;
pub mod verify;

pub use energetics::{
    cop, cycle_energetics, efficiency, engine_xi_bound, evaluate, fridge_xi_bound,
    generalized_relation_residual, otto_limits, ratio_r, CycleOutcome, RatioParts,
};
pub use error::OttoError;
pub use params::{derive_angles, squeeze_factor, CycleParams, DerivedAngles, HBAR_PEV_S};
pub use regimes::{boundary_scan, classify, regime_map, BoundaryPoint, Quantity, Regime, VariedParam};
pub use scalar::Real;

/// Concrete f64 aliases (what the CLI and sweeps use).
pub type CycleParams64 = params::CycleParams<f64>;
pub type CycleOutcome64 = energetics::CycleOutcome<f64>;
pub type DerivedAngles64 = params::DerivedAngles<f64>;

/// Concrete f32 aliases.
pub type CycleParams32 = params::CycleParams<f32>;
pub type CycleOutcome32 = energetics::CycleOutcome<f32>;
pub type DerivedAngles32 = params::DerivedAngles<f32>;
