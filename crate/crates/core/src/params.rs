//! Cycle parameters, derived dimensionless angles and physical constants.

use crate::error::{OttoError, Result};
use crate::scalar::Real;

/// Reduced Planck constant in peV·s (CODATA).
pub const HBAR_PEV_S: f64 = 6.582_119_569e-4;

/// Full specification of one Otto cycle.
///
/// Validated at construction; every operation in this crate may assume a
/// `CycleParams` value is in-domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleParams<T> {
    omega_c: T,
    omega_ratio: T,
    beta_c: T,
    beta_ratio: T,
    r: T,
    xi: T,
}

impl<T: Real> CycleParams<T> {
    /// Build a validated parameter set.
    ///
    /// * `omega_c` — cold-stage angular frequency, rad/s, > 0
    /// * `omega_ratio` — ω_h/ω_c, > 1 (gap expansion)
    /// * `beta_c` — cold inverse temperature, peV⁻¹, > 0
    /// * `beta_ratio` — β_h/β_c, > 0
    /// * `r` — squeezing parameter, ≥ 0
    /// * `xi` — adiabaticity (transition probability), in [0, 1/2]
    pub fn new(
        omega_c: T,
        omega_ratio: T,
        beta_c: T,
        beta_ratio: T,
        r: T,
        xi: T,
    ) -> Result<Self> {
        check("omega_c", omega_c, "omega_c > 0", omega_c.is_finite() && omega_c > T::zero())?;
        check(
            "omega_ratio",
            omega_ratio,
            "omega_ratio > 1",
            omega_ratio.is_finite() && omega_ratio > T::one(),
        )?;
        check("beta_c", beta_c, "beta_c > 0", beta_c.is_finite() && beta_c > T::zero())?;
        check(
            "beta_ratio",
            beta_ratio,
            "beta_ratio > 0",
            beta_ratio.is_finite() && beta_ratio > T::zero(),
        )?;
        check("r", r, "r >= 0", r.is_finite() && r >= T::zero())?;
        check(
            "xi",
            xi,
            "0 <= xi <= 0.5",
            xi.is_finite() && xi >= T::zero() && xi <= T::lit(0.5),
        )?;
        Ok(Self { omega_c, omega_ratio, beta_c, beta_ratio, r, xi })
    }

    /// The parameter set used throughout the reference figures:
    /// ω_c = 2π kHz, ω_h = 3.5 ω_c, β_c = 1/(10 peV), β_h = 0.7 β_c,
    /// with r = ξ = 0.
    pub fn paper_defaults() -> Self {
        Self {
            omega_c: T::lit(2.0 * std::f64::consts::PI * 1e3),
            omega_ratio: T::lit(3.5),
            beta_c: T::lit(0.1),
            beta_ratio: T::lit(0.7),
            r: T::zero(),
            xi: T::zero(),
        }
    }

    pub fn with_r(mut self, r: T) -> Result<Self> {
        check("r", r, "r >= 0", r.is_finite() && r >= T::zero())?;
        self.r = r;
        Ok(self)
    }

    pub fn with_xi(mut self, xi: T) -> Result<Self> {
        check(
            "xi",
            xi,
            "0 <= xi <= 0.5",
            xi.is_finite() && xi >= T::zero() && xi <= T::lit(0.5),
        )?;
        self.xi = xi;
        Ok(self)
    }

    pub fn omega_c(&self) -> T {
        self.omega_c
    }

    pub fn omega_ratio(&self) -> T {
        self.omega_ratio
    }

    pub fn beta_c(&self) -> T {
        self.beta_c
    }

    pub fn beta_ratio(&self) -> T {
        self.beta_ratio
    }

    pub fn r(&self) -> T {
        self.r
    }

    pub fn xi(&self) -> T {
        self.xi
    }

    /// Energy quantum ħω_c in peV; the conversion factor from the internal
    /// dimensionless energy unit to peV.
    pub fn hbar_omega_c_pev(&self) -> T {
        T::lit(HBAR_PEV_S) * self.omega_c
    }
}

fn check<T: Real>(field: &'static str, value: T, constraint: &'static str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(OttoError::InvalidParam { field, value: value.as_f64(), constraint })
    }
}

/// Dimensionless angles θ_c, θ_h and the squeezing factor ζ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedAngles<T> {
    /// θ_c = ½ β_c ħ ω_c
    pub theta_c: T,
    /// θ_h = ½ β_h ħ ω_h
    pub theta_h: T,
    /// ζ = 1/cosh²(2r); 1 at r = 0, strictly decreasing in r
    pub zeta: T,
}

/// Compute θ_c, θ_h and ζ from a validated parameter set.
pub fn derive_angles<T: Real>(params: &CycleParams<T>) -> DerivedAngles<T> {
    let half = T::lit(0.5);
    let hbar = T::lit(HBAR_PEV_S);
    let theta_c = half * params.beta_c() * hbar * params.omega_c();
    let theta_h = theta_c * params.beta_ratio() * params.omega_ratio();
    DerivedAngles { theta_c, theta_h, zeta: squeeze_factor(params.r()) }
}

/// ζ(r) = 1/cosh²(2r).
pub fn squeeze_factor<T: Real>(r: T) -> T {
    let c = (T::lit(2.0) * r).cosh();
    (c * c).recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults() -> CycleParams<f64> {
        CycleParams::paper_defaults()
    }

    #[test]
    fn default_angles_match_reference_values() {
        let a = derive_angles(&defaults());
        assert!((a.theta_c - 0.2067834).abs() < 1e-7);
        assert!((a.theta_h - 0.5066193).abs() < 1e-7);
        assert_eq!(a.zeta, 1.0);
    }

    #[test]
    fn zeta_at_r_one() {
        let p = defaults().with_r(1.0).unwrap();
        let a = derive_angles(&p);
        assert!((a.zeta - 0.070651).abs() < 1e-6);
        assert!((a.zeta - 1.0 / 2.0f64.cosh().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn zero_beta_c_rejected() {
        let err = CycleParams::new(1.0, 3.5, 0.0, 0.7, 0.0, 0.0).unwrap_err();
        match err {
            OttoError::InvalidParam { field, .. } => assert_eq!(field, "beta_c"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn xi_above_half_rejected() {
        let err = defaults().with_xi(0.9).unwrap_err();
        match err {
            OttoError::InvalidParam { field, constraint, .. } => {
                assert_eq!(field, "xi");
                assert!(constraint.contains("0.5"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn omega_ratio_must_exceed_one() {
        assert!(CycleParams::new(1.0, 1.0, 0.1, 0.7, 0.0, 0.0).is_err());
    }

    #[test]
    fn hbar_omega_c_for_defaults_is_known_pev() {
        assert!((defaults().hbar_omega_c_pev() - 4.135667696).abs() < 1e-8);
    }

    #[test]
    fn works_in_f32() {
        let p: CycleParams<f32> = CycleParams::paper_defaults();
        let a = derive_angles(&p);
        assert!((a.theta_c - 0.2067834).abs() < 1e-5);
    }
}
