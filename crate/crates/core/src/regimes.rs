//! Machine-type classification and boundary location.
//!
//! The four reachable sign patterns of (Q_c, Q_h, W_net):
//!
//! | regime        | Q_c | Q_h | W_net |
//! |---------------|-----|-----|-------|
//! | engine        |  −  |  +  |   −   |
//! | refrigerator  |  +  |  −  |   +   |
//! | heater I      |  −  |  +  |   +   |
//! | heater II     |  −  |  −  |   +   |
//!
//! Everything else is forbidden by the closed forms plus first-law closure.

use std::fmt;

use crate::energetics::{cycle_energetics, CycleOutcome};
use crate::error::{OttoError, Result};
use crate::params::CycleParams;
use crate::scalar::Real;

/// Default classification tolerance, in ħω_c units.
pub const DEFAULT_EPSILON: f64 = 1e-12;

/// Minimum bracketing samples before bisection.
pub const MIN_BRACKET_SAMPLES: usize = 400;

/// One of the three cycle energy quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    QCold,
    QHot,
    WNet,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::QCold => "q_cold",
            Quantity::QHot => "q_hot",
            Quantity::WNet => "w_net",
        })
    }
}

/// Machine type of one cycle outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Engine,
    Refrigerator,
    HeaterI,
    HeaterII,
    /// One of the quantities vanishes within tolerance (the one with the
    /// smallest magnitude is reported).
    Boundary(Quantity),
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Engine => f.write_str("engine"),
            Regime::Refrigerator => f.write_str("refrigerator"),
            Regime::HeaterI => f.write_str("heater_i"),
            Regime::HeaterII => f.write_str("heater_ii"),
            Regime::Boundary(q) => write!(f, "boundary:{q}"),
        }
    }
}

/// Classify an outcome by its sign pattern; quantities within `epsilon` of
/// zero yield [`Regime::Boundary`]. A pattern the closed forms cannot
/// produce raises [`OttoError::InconsistentSigns`].
pub fn classify<T: Real>(outcome: &CycleOutcome<T>, epsilon: T) -> Result<Regime> {
    let qc = outcome.q_cold;
    let qh = outcome.q_hot;
    let w = outcome.w_net;

    let mut nearest: Option<(T, Quantity)> = None;
    for (value, quantity) in
        [(qc, Quantity::QCold), (qh, Quantity::QHot), (w, Quantity::WNet)]
    {
        if value.abs() <= epsilon {
            match nearest {
                Some((best, _)) if best <= value.abs() => {}
                _ => nearest = Some((value.abs(), quantity)),
            }
        }
    }
    if let Some((_, quantity)) = nearest {
        return Ok(Regime::Boundary(quantity));
    }

    let zero = T::zero();
    match (qc > zero, qh > zero, w > zero) {
        (false, true, false) => Ok(Regime::Engine),
        (true, false, true) => Ok(Regime::Refrigerator),
        (false, true, true) => Ok(Regime::HeaterI),
        (false, false, true) => Ok(Regime::HeaterII),
        _ => Err(OttoError::InconsistentSigns {
            q_cold: qc.as_f64(),
            q_hot: qh.as_f64(),
            w_net: w.as_f64(),
        }),
    }
}

/// Which cycle parameter a scan or sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariedParam {
    R,
    Xi,
}

impl fmt::Display for VariedParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VariedParam::R => "r",
            VariedParam::Xi => "xi",
        })
    }
}

fn substitute<T: Real>(base: &CycleParams<T>, vary: VariedParam, value: T) -> Result<CycleParams<T>> {
    match vary {
        VariedParam::R => base.with_r(value),
        VariedParam::Xi => base.with_xi(value),
    }
}

/// A located regime boundary along a 1-D scan.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPoint<T> {
    /// Value of the varied parameter at the crossing.
    pub value: T,
    /// Quantities that change sign there. Usually one; all three at the
    /// quasi-static (ξ = 0) switching point, where they share a common zero.
    pub vanishing: Vec<Quantity>,
    /// Regime just below the crossing.
    pub below: Regime,
    /// Regime just above the crossing.
    pub above: Regime,
}

/// Locate every zero of Q_c, Q_h and W_net as `vary` runs over
/// `[lo, hi]`. Dense sampling (at least [`MIN_BRACKET_SAMPLES`] points)
/// brackets sign changes, then bisection refines each to `tol` in the
/// parameter. Coincident zeros are merged into one point. An empty or
/// crossing-free interval yields an empty list.
pub fn boundary_scan<T: Real>(
    base: &CycleParams<T>,
    vary: VariedParam,
    lo: T,
    hi: T,
    samples: usize,
    tol: T,
) -> Result<Vec<BoundaryPoint<T>>> {
    if lo >= hi {
        return Ok(Vec::new());
    }
    // validates the interval endpoints against the parameter domain
    substitute(base, vary, lo)?;
    substitute(base, vary, hi)?;

    let n = samples.max(MIN_BRACKET_SAMPLES);
    let energies = |v: T| -> Result<[T; 3]> {
        let out = cycle_energetics(&substitute(base, vary, v)?);
        Ok([out.q_cold, out.q_hot, out.w_net])
    };

    let step = (hi - lo) / T::from_usize(n - 1).unwrap();
    let mut grid = Vec::with_capacity(n);
    for k in 0..n {
        let v = if k == n - 1 { hi } else { lo + step * T::from_usize(k).unwrap() };
        grid.push((v, energies(v)?));
    }

    let quantities = [Quantity::QCold, Quantity::QHot, Quantity::WNet];
    let mut roots: Vec<(T, Quantity)> = Vec::new();
    for (idx, &quantity) in quantities.iter().enumerate() {
        for pair in grid.windows(2) {
            let (a, fa) = (pair[0].0, pair[0].1[idx]);
            let (b, fb) = (pair[1].0, pair[1].1[idx]);
            if fa == T::zero() {
                roots.push((a, quantity));
            } else if fa * fb < T::zero() {
                roots.push((bisect(&energies, idx, a, b, fa, tol)?, quantity));
            }
        }
        if let Some(last) = grid.last() {
            if last.1[idx] == T::zero() {
                roots.push((last.0, quantity));
            }
        }
    }

    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    // merge coincident roots (the xi = 0 collapse makes all three quantities
    // vanish at the same parameter value)
    let merge_tol = tol * T::lit(100.0);
    let mut points: Vec<BoundaryPoint<T>> = Vec::new();
    let mut iter = roots.into_iter().peekable();
    while let Some((value, quantity)) = iter.next() {
        let mut cluster = vec![value];
        let mut vanishing = vec![quantity];
        while let Some(&(next, nq)) = iter.peek() {
            if next - value <= merge_tol {
                cluster.push(next);
                if !vanishing.contains(&nq) {
                    vanishing.push(nq);
                }
                iter.next();
            } else {
                break;
            }
        }
        let mid = cluster.iter().fold(T::zero(), |acc, &v| acc + v)
            / T::from_usize(cluster.len()).unwrap();
        let offset = ((hi - lo) * T::lit(1e-4)).max(merge_tol);
        let eps = T::lit(DEFAULT_EPSILON);
        let below_v = (mid - offset).max(lo);
        let above_v = (mid + offset).min(hi);
        let below = classify(&cycle_energetics(&substitute(base, vary, below_v)?), eps)?;
        let above = classify(&cycle_energetics(&substitute(base, vary, above_v)?), eps)?;
        points.push(BoundaryPoint { value: mid, vanishing, below, above });
    }
    Ok(points)
}

fn bisect<T: Real>(
    energies: &impl Fn(T) -> Result<[T; 3]>,
    idx: usize,
    mut a: T,
    mut b: T,
    mut fa: T,
    tol: T,
) -> Result<T> {
    let half = T::lit(0.5);
    while (b - a).abs() > tol {
        let mid = half * (a + b);
        if mid == a || mid == b {
            break;
        }
        let fm = energies(mid)?[idx];
        if fm == T::zero() {
            return Ok(mid);
        }
        if fa * fm < T::zero() {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(half * (a + b))
}

/// Classify every grid cell; element `(i, j)` of the row-major result is the
/// regime at `(r_values[i], xi_values[j])`.
pub fn regime_map<T: Real>(
    base: &CycleParams<T>,
    r_values: &[T],
    xi_values: &[T],
    epsilon: T,
) -> Result<Vec<Regime>> {
    let mut out = Vec::with_capacity(r_values.len() * xi_values.len());
    for &r in r_values {
        for &xi in xi_values {
            let params = base.with_r(r)?.with_xi(xi)?;
            out.push(classify(&cycle_energetics(&params), epsilon)?);
        }
    }
    Ok(out)
}
