//! Logarithmic potentials of solved measures and the Frostman verification.
//!
//! On each support component the potential of the minimizer is constant
//! (q.e.), and on the rest of its constraint region it dominates that
//! constant. The residual report samples both facts numerically; it is the
//! certificate that a solve actually produced the minimizer.

use super::{CaseTag, Domain, EquilibriumMeasure};
use crate::numerics::{log_kernel_integral, log_kernel_integral_plane};
use crate::{Error, Result};
use serde::Serialize;

const POTENTIAL_TOL: f64 = 1e-11;
const GAP_SCAN_POINTS: usize = 100;

/// Frostman constants and residuals of a solved measure.
#[derive(Debug, Clone, Serialize)]
pub struct FrostmanReport {
    /// Potential constant on the unconstrained side ([−1, β] or A_θᶜ).
    pub f1: f64,
    /// Potential constant on the constrained side ([β, 1] or A_θ).
    pub f2: f64,
    /// Max deviation of the potential from the component mean, per component.
    pub component_deviation: Vec<f64>,
    /// Largest entry of `component_deviation`.
    pub max_deviation: f64,
    /// min over the gap of U − F (inequality slack); `None` when degenerate.
    pub gap_slack: Option<f64>,
}

/// U(z) for an interval measure at a real point z.
pub(super) fn interval_potential(mu: &EquilibriumMeasure, z: f64) -> Result<f64> {
    debug_assert!(!mu.is_circle());
    let mut u = 0.0;
    for (i, comp) in mu.support().iter().enumerate() {
        u -= log_kernel_integral(
            comp.left,
            comp.right,
            comp.exponent_left,
            comp.exponent_right,
            &|x| mu.smooth_part(i, x),
            z,
            POTENTIAL_TOL,
        )?;
    }
    Ok(u)
}

pub(super) fn interval_potential_plane(mu: &EquilibriumMeasure, re: f64, im: f64) -> Result<f64> {
    let mut u = 0.0;
    for (i, comp) in mu.support().iter().enumerate() {
        u -= log_kernel_integral_plane(
            comp.left,
            comp.right,
            comp.exponent_left,
            comp.exponent_right,
            &|x| mu.smooth_part(i, x),
            re,
            im,
            POTENTIAL_TOL,
        )?;
    }
    Ok(u)
}

pub(super) fn frostman_residuals(
    mu: &EquilibriumMeasure,
    samples_per_component: usize,
) -> Result<FrostmanReport> {
    if samples_per_component < 2 {
        return Err(Error::Domain(
            "need at least two samples per component".into(),
        ));
    }
    let mut means = Vec::with_capacity(mu.support().len());
    let mut deviations = Vec::with_capacity(mu.support().len());
    for comp in mu.support() {
        let mut values = Vec::with_capacity(samples_per_component);
        for k in 1..=samples_per_component {
            let x = comp.left
                + (comp.right - comp.left) * k as f64 / (samples_per_component as f64 + 1.0);
            values.push(mu.potential(x)?);
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let dev = values
            .iter()
            .map(|v| (v - mean).abs())
            .fold(0.0f64, f64::max);
        means.push(mean);
        deviations.push(dev);
    }

    let (f1, f2) = match (&mu.domain(), mu.case()) {
        (_, CaseTag::Degenerate) => (means[0], means[0]),
        (Domain::Interval(_), _) => (means[0], means[1]),
        // Circle component 0 is the constrained side; 1 and 2 are its mirror
        // complement pieces.
        (Domain::Circle { .. }, _) => ((means[1] + means[2]) / 2.0, means[0]),
    };

    let gap_slack = gap_scan(mu, f1, f2)?;
    let max_deviation = deviations.iter().copied().fold(0.0f64, f64::max);
    Ok(FrostmanReport {
        f1,
        f2,
        component_deviation: deviations,
        max_deviation,
        gap_slack,
    })
}

/// Scans the gap between the support components; the potential must dominate
/// the Frostman constant of the constraint region the gap belongs to.
fn gap_scan(mu: &EquilibriumMeasure, f1: f64, f2: f64) -> Result<Option<f64>> {
    let (lo, hi, level) = match (mu.domain(), mu.case()) {
        (_, CaseTag::Degenerate) => return Ok(None),
        (Domain::Interval(c), CaseTag::CaseI) => (mu.alpha(), c.beta, f1),
        (Domain::Interval(c), CaseTag::CaseII) => (c.beta, mu.alpha(), f2),
        (Domain::Circle { constraint, .. }, CaseTag::CaseI) => {
            (constraint.theta / 2.0, mu.alpha().acos(), f1)
        }
        (Domain::Circle { constraint, .. }, CaseTag::CaseII) => {
            (mu.alpha().acos(), constraint.theta / 2.0, f2)
        }
    };
    let mut slack = f64::INFINITY;
    for k in 1..=GAP_SCAN_POINTS {
        let z = lo + (hi - lo) * k as f64 / (GAP_SCAN_POINTS as f64 + 1.0);
        slack = slack.min(mu.potential(z)? - level);
    }
    Ok(Some(slack))
}
