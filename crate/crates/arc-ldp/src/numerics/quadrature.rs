//! Gauss–Jacobi rules via Golub–Welsch.
//!
//! A rule of size `m` integrates `f(x)·(1+x)^{e_l}·(1−x)^{e_r}` exactly for
//! polynomials `f` of degree ≤ 2m−1. Nodes and weights come from the
//! symmetric tridiagonal Jacobi matrix of the orthogonal-polynomial
//! recurrence; weights are `μ₀` times the squared first eigenvector
//! components (Golub–Welsch).

use crate::{Error, Result};
use nalgebra::DMatrix;
use statrs::function::gamma::ln_gamma;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Relative tolerance used by the self-refining quadrature driver.
pub const CONVERGENCE_TOL: f64 = 1e-12;

/// Nodes and weights on the reference interval (−1, 1) for the weight
/// `(1+x)^{exponent_left}·(1−x)^{exponent_right}`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exponent_left: f64,
    exponent_right: f64,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn exponent_left(&self) -> f64 {
        self.exponent_left
    }

    pub fn exponent_right(&self) -> f64 {
        self.exponent_right
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// ∫_a^b f(y)·(y−a)^{e_l}·(b−y)^{e_r} dy by mapping the rule onto [a, b].
    pub fn integrate_mapped<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let scale = half.powf(1.0 + self.exponent_left + self.exponent_right);
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        scale * sum
    }
}

/// Builds the m-point Gauss–Jacobi rule for exponents > −1.
///
/// Jacobi convention: the classical parameters are α = `exponent_right`
/// (power of 1−x) and β = `exponent_left` (power of 1+x).
pub fn gauss_nodes(m: usize, exponent_left: f64, exponent_right: f64) -> Result<QuadratureRule> {
    if m < 1 {
        return Err(Error::Domain("quadrature size m must be >= 1".into()));
    }
    if exponent_left <= -1.0 || exponent_right <= -1.0 {
        return Err(Error::Domain(format!(
            "exponents must exceed -1, got ({exponent_left}, {exponent_right})"
        )));
    }
    let (alpha, beta) = (exponent_right, exponent_left);
    let mu0 = (2f64).powf(alpha + beta + 1.0)
        * (ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0) - ln_gamma(alpha + beta + 2.0)).exp();

    if m == 1 {
        return Ok(QuadratureRule {
            nodes: vec![(beta - alpha) / (alpha + beta + 2.0)],
            weights: vec![mu0],
            exponent_left,
            exponent_right,
        });
    }

    // Recurrence coefficients for monic Jacobi polynomials (Gautschi).
    let mut diag = vec![0.0; m];
    let mut off = vec![0.0; m - 1];
    diag[0] = (beta - alpha) / (alpha + beta + 2.0);
    for (k, d) in diag.iter_mut().enumerate().skip(1) {
        let kk = k as f64;
        let s = 2.0 * kk + alpha + beta;
        *d = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    off[0] = (4.0 * (alpha + 1.0) * (beta + 1.0)
        / ((alpha + beta + 2.0).powi(2) * (alpha + beta + 3.0)))
        .sqrt();
    for (k, o) in off.iter_mut().enumerate().skip(1) {
        let kk = (k + 1) as f64;
        let s = 2.0 * kk + alpha + beta;
        *o = (4.0 * kk * (kk + alpha) * (kk + beta) * (kk + alpha + beta)
            / (s * s * (s + 1.0) * (s - 1.0)))
            .sqrt();
    }

    let mut jac = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        jac[(i, i)] = diag[i];
        if i + 1 < m {
            jac[(i, i + 1)] = off[i];
            jac[(i + 1, i)] = off[i];
        }
    }
    let eig = jac.symmetric_eigen();
    let mut pairs: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    if pairs.iter().any(|p| !p.0.is_finite() || !p.1.is_finite()) {
        return Err(Error::NodeSolve { m });
    }
    // The eigensolver can push an extreme node marginally past ±1.
    let nodes = pairs.iter().map(|p| p.0.clamp(-1.0, 1.0)).collect();
    Ok(QuadratureRule {
        nodes,
        weights: pairs.iter().map(|p| p.1).collect(),
        exponent_left,
        exponent_right,
    })
}

fn rule_cache() -> &'static Mutex<HashMap<(usize, u64, u64), Arc<QuadratureRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64, u64), Arc<QuadratureRule>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn cached_rule(m: usize, e_l: f64, e_r: f64) -> Result<Arc<QuadratureRule>> {
    let key = (m, e_l.to_bits(), e_r.to_bits());
    if let Some(r) = rule_cache().lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let rule = Arc::new(gauss_nodes(m, e_l, e_r)?);
    rule_cache().lock().unwrap().insert(key, rule.clone());
    Ok(rule)
}

/// Fixed-size approximation of ∫_a^b f(x)·(x−a)^{e_l}·(b−x)^{e_r} dx.
///
/// Deterministic for fixed `m`; the endpoint factors are absorbed by the
/// rule, so `f` only needs to be smooth on the open interval.
pub fn integrate_singular<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    exponent_left: f64,
    exponent_right: f64,
    m: usize,
) -> Result<f64> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    let rule = cached_rule(m, exponent_left, exponent_right)?;
    Ok(rule.integrate_mapped(a, b, f))
}

/// Doubles the rule size until two consecutive refinements agree.
///
/// Starts at `m0` nodes and stops when the change is below
/// `tol·max(1, |value|)`; errors out if 1024 nodes are not enough.
pub fn convergent_singular<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    exponent_left: f64,
    exponent_right: f64,
    tol: f64,
    m0: usize,
) -> Result<f64> {
    let mut m = m0.max(8);
    let mut prev = integrate_singular(&f, a, b, exponent_left, exponent_right, m)?;
    while m <= 1024 {
        m *= 2;
        let cur = integrate_singular(&f, a, b, exponent_left, exponent_right, m)?;
        if (cur - prev).abs() <= tol * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "no convergence on [{a}, {b}] with exponents ({exponent_left}, {exponent_right})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn midpoint_rule_on_reference_interval() {
        let r = gauss_nodes(1, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(r.nodes()[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights()[0], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn two_point_legendre_nodes() {
        let r = gauss_nodes(2, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(r.nodes()[0], -0.5773502691896258, epsilon = 1e-14);
        assert_abs_diff_eq!(r.nodes()[1], 0.5773502691896258, epsilon = 1e-14);
    }

    #[test]
    fn chebyshev_total_weight_is_pi() {
        let r = gauss_nodes(1, -0.5, -0.5).unwrap();
        assert_abs_diff_eq!(r.weights().iter().sum::<f64>(), PI, epsilon = 1e-14);
        let r8 = gauss_nodes(8, -0.5, -0.5).unwrap();
        assert_abs_diff_eq!(r8.weights().iter().sum::<f64>(), PI, epsilon = 1e-13);
    }

    #[test]
    fn monomial_exactness_to_design_degree() {
        // A rule of size m and one of size m+6 must agree on monomials of
        // degree <= 2m-1; for the Legendre weight the even moments are
        // 2/(k+1) in closed form.
        for &(el, er) in &[(0.0, 0.0), (-0.5, -0.5), (0.5, -0.5), (-0.5, 0.5)] {
            for m in 1..=6usize {
                let r = gauss_nodes(m, el, er).unwrap();
                let big = gauss_nodes(m + 6, el, er).unwrap();
                for k in 0..=(2 * m - 1) {
                    let f = |x: f64| x.powi(k as i32);
                    let got = r.integrate_mapped(-1.0, 1.0, f);
                    let want = big.integrate_mapped(-1.0, 1.0, f);
                    assert_abs_diff_eq!(got, want, epsilon = 1e-12);
                }
            }
        }
        let r = gauss_nodes(5, 0.0, 0.0).unwrap();
        for k in 0..=4 {
            let got = r.integrate_mapped(-1.0, 1.0, |x| x.powi(2 * k));
            assert_abs_diff_eq!(got, 2.0 / (2.0 * k as f64 + 1.0), epsilon = 1e-12);
        }
    }

    #[test]
    fn nodes_interior_and_weights_positive() {
        for &(el, er) in &[(-0.5, 0.5), (0.5, 0.5), (-0.9, 2.0)] {
            let r = gauss_nodes(32, el, er).unwrap();
            for w in r.weights() {
                assert!(*w > 0.0);
            }
            for pair in r.nodes().windows(2) {
                assert!(pair[0] < pair[1]);
            }
            assert!(r.nodes()[0] > -1.0 && r.nodes()[31] < 1.0);
        }
    }

    #[test]
    fn arcsine_mass_examples() {
        // ∫_{-1}^{1} (1-x^2)^{-1/2} dx = pi
        let v = integrate_singular(|_| 1.0, -1.0, 1.0, -0.5, -0.5, 16).unwrap();
        assert_abs_diff_eq!(v, PI, epsilon = 1e-13);
        // arcsine mass of [-1, 0]: (1-x)^{-1/2} folded into the smooth part
        let v = integrate_singular(
            |x: f64| 1.0 / (PI * (1.0 - x).sqrt()),
            -1.0,
            0.0,
            -0.5,
            0.0,
            64,
        )
        .unwrap();
        assert_abs_diff_eq!(v, 0.5, epsilon = 1e-10);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(gauss_nodes(0, 0.0, 0.0).is_err());
        assert!(gauss_nodes(4, -1.0, 0.0).is_err());
        assert!(integrate_singular(|_| 1.0, 1.0, -1.0, 0.0, 0.0, 4).is_err());
    }

    #[test]
    fn density_piece_against_midpoint_oracle() {
        // |x - alpha|^{1/2}-type piece for beta = 0, alpha = -0.5: the
        // independent oracle is an adaptive composite midpoint rule under the
        // substitution x = a + t^2, refined until halvings agree to 1e-10.
        let beta = 0.0;
        let alpha = -0.5f64;
        let f = |x: f64| 1.0 / (PI * ((beta - x) * (1.0 - x)).sqrt());
        let got = convergent_singular(f, -1.0, alpha, -0.5, 0.5, 1e-12, 16).unwrap();

        let integrand = |x: f64| {
            (alpha - x).max(0.0).sqrt() / (PI * ((x + 1.0) * (beta - x) * (1.0 - x)).sqrt())
        };
        let oracle = crate::numerics::tests_support::adaptive_midpoint_sqrt_left(
            integrand, -1.0, alpha, 1e-10,
        );
        assert_abs_diff_eq!(got, oracle, epsilon = 1e-9);
    }
}
