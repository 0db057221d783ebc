//! Log-singular single integrals.
//!
//! Potentials of equilibrium measures need ∫ log|z−x| against densities with
//! known algebraic endpoint factors. The integral is split at the singular
//! point; on each side the substitution u = (distance)² and the subtraction
//! of log|z−x| against the local density value leave a smooth integrand for
//! a Gauss–Jacobi rule, while the subtracted term has a Beta-function closed
//! form.

use super::quadrature::convergent_singular;
use crate::{Error, Result};
use statrs::function::gamma::{digamma, ln_gamma};

/// Closed form of ∫_0^L ln(u)·u^p·(L−u)^q du for p, q > −1.
///
/// Equals L^{p+q+1}·B(p+1, q+1)·(ln L + ψ(p+1) − ψ(p+q+2)).
pub fn log_weight_moment(len: f64, p: f64, q: f64) -> f64 {
    let beta = (ln_gamma(p + 1.0) + ln_gamma(q + 1.0) - ln_gamma(p + q + 2.0)).exp();
    len.powf(p + q + 1.0) * beta * (len.ln() + digamma(p + 1.0) - digamma(p + q + 2.0))
}

const ENDPOINT_SNAP: f64 = 1e-13;

/// ∫_a^b ln|z−x|·s(x)·(x−a)^{e_l}·(b−x)^{e_r} dx with s smooth on [a, b].
///
/// `z` may lie inside the interval, at an endpoint, or outside; the log
/// singularity is handled accordingly.
pub fn log_kernel_integral(
    a: f64,
    b: f64,
    e_l: f64,
    e_r: f64,
    s: &dyn Fn(f64) -> f64,
    z: f64,
    tol: f64,
) -> Result<f64> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    let len = b - a;
    if (z - a).abs() <= ENDPOINT_SNAP * len {
        return endpoint_case(a, b, e_l, e_r, s, true, tol);
    }
    if (z - b).abs() <= ENDPOINT_SNAP * len {
        return endpoint_case(a, b, e_l, e_r, s, false, tol);
    }
    if z < a || z > b {
        return convergent_singular(|x| (z - x).abs().ln() * s(x), a, b, e_l, e_r, tol, 16);
    }

    // Interior: split at z.
    // Left piece ∫_a^z ln(z−x)·ρ(x) dx with g(x) = s(x)(b−x)^{e_r} smooth there.
    let g_left = |x: f64| s(x) * (b - x).powf(e_r);
    let gl_z = g_left(z);
    let t_l = (z - a).sqrt();
    let sub_l = convergent_singular(
        |t: f64| 4.0 * t * t.ln() * (g_left(z - t * t) - gl_z) * (t_l + t).powf(e_l),
        0.0,
        t_l,
        0.0,
        e_l,
        tol,
        16,
    )?;
    let left = sub_l + gl_z * log_weight_moment(z - a, 0.0, e_l);

    // Right piece ∫_z^b ln(x−z)·ρ(x) dx with g(x) = s(x)(x−a)^{e_l}.
    let g_right = |x: f64| s(x) * (x - a).powf(e_l);
    let gr_z = g_right(z);
    let t_r = (b - z).sqrt();
    let sub_r = convergent_singular(
        |t: f64| 4.0 * t * t.ln() * (g_right(z + t * t) - gr_z) * (t_r + t).powf(e_r),
        0.0,
        t_r,
        0.0,
        e_r,
        tol,
        16,
    )?;
    let right = sub_r + gr_z * log_weight_moment(b - z, 0.0, e_r);

    Ok(left + right)
}

/// z coincides with the endpoint where the log and algebraic factors meet.
fn endpoint_case(
    a: f64,
    b: f64,
    e_l: f64,
    e_r: f64,
    s: &dyn Fn(f64) -> f64,
    at_left: bool,
    tol: f64,
) -> Result<f64> {
    let len = b - a;
    let t_max = len.sqrt();
    if at_left {
        let s_a = s(a);
        let sub = convergent_singular(
            |t: f64| {
                4.0 * t.powf(1.0 + 2.0 * e_l) * t.ln() * (s(a + t * t) - s_a) * (t_max + t).powf(e_r)
            },
            0.0,
            t_max,
            0.0,
            e_r,
            tol,
            16,
        )?;
        Ok(sub + s_a * log_weight_moment(len, e_l, e_r))
    } else {
        let s_b = s(b);
        let sub = convergent_singular(
            |t: f64| {
                4.0 * t.powf(1.0 + 2.0 * e_r) * t.ln() * (s(b - t * t) - s_b) * (t_max + t).powf(e_l)
            },
            0.0,
            t_max,
            0.0,
            e_l,
            tol,
            16,
        )?;
        Ok(sub + s_b * log_weight_moment(len, e_r, e_l))
    }
}

/// Same integral for a point z = re + i·im off the real axis.
pub fn log_kernel_integral_plane(
    a: f64,
    b: f64,
    e_l: f64,
    e_r: f64,
    s: &dyn Fn(f64) -> f64,
    re: f64,
    im: f64,
    tol: f64,
) -> Result<f64> {
    if im == 0.0 {
        return log_kernel_integral(a, b, e_l, e_r, s, re, tol);
    }
    convergent_singular(
        |x: f64| 0.5 * ((re - x) * (re - x) + im * im).ln() * s(x),
        a,
        b,
        e_l,
        e_r,
        tol,
        16,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn log_moment_closed_forms() {
        // e = 0: L(ln L - 1)
        for &l in &[0.25, 1.0, 3.0] {
            assert_abs_diff_eq!(
                log_weight_moment(l, 0.0, 0.0),
                l * (l.ln() - 1.0),
                epsilon = 1e-14
            );
        }
        // e = -1/2: 2 sqrt(L) (ln(4L) - 2)
        let l = 0.7f64;
        assert_abs_diff_eq!(
            log_weight_moment(l, 0.0, -0.5),
            2.0 * l.sqrt() * ((4.0 * l).ln() - 2.0),
            epsilon = 1e-14
        );
        // e = +1/2: (2/3) L^{3/2} (ln(4L) - 8/3)
        assert_abs_diff_eq!(
            log_weight_moment(l, 0.0, 0.5),
            2.0 / 3.0 * l.powf(1.5) * ((4.0 * l).ln() - 8.0 / 3.0),
            epsilon = 1e-14
        );
    }

    #[test]
    fn arcsine_potential_is_log_two_at_zero() {
        // -(1/pi) ∫ ln|x| (1-x^2)^{-1/2} dx = ln 2 at the interior point 0.
        let s = |_: f64| 1.0 / PI;
        let v = log_kernel_integral(-1.0, 1.0, -0.5, -0.5, &s, 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(-v, LN_2, epsilon = 1e-11);
    }

    #[test]
    fn arcsine_potential_at_endpoint_and_outside() {
        let s = |_: f64| 1.0 / PI;
        // Constant on the whole support, including the endpoint itself.
        let v = log_kernel_integral(-1.0, 1.0, -0.5, -0.5, &s, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(-v, LN_2, epsilon = 1e-11);
        // Outside: U(x) = ln 2 - ln(|x| + sqrt(x^2-1)) for |x| > 1.
        let x = 1.75f64;
        let v = log_kernel_integral(-1.0, 1.0, -0.5, -0.5, &s, x, 1e-12).unwrap();
        assert_abs_diff_eq!(-v, LN_2 - (x + (x * x - 1.0).sqrt()).ln(), epsilon = 1e-11);
    }

    #[test]
    fn plane_variant_matches_known_value() {
        // U at i: -(1/2pi)∫ ln(x^2+1)/sqrt(1-x^2) dx = ln 2 - (1/2)ln(1+sqrt 2)...
        // use the classical value U(i) = ln 2 - ln(1 + sqrt(2))/1 via
        // U(z) = ln 2 - ln|z + sqrt(z^2-1)|, z = i: |i + i sqrt 2| = 1+sqrt 2.
        let s = |_: f64| 1.0 / PI;
        let v = log_kernel_integral_plane(-1.0, 1.0, -0.5, -0.5, &s, 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(-v, LN_2 - (1.0 + 2f64.sqrt()).ln(), epsilon = 1e-11);
    }
}
