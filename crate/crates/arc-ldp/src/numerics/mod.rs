//! Shared numerical kernels: Gauss–Jacobi quadrature for endpoint-singular
//! integrands, log-singular integrals with closed-form subtraction terms,
//! monotone root finding, and the extended-precision policy.

mod logint;
mod precision;
mod quadrature;
mod roots;

pub use logint::{log_kernel_integral, log_kernel_integral_plane, log_weight_moment};
pub use precision::PrecisionPolicy;
pub use quadrature::{
    convergent_singular, gauss_nodes, integrate_singular, QuadratureRule, CONVERGENCE_TOL,
};
pub use roots::find_root_monotone;

/// Default bracket-width tolerance for root solves; downstream J(q) targets 1e-8.
pub const ROOT_TOL: f64 = 1e-12;

#[cfg(test)]
pub(crate) mod tests_support {
    /// Independent quadrature oracle: composite midpoint in t after the
    /// substitution x = a + t², doubled until two refinements agree to `tol`.
    pub fn adaptive_midpoint_sqrt_left<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
        let tmax = (b - a).sqrt();
        let eval = |n: usize| {
            let h = tmax / n as f64;
            let mut s = 0.0;
            for i in 0..n {
                let t = (i as f64 + 0.5) * h;
                s += 2.0 * t * f(a + t * t);
            }
            s * h
        };
        let mut n = 64;
        let mut prev = eval(n);
        loop {
            n *= 2;
            let cur = eval(n);
            if (cur - prev).abs() < tol || n > 1 << 22 {
                return cur;
            }
            prev = cur;
        }
    }
}
