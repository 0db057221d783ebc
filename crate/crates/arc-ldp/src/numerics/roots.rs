//! Bracketing root solve for monotone functions.

use crate::{Error, Result};

/// Finds the root of a continuous, weakly monotone `g` on `[lo, hi]`.
///
/// Requires `g(lo)·g(hi) ≤ 0`; plain bisection guarantees termination at
/// bracket width ≤ `tol` (or earlier on an exact zero).
pub fn find_root_monotone<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::Domain(format!("bad bracket [{lo}, {hi}]")));
    }
    let g_lo = g(lo);
    let g_hi = g(hi);
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::Bracket { g_lo, g_hi });
    }
    let increasing = g_hi > 0.0;
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // hit floating-point resolution
        }
        let gm = g(mid);
        if gm == 0.0 {
            return Ok(mid);
        }
        if (gm > 0.0) == increasing {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(0.5 * (a + b))
}
