//! Working-precision selection for the extended-precision eigensolves.

use serde::{Deserialize, Serialize};

/// Maps (matrix size, smallest eigenvalue scale) to mantissa bits.
///
/// Eigenvalues as small as e^{−x_max·n} need about x_max·n/ln 2 bits of
/// headroom below unit scale; the 1.6 factor and the additive guard absorb
/// accumulation error in the tridiagonalization and the Sturm recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub base_bits: u32,
    pub guard_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            base_bits: 128,
            guard_bits: 64,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(base_bits: u32, guard_bits: u32) -> Self {
        PrecisionPolicy {
            base_bits: base_bits.max(64),
            guard_bits,
        }
    }

    /// bits(n, x_max) = max(base, ceil(1.6·n·x_max/ln 2) + guard).
    pub fn bits(&self, n: usize, x_max: f64) -> u32 {
        let x = x_max.max(0.0);
        let need = (1.6 * n as f64 * x / std::f64::consts::LN_2).ceil() as u32;
        (need + self.guard_bits).max(self.base_bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_matches_documented_rule() {
        let p = PrecisionPolicy::default();
        assert_eq!(p.bits(4, 0.5), 128);
        // 1.6*64*3/ln2 = 443.1 -> 444 + 64
        assert_eq!(p.bits(64, 3.0), 508);
    }

    proptest! {
        #[test]
        fn at_least_base_and_monotone(n1 in 1usize..256, n2 in 1usize..256,
                                      x1 in 0.0f64..8.0, x2 in 0.0f64..8.0) {
            let p = PrecisionPolicy::default();
            prop_assert!(p.bits(n1, x1) >= p.base_bits);
            let (nlo, nhi) = (n1.min(n2), n1.max(n2));
            let (xlo, xhi) = (x1.min(x2), x1.max(x2));
            prop_assert!(p.bits(nlo, xlo) <= p.bits(nhi, xlo));
            prop_assert!(p.bits(nlo, xlo) <= p.bits(nlo, xhi));
        }
    }
}
