//! Brute-force grid-measure minimization cross-check.
