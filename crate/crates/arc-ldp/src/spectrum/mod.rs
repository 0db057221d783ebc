//! Prolate Toeplitz matrix and extended-precision eigensolves.
