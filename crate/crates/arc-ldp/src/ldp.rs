//! Scaled log-MGF, window averages of the counting function, verification.
