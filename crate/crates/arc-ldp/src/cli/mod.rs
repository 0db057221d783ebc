//! Command-line front end, output emission, and the results cache.

/// Placeholder during bring-up.
pub fn run() -> i32 { 0 }
