//! Constrained logarithmic-energy equilibrium measures and the counting
//! statistics of the unitary eigenvalue process on an arc.
//!
//! The toolkit has three layers:
//!
//! * [`equilibrium`] solves the constrained minimization of the logarithmic
//!   energy `I(μ) = ∬ log 1/|z−ζ| dμ dμ` over probability measures on
//!   `[−1, 1]` (with `μ([β, 1]) = q` pinned) and on the unit circle (with the
//!   arc mass `ν(A_θ) = q` pinned), producing the free boundary `α`, the
//!   explicit densities, potentials, and Frostman residuals.
//! * [`rate`] turns solved measures into the large-deviation rate function
//!   `J(q)` of the arc counting variable `N_θ/n`, its Fenchel–Legendre
//!   transform `Λ(λ) = sup_y {λy − J(y)}`, and the saturation threshold `c₀`.
//! * [`spectrum`] and [`ldp`] work on the finite-`n` side: the symmetric
//!   Toeplitz matrix carrying the eigenvalues `p_j` of the arc-restricted
//!   sine kernel, resolved in extended precision down to exponentially small
//!   scales, the counting function `|G(x, n)| = #{j : p_j > C e^{−xn}}`, the
//!   scaled log-MGF, and the window-average identity tying `|G|` to `Λ`.
//!
//! [`oracle`] provides an independent brute-force check: projected-gradient
//! minimization of the discretized energy over grid measures.
//!
//! Most capabilities have a runnable demo under `examples/`; the `arc-ldp`
//! binary exposes the same operations as subcommands with CSV/JSON output
//! and a results cache.

pub mod angle;
pub mod cli;
pub mod equilibrium;
pub mod ldp;
pub mod numerics;
pub mod oracle;
pub mod rate;
pub mod spectrum;

mod error;

pub use angle::Angle;
pub use error::{Error, Result};
