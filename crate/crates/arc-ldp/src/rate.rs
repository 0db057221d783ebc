//! Rate function J(q), Fenchel–Legendre transform, and the threshold c0.
