//! Charge-1 magnetic monopole on hyperbolic 3-space: exact fields and the
//! integral invariants of its moduli space.
//!
//! Everything lives on the upper half-space model
//! `{(x, y, ρ) : ρ > 0}` with metric `g = ρ⁻²(dρ² + dx² + dy²)` and volume
//! form `Vol = −ρ⁻³ dρ∧dx∧dy` (the sign makes the Clifford image of `Vol`
//! the identity in the spin conventions of [`algebra`]).
//!
//! The layers, bottom to top:
//!
//! * [`algebra`] — complex 2×2 matrices, Pauli generators, spinors, the
//!   symplectic pairing, and the Clifford isomorphism between
//!   (1-form, 0-form) pairs and spin endomorphisms.
//! * [`geometry`] — points, finite-difference schemes, the six Killing
//!   fields of the half-space model and their complex combinations, the
//!   Hodge star, the spin connection, and gauge-covariant derivatives.
//! * [`monopole`] — the explicit charge-1 field configuration (connection,
//!   Higgs field, curvature, all closed-form), its energy density, and the
//!   one-parameter gauge orbit generated by the Higgs field.
//! * [`deformations`] — Killing spinors, curvature eigenspinors, the four
//!   symmetry tangent vectors, gauge-fixing and linearised-equation
//!   residuals, the framed rotation generators, and the complex structure J.
//! * [`integrate`] — deterministic Gauss–Legendre quadrature over the
//!   half-space, the energy / pairing / Gram-matrix integrals, the
//!   Chern–Simons functional with its boundary term, and the equivariant
//!   index polynomial.
//! * [`verify`] — seeded residual and identity suites used by the CLI.
//!
//! Numerical layout is deterministic by construction: quadrature sums run
//! in a fixed node order and parallel workers only split independent
//! slices, so results are bitwise identical for any worker count.

pub mod algebra;
pub mod deformations;
pub mod geometry;
pub mod integrate;
pub mod monopole;
pub mod verify;
