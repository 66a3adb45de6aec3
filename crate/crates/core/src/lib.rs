//! Numerical laboratory for axially symmetric linearized wave maps on
//! Schwarzschild and slowly rotating Kerr backgrounds.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! geometry  ->  wavemap  ->  multipliers  ->  evolve  ->  diagnostics
//! ```
//!
//! * [`geometry`] — closed-form Kerr geometry in horizon-penetrating
//!   coordinates `(theta, r, t_plus, phi_plus)`: metric scalars and
//!   components, the Ernst potential pair `(A, B)`, cutoff functions, and
//!   the wave/divergence operators restricted to axially symmetric data.
//! * [`wavemap`] — the linearized field pair `(phi, psi)`, its kinematic
//!   1-forms, stress tensor, source, multiplier currents and bulk terms.
//! * [`multipliers`] — the four concrete multiplier triplets (trapping,
//!   redshift, outgoing, potential) and grid certification of the
//!   inequalities they must satisfy.
//! * [`evolve`] — method-of-lines RK4 evolution on `(r, theta)` grids with
//!   horizon excision, plus an independent 1+1 mode oracle at `a = 0`.
//! * [`diagnostics`] — conserved energy, outgoing energies, Morawetz bulk
//!   integrals, flux balance and decay-exponent fits.
//! * [`hardy`] — Hardy-type inequalities and modified Sobolev norms as
//!   numerically checkable predicates.

pub mod diagnostics;
pub mod error;
pub mod evolve;
pub mod geometry;
pub mod grid;
pub mod hardy;
pub mod multipliers;
pub mod numeric;
pub mod wavemap;

pub use error::{Error, Result};
