//! # kequiv
//!
//! An exact-arithmetic workbench for comparing invariants across
//! K-equivalent birational pairs. The crate constructs explicit witnesses —
//! toric flop twins and blow-up configurations — and mechanically verifies,
//! with zero numerical tolerance:
//!
//! * complex elliptic genera and their Hirzebruch functional equations,
//! * change-of-variable identities under blow-ups (Jacobian factors and
//!   residue formulas),
//! * Grothendieck-ring identities and stringy E-functions,
//! * finite-field point counts, zeta functions, and truncated jet spaces.
//!
//! All computation is exact: arbitrary-precision rationals, truncated formal
//! series, and canonical fractions. There is no floating point anywhere.

pub mod arcs;
pub mod chow;
pub mod docs;
pub mod exactalg;
pub mod fq;
pub mod genera;
pub(crate) mod linalg;
pub mod motive;
pub mod toric;
pub mod zeta;

pub use exactalg::{Coeff, CoeffOps, CoeffRing, ExactAlgError, Mono, RatRing, Series, SeriesRing, UniPoly};
