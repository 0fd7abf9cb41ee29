//! Hilbert–Burch syzygies, saturated special fiber multiplicities,
//! j-multiplicities and degrees of rational maps defined by perfect
//! height-two ideals.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`] and [`poly`]: exact coefficients and sparse polynomials.
//! * [`groebner`]: Buchberger's algorithm and ideal operations
//!   (intersection, quotient, saturation, elimination, Hilbert series).
//! * [`resolution`]: syzygies, the Hilbert–Burch matrix, Fitting ideals and
//!   the `G_{r+1}` check.
//! * [`multiplicity`]: the closed formulas in the syzygy degrees.
//! * [`oracles`]: brute-force cross-checks of those formulas.

pub mod error;
pub mod field;
pub mod groebner;
pub mod multiplicity;
pub mod oracles;
pub mod poly;
pub mod resolution;

pub use error::{AlgebraError, Result};
pub use field::{Field, FieldKind, PrimeField, RationalField};
pub use groebner::{GroebnerBasis, HilbertSeries, Ideal};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring, RingHandle};
