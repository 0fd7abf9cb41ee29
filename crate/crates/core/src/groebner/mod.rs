//! Gröbner bases and the ideal-theoretic toolkit built on them.

mod basis;
pub(crate) mod engine;
mod hilbert;
mod ideal;
mod module;

pub use basis::{buchberger, GroebnerBasis};
pub use hilbert::{binomial, monomial_numerator, HilbertSeries};
pub(crate) use hilbert::{divide_one_minus_t, poly_sub};
pub use ideal::{DimensionHeight, Ideal, IdealOp};
pub use module::FreeModuleElement;
