//! First syzygies, the Hilbert–Burch matrix, Fitting ideals and the
//! `G_{r+1}` check.

mod gcond;
mod hilbert_burch;
mod minors;
mod module_gb;
mod syzygy;

pub use gcond::{g_condition, GCondReport, GCondRow};
pub use hilbert_burch::{hilbert_burch, HilbertBurchData};
pub use minors::{minors, PolyMatrix};
pub use module_gb::{module_buchberger, module_groebner_basis, ModuleGroebnerBasis};
pub use syzygy::{common_degree, syzygy_matrix, SyzygyMatrix};
