//! Brute-force cross-checks for the closed formulas: Hilbert-function
//! sweeps of saturated powers, local-cohomology lengths, elimination for the
//! image of the rational map, and a random-fiber count.

mod differences;
mod fiber;
mod image;

pub use differences::{difference_table, infer, Inferred};
pub use fiber::{j_mult_sample, saturated_fiber_sample, JMultSample, SaturatedFiberSample};
pub use image::{
    fiber_image_inequality, generic_fiber_degree, image_ideal, map_degree_report, GenericFiberEstimate,
    InequalityRow, RationalMapReport,
};
