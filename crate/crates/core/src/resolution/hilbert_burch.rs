use rayon::prelude::*;

use super::syzygy::{common_degree, syzygy_matrix, SyzygyMatrix};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::Polynomial;

/// Hilbert–Burch data of a perfect height-two ideal `I = (f_0, ..., f_s)`
/// generated in one degree `d` in `k[x_0, ..., x_r]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertBurchData<F: Field> {
    /// Projective dimension of the source: the ring has `r + 1` variables.
    pub r: usize,
    /// Number of syzygies, i.e. columns of `phi`.
    pub s: usize,
    /// Common generator degree.
    pub d: u32,
    /// Column degrees `mu_1 <= ... <= mu_s`.
    pub mu: Vec<u32>,
    pub phi: SyzygyMatrix<F>,
    /// Scalar with `f_i = lambda * (-1)^i * det(phi without row i)`.
    pub lambda: F::Elem,
    pub generators: Vec<Polynomial<F>>,
}

/// Checks that `I` is perfect of height two with `s >= r`, and returns its
/// Hilbert–Burch matrix.
///
/// Perfection is certified by the minor identity: together with height two
/// it forces the resolution `0 -> R^s -> R^{s+1} -> I -> 0` given by `phi`.
pub fn hilbert_burch<F: Field>(ideal: &Ideal<F>) -> Result<HilbertBurchData<F>> {
    let f = ideal.gens().to_vec();
    let d = common_degree(&f)?;
    let r = ideal.ring().nvars() - 1;

    let height = ideal.height_or_infinite()?;
    if height != 2 {
        return Err(AlgebraError::NotHeightTwo { height });
    }

    let phi = syzygy_matrix(&f)?;
    let s = phi.ncols();
    if s + 1 != f.len() {
        return Err(AlgebraError::MinorMismatch { row: 0 });
    }
    let field = ideal.ring().field().clone();
    let minors: Vec<Polynomial<F>> = (0..=s)
        .into_par_iter()
        .map(|i| {
            let m = phi.matrix().minor_without_row(i);
            if i % 2 == 1 {
                -&m
            } else {
                m
            }
        })
        .collect();

    let anchor = (0..=s).find(|&i| !minors[i].is_zero()).ok_or(AlgebraError::MinorMismatch { row: 0 })?;
    let lambda = field
        .div(
            f[anchor].leading_coeff().expect("generators are nonzero"),
            minors[anchor].leading_coeff().unwrap(),
        )
        .unwrap();
    for (i, (fi, mi)) in f.iter().zip(&minors).enumerate() {
        if *fi != mi.scale(&lambda) {
            return Err(AlgebraError::MinorMismatch { row: i });
        }
    }

    if s < r {
        return Err(AlgebraError::TooFewSyzygies { r, s });
    }
    let mu = phi.column_degrees().to_vec();
    let sum: u64 = mu.iter().map(|&m| m as u64).sum();
    if sum != d as u64 {
        return Err(AlgebraError::DegreeMismatch { d: d as u64, sum });
    }
    Ok(HilbertBurchData {
        r,
        s,
        d,
        mu,
        phi,
        lambda,
        generators: f,
    })
}
