use std::sync::Arc;

use super::minors::PolyMatrix;
use super::module_gb::{module_buchberger, module_groebner_basis};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::FreeModuleElement;
use crate::poly::{Polynomial, Ring};

/// Minimal homogeneous syzygies of `f_0, ..., f_s`, arranged as the columns
/// of an `(s+1) × s'` matrix, sorted by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyMatrix<F: Field> {
    matrix: PolyMatrix<F>,
    column_degrees: Vec<u32>,
}

impl<F: Field> SyzygyMatrix<F> {
    pub fn matrix(&self) -> &PolyMatrix<F> {
        &self.matrix
    }

    pub fn column_degrees(&self) -> &[u32] {
        &self.column_degrees
    }

    pub fn ncols(&self) -> usize {
        self.column_degrees.len()
    }

    pub fn nrows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        self.matrix.ring()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        self.matrix.get(i, j)
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        self.matrix.column(j)
    }
}

/// Common degree of a list of nonzero forms.
pub fn common_degree<F: Field>(f: &[Polynomial<F>]) -> Result<u32> {
    let mut degrees = Vec::with_capacity(f.len());
    for p in f {
        degrees.push(p.homogeneous_degree()?);
    }
    match degrees.first() {
        None => Err(AlgebraError::InvalidParameters("no generators".into())),
        Some(&d) if degrees.iter().all(|&e| e == d) => Ok(d),
        Some(_) => Err(AlgebraError::NotEquigenerated(degrees)),
    }
}

/// A minimal homogeneous generating set of `Syz(f_0, ..., f_s)`.
///
/// Candidates come from the S-pair traces of the module Buchberger run on
/// the `f_i`; they are then pruned in order of increasing degree, dropping
/// any candidate already in the submodule spanned by those kept so far.
pub fn syzygy_matrix<F: Field>(f: &[Polynomial<F>]) -> Result<SyzygyMatrix<F>> {
    common_degree(f)?;
    let ring = f[0].ring().clone();
    let gens: Vec<FreeModuleElement<F>> = f
        .iter()
        .map(|p| FreeModuleElement::from_components(std::slice::from_ref(p)))
        .collect();
    let traced = module_buchberger(&gens);

    let mut candidates: Vec<(u32, FreeModuleElement<F>)> = Vec::new();
    for syz in traced.syzygies() {
        let deg = syz
            .homogeneous_degree()
            .expect("syzygies of forms of equal degree are homogeneous");
        if deg == 0 {
            return Err(AlgebraError::NotMinimal);
        }
        candidates.push((deg, syz.monic()));
    }
    candidates.sort_by_key(|(d, _)| *d);

    let mut kept: Vec<(u32, FreeModuleElement<F>)> = Vec::new();
    for (deg, cand) in candidates {
        let redundant = !kept.is_empty() && {
            let span: Vec<_> = kept.iter().map(|(_, v)| v.clone()).collect();
            module_groebner_basis(&span).contains(&cand)
        };
        if !redundant {
            kept.push((deg, cand));
        }
    }

    let columns: Vec<Vec<Polynomial<F>>> = kept.iter().map(|(_, v)| v.components()).collect();
    let column_degrees = kept.iter().map(|(d, _)| *d).collect();
    let matrix = if columns.is_empty() {
        PolyMatrix::from_rows(ring, f.iter().map(|_| Vec::new()).collect())
    } else {
        PolyMatrix::from_columns(ring, &columns)
    };
    Ok(SyzygyMatrix { matrix, column_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::RingHandle;

    fn check_relations(f: &[Polynomial<PrimeField>], phi: &SyzygyMatrix<PrimeField>) {
        for j in 0..phi.ncols() {
            let col = phi.column(j);
            let mut total = f[0].ring().zero();
            for (a, b) in col.iter().zip(f) {
                total = &total + &(a * b);
            }
            assert!(total.is_zero(), "column {j} is not a syzygy");
            for p in &col {
                if !p.is_zero() {
                    assert_eq!(p.homogeneous_degree().unwrap(), phi.column_degrees()[j]);
                }
            }
        }
    }

    #[test]
    fn cremona_syzygies() {
        let r = Ring::with_prefix(PrimeField::default(), "x", 3);
        let x = r.vars();
        let f = vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]];
        let phi = syzygy_matrix(&f).unwrap();
        assert_eq!(phi.column_degrees(), &[1, 1]);
        check_relations(&f, &phi);
    }

    #[test]
    fn regular_sequence_has_koszul_syzygy() {
        let r = Ring::new(PrimeField::default(), ["s", "t"], crate::MonomialOrder::Grevlex);
        let v = r.vars();
        let f = vec![v[0].pow(2), v[1].pow(2)];
        let phi = syzygy_matrix(&f).unwrap();
        assert_eq!(phi.column_degrees(), &[2]);
        let col = phi.column(0);
        let expected = [v[1].pow(2), -&v[0].pow(2)];
        assert!(col == expected || col == [-&expected[0], -&expected[1]]);
    }

    #[test]
    fn twisted_cubic_projection() {
        let r = Ring::new(PrimeField::default(), ["s", "t"], crate::MonomialOrder::Grevlex);
        let v = r.vars();
        let f = vec![v[0].pow(3), &v[0].pow(2) * &v[1], v[1].pow(3)];
        let phi = syzygy_matrix(&f).unwrap();
        assert_eq!(phi.column_degrees(), &[1, 2]);
        check_relations(&f, &phi);
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let r = Ring::with_prefix(PrimeField::default(), "x", 2);
        let x = r.vars();
        assert_eq!(
            syzygy_matrix(&[x[0].clone(), x[1].pow(2)]),
            Err(AlgebraError::NotEquigenerated(vec![1, 2]))
        );
    }

    #[test]
    fn dependent_generators_are_not_minimal() {
        let r = Ring::with_prefix(PrimeField::default(), "x", 2);
        let x = r.vars();
        let f = vec![x[0].clone(), x[1].clone(), &x[0] + &x[1]];
        assert_eq!(syzygy_matrix(&f), Err(AlgebraError::NotMinimal));
    }
}
