use std::sync::Arc;

use crate::field::Field;
use crate::groebner::engine::{module_buchberger as engine_buchberger, normal_form, Terms};
use crate::groebner::FreeModuleElement;
use crate::poly::Ring;

/// Gröbner basis of a submodule of `R^rank` under position over term, with
/// the syzygies of the input generators found while computing it.
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    rank: usize,
    basis: Vec<FreeModuleElement<F>>,
    syzygies: Vec<FreeModuleElement<F>>,
}

impl<F: Field> ModuleGroebnerBasis<F> {
    pub fn basis(&self) -> &[FreeModuleElement<F>] {
        &self.basis
    }

    /// Traces of the S-pairs that reduced to zero, as vectors in
    /// `R^{number of inputs}`. They generate the syzygy module of the inputs.
    pub fn syzygies(&self) -> &[FreeModuleElement<F>] {
        &self.syzygies
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn reduce(&self, v: &FreeModuleElement<F>) -> FreeModuleElement<F> {
        let basis: Vec<Terms<F>> = self.basis.iter().map(|b| b.terms.clone()).collect();
        let nf = normal_form(&self.ring, &basis, v.terms.clone());
        FreeModuleElement::from_vterms(self.ring.clone(), self.rank, nf)
    }

    pub fn contains(&self, v: &FreeModuleElement<F>) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Buchberger's algorithm on a list of module elements, recording the
/// reduction trace of every S-pair.
///
/// Panics if `gens` is empty or mixes ranks.
pub fn module_buchberger<F: Field>(gens: &[FreeModuleElement<F>]) -> ModuleGroebnerBasis<F> {
    build(gens, true)
}

/// Module Gröbner basis without syzygy bookkeeping (criteria enabled).
pub fn module_groebner_basis<F: Field>(gens: &[FreeModuleElement<F>]) -> ModuleGroebnerBasis<F> {
    build(gens, false)
}

fn build<F: Field>(gens: &[FreeModuleElement<F>], tracing: bool) -> ModuleGroebnerBasis<F> {
    let first = gens.first().expect("at least one generator");
    let ring = first.ring().clone();
    let rank = first.rank();
    assert!(gens.iter().all(|g| g.rank() == rank), "generators of different ranks");
    let inputs: Vec<Terms<F>> = gens.iter().map(|g| g.terms.clone()).collect();
    let n = inputs.len();
    let out = engine_buchberger(&ring, rank, inputs, tracing);
    ModuleGroebnerBasis {
        basis: out
            .basis
            .into_iter()
            .map(|t| FreeModuleElement::from_vterms(ring.clone(), rank, t))
            .collect(),
        syzygies: out
            .syzygies
            .into_iter()
            .map(|t| FreeModuleElement::from_vterms(ring.clone(), n, t))
            .collect(),
        ring,
        rank,
    }
}
