use std::sync::Arc;

use super::engine::{module_buchberger, normal_form, Terms};
use super::module::VTerm;
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, Term};

/// Reduced Gröbner basis of an ideal.
///
/// Elements are monic with pairwise distinct leading monomials, sorted by
/// increasing leading monomial. No term of an element is divisible by the
/// leading monomial of another, so the basis is determined by the ideal and
/// the order alone.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order() == other.ring.order() && self.elements == other.elements
    }
}

pub(crate) fn to_terms<F: Field>(p: &Polynomial<F>) -> Terms<F> {
    p.terms()
        .iter()
        .map(|t| VTerm {
            coeff: t.coeff.clone(),
            mono: t.mono.clone(),
            comp: 0,
        })
        .collect()
}

pub(crate) fn from_terms<F: Field>(ring: &Arc<Ring<F>>, terms: Terms<F>) -> Polynomial<F> {
    Polynomial::from_sorted_terms(
        ring.clone(),
        terms
            .into_iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono,
            })
            .collect(),
    )
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
/// Generators are re-sorted into `order` first.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> GroebnerBasis<F> {
    let base = gens.first().expect("buchberger needs at least one generator").ring();
    let ring = if base.order() == order {
        base.clone()
    } else {
        base.with_order(order)
    };
    let inputs: Vec<Terms<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(&g.with_ring(&ring)))
        .collect();
    if inputs.is_empty() {
        return GroebnerBasis {
            ring,
            elements: Vec::new(),
        };
    }
    let out = module_buchberger(&ring, 1, inputs, false);
    let elements = out.basis.into_iter().map(|t| from_terms(&ring, t)).collect();
    GroebnerBasis { ring, elements }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// Normal form of `f`: no term is divisible by a leading monomial of the
    /// basis. The result lives in the basis' ring.
    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let f = if f.ring().order() == self.ring.order() && f.ring().names() == self.ring.names() {
            f.clone()
        } else {
            f.with_ring(&self.ring)
        };
        let basis: Vec<Terms<F>> = self.elements.iter().map(to_terms).collect();
        from_terms(&self.ring, normal_form(&self.ring, &basis, to_terms(&f)))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.reduce(f).is_zero()
    }

    /// S-polynomial of elements `i` and `j`.
    pub fn s_polynomial(&self, i: usize, j: usize) -> Polynomial<F> {
        let (gi, gj) = (&self.elements[i], &self.elements[j]);
        let (li, lj) = (gi.leading_monomial().unwrap(), gj.leading_monomial().unwrap());
        let lcm = li.lcm(lj);
        let field = self.ring.field();
        let a = gi.mul_term(&field.inv(gi.leading_coeff().unwrap()).unwrap(), &lcm.div(li).unwrap());
        let b = gj.mul_term(&field.inv(gj.leading_coeff().unwrap()).unwrap(), &lcm.div(lj).unwrap());
        &a - &b
    }
}
