//! Elements of a free module `R^n` under a position-over-term order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::field::Field;
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm<E> {
    pub coeff: E,
    pub mono: Monomial,
    pub comp: u32,
}

/// Position over term: a smaller component index is larger; ties are broken
/// by the ring order.
#[inline]
pub(crate) fn pot_cmp(order: MonomialOrder, a_comp: u32, a: &Monomial, b_comp: u32, b: &Monomial) -> Ordering {
    b_comp.cmp(&a_comp).then_with(|| order.cmp(a, b))
}

/// A vector of polynomials, stored as a single sorted term list.
#[derive(Clone, Debug)]
pub struct FreeModuleElement<F: Field> {
    ring: Arc<Ring<F>>,
    rank: usize,
    pub(crate) terms: Vec<VTerm<F::Elem>>,
}

impl<F: Field> PartialEq for FreeModuleElement<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.rank == other.rank && self.terms == other.terms
    }
}

impl<F: Field> FreeModuleElement<F> {
    pub fn zero(ring: Arc<Ring<F>>, rank: usize) -> Self {
        Self {
            ring,
            rank,
            terms: Vec::new(),
        }
    }

    /// The basis vector `e_i` of `R^rank`.
    pub fn basis(ring: Arc<Ring<F>>, rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let one = ring.field().one();
        let n = ring.nvars();
        Self {
            ring,
            rank,
            terms: vec![VTerm {
                coeff: one,
                mono: Monomial::one(n),
                comp: i as u32,
            }],
        }
    }

    /// Builds an element from its components. All polynomials must live in
    /// one ring; the element takes that ring's order.
    pub fn from_components(components: &[Polynomial<F>]) -> Self {
        let ring = components.first().expect("rank must be positive").ring().clone();
        let mut terms = Vec::new();
        for (i, p) in components.iter().enumerate() {
            assert!(same_ring(p.ring(), &ring), "components live in different rings");
            terms.extend(p.terms().iter().map(|t| VTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
                comp: i as u32,
            }));
        }
        Self {
            ring,
            rank: components.len(),
            terms,
        }
    }

    pub(crate) fn from_vterms(ring: Arc<Ring<F>>, rank: usize, terms: Vec<VTerm<F::Elem>>) -> Self {
        Self { ring, rank, terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn components(&self) -> Vec<Polynomial<F>> {
        let mut comps: Vec<Vec<Term<F::Elem>>> = vec![Vec::new(); self.rank];
        for t in &self.terms {
            comps[t.comp as usize].push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            });
        }
        comps
            .into_iter()
            .map(|ts| Polynomial::from_sorted_terms(self.ring.clone(), ts))
            .collect()
    }

    pub fn component(&self, i: usize) -> Polynomial<F> {
        let ts = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == i)
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(self.ring.clone(), ts)
    }

    /// Leading (component, monomial) pair.
    pub fn leading(&self) -> Option<(usize, &Monomial)> {
        self.terms.first().map(|t| (t.comp as usize, &t.mono))
    }

    /// Common total degree of all terms, if the element is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.mono.degree();
        self.terms.iter().all(|t| t.mono.degree() == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&self.ring.field().one(), &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.ring.field();
        self.axpy(&f.neg(&f.one()), &Monomial::one(self.ring.nvars()), other)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(self.ring.clone(), self.rank);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| VTerm {
                coeff: f.mul(&t.coeff, c),
                mono: t.mono.mul(m),
                comp: t.comp,
            })
            .collect();
        Self::from_vterms(self.ring.clone(), self.rank, terms)
    }

    /// `p * self` for a polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        let f = self.ring.field();
        let mut acc: HashMap<(u32, Monomial), F::Elem> = HashMap::new();
        for a in p.terms() {
            for b in &self.terms {
                let key = (b.comp, a.mono.mul(&b.mono));
                let c = f.mul(&a.coeff, &b.coeff);
                match acc.get_mut(&key) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        let order = self.ring.order();
        let mut terms: Vec<VTerm<F::Elem>> = acc
            .into_iter()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|((comp, mono), coeff)| VTerm { coeff, mono, comp })
            .collect();
        terms.sort_unstable_by(|a, b| pot_cmp(order, b.comp, &b.mono, a.comp, &a.mono));
        Self::from_vterms(self.ring.clone(), self.rank, terms)
    }

    /// `self + c * m * other`.
    pub(crate) fn axpy(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let terms = axpy_terms(self.ring.field(), self.ring.order(), &self.terms, c, m, &other.terms);
        Self::from_vterms(self.ring.clone(), self.rank, terms)
    }

    /// Dot product with a vector of polynomials: `sum_i self_i * v_i`.
    pub fn dot(&self, v: &[Polynomial<F>]) -> Polynomial<F> {
        assert_eq!(v.len(), self.rank);
        let mut total = Polynomial::zero(self.ring.clone());
        for (c, p) in self.components().iter().zip(v) {
            if !c.is_zero() {
                total = &total + &(c * p);
            }
        }
        total
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let f = self.ring.field();
                let inv = f.inv(&t.coeff).expect("nonzero");
                self.mul_term(&inv, &Monomial::one(self.ring.nvars()))
            }
        }
    }
}

/// `a + c * m * b` on sorted term lists.
pub(crate) fn axpy_terms<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: &[VTerm<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    b: &[VTerm<F::Elem>],
) -> Vec<VTerm<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: usize| {
        let t = &b[j];
        VTerm {
            coeff: field.mul(&t.coeff, c),
            mono: t.mono.mul(m),
            comp: t.comp,
        }
    };
    let mut pending = if b.is_empty() { None } else { Some(next_b(0)) };
    while let Some(bt) = pending.take() {
        if i >= a.len() {
            out.push(bt);
            j += 1;
            pending = (j < b.len()).then(|| next_b(j));
            continue;
        }
        match pot_cmp(order, a[i].comp, &a[i].mono, bt.comp, &bt.mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                pending = Some(bt);
            }
            Ordering::Less => {
                out.push(bt);
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
            Ordering::Equal => {
                let s = field.add(&a[i].coeff, &bt.coeff);
                if !field.is_zero(&s) {
                    out.push(VTerm {
                        coeff: s,
                        mono: bt.mono,
                        comp: bt.comp,
                    });
                }
                i += 1;
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out
}
