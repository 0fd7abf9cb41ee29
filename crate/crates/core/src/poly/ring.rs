use std::sync::Arc;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::field::Field;

/// A polynomial ring `k[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new<S: Into<String>>(field: F, names: impl IntoIterator<Item = S>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Self {
            field,
            names: names.into_iter().map(Into::into).collect(),
            order,
        })
    }

    /// Ring with variables named `{prefix}0, {prefix}1, ...` under grevlex.
    pub fn with_prefix(field: F, prefix: &str, nvars: usize) -> Arc<Self> {
        Self::new(field, (0..nvars).map(|i| format!("{prefix}{i}")), MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Self {
            field: self.field.clone(),
            names: self.names.clone(),
            order,
        })
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Constructors that need the `Arc` handle.
pub trait RingHandle<F: Field> {
    fn var(&self, i: usize) -> Polynomial<F>;
    fn vars(&self) -> Vec<Polynomial<F>>;
    fn constant(&self, c: F::Elem) -> Polynomial<F>;
    fn zero(&self) -> Polynomial<F>;
    fn one(&self) -> Polynomial<F>;
    fn monomial(&self, m: Monomial) -> Polynomial<F>;
}

impl<F: Field> RingHandle<F> for Arc<Ring<F>> {
    fn var(&self, i: usize) -> Polynomial<F> {
        Polynomial::from_monomial(self.clone(), Monomial::var(self.nvars(), i, 1))
    }

    fn vars(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    fn constant(&self, c: F::Elem) -> Polynomial<F> {
        Polynomial::from_terms(self.clone(), vec![(c, Monomial::one(self.nvars()))])
    }

    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.clone())
    }

    fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    fn monomial(&self, m: Monomial) -> Polynomial<F> {
        Polynomial::from_monomial(self.clone(), m)
    }
}
