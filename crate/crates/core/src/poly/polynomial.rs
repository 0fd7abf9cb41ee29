use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, Ring};
use crate::error::{AlgebraError, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<E> {
    pub coeff: E,
    pub mono: Monomial,
}

/// Binary operations exposed through [`Polynomial::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    ExactDivide,
}

/// Sparse polynomial with terms strictly descending in the ring's order and
/// no zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<Term<F::Elem>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

pub(crate) fn same_ring<F: Field>(a: &Arc<Ring<F>>, b: &Arc<Ring<F>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: Arc<Ring<F>>) -> Self {
        Self { ring, terms: Vec::new() }
    }

    pub fn from_monomial(ring: Arc<Ring<F>>, mono: Monomial) -> Self {
        let one = ring.field().one();
        Self {
            ring,
            terms: vec![Term { coeff: one, mono }],
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges repeated
    /// monomials and drops zeros.
    pub fn from_terms(ring: Arc<Ring<F>>, terms: Vec<(F::Elem, Monomial)>) -> Self {
        let field = ring.field().clone();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: Arc<Ring<F>>, acc: HashMap<Monomial, F::Elem>) -> Self {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<Term<F::Elem>> = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        Self { ring, terms }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted_terms(ring: Arc<Ring<F>>, terms: Vec<Term<F::Elem>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Self { ring, terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F::Elem>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F::Elem>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term<F::Elem>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    /// Common total degree of all terms.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let first = self.terms.first().ok_or(AlgebraError::ZeroPolynomial)?;
        if self.is_homogeneous() {
            Ok(first.mono.degree())
        } else {
            Err(AlgebraError::NotHomogeneous)
        }
    }

    /// Terms of total degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let terms = self.terms.iter().filter(|t| t.mono.degree() == deg).cloned().collect();
        Self::from_sorted_terms(self.ring.clone(), terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Self::from_sorted_terms(self.ring.clone(), terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, c),
                mono: t.mono.mul(m),
            })
            .collect();
        Self::from_sorted_terms(self.ring.clone(), terms)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        assert!(same_ring(&self.ring, &other.ring), "operands live in different rings");
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &F::Elem| if negate_other { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: sign(&b[j].coeff),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        field.sub(&a[i].coeff, &b[j].coeff)
                    } else {
                        field.add(&a[i].coeff, &b[j].coeff)
                    };
                    if !field.is_zero(&c) {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: sign(&t.coeff),
            mono: t.mono.clone(),
        }));
        Self::from_sorted_terms(self.ring.clone(), out)
    }

    fn product(&self, other: &Self) -> Self {
        assert!(same_ring(&self.ring, &other.ring), "operands live in different rings");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.mono);
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.mono);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for s in &self.terms {
            for o in &other.terms {
                let c = field.mul(&s.coeff, &o.coeff);
                let m = s.mono.mul(&o.mono);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(self.ring.clone(), acc)
    }

    /// `q` with `self = q * g`, or `InexactDivision`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &g.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let (lc, lm) = match g.leading_term() {
            Some(t) => (t.coeff.clone(), t.mono.clone()),
            None => return Err(AlgebraError::ZeroPolynomial),
        };
        let field = self.field();
        let inv = field.inv(&lc).expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = t.mono.div(&lm).ok_or(AlgebraError::InexactDivision)?;
            let c = field.mul(&t.coeff, &inv);
            rem = &rem - &g.mul_term(&c, &m);
            quotient.push(Term { coeff: c, mono: m });
        }
        Ok(Self::from_sorted_terms(self.ring.clone(), quotient))
    }

    /// Checked binary arithmetic.
    pub fn arith(&self, g: &Self, op: ArithOp) -> Result<Self> {
        if !same_ring(&self.ring, &g.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self + g,
            ArithOp::Mul => self * g,
            ArithOp::ExactDivide => self.exact_div(g)?,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Polynomial::from_monomial(self.ring.clone(), Monomial::one(self.ring.nvars()));
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(AlgebraError::LengthMismatch {
                expected: n,
                found: point.len(),
            });
        }
        let field = self.field();
        let mut total = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                for _ in 0..e {
                    v = field.mul(&v, &point[i]);
                }
            }
            total = field.add(&total, &v);
        }
        Ok(total)
    }

    /// Substitutes `images[i]` for variable `i`. The result lives in the
    /// images' ring.
    pub fn compose(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(AlgebraError::LengthMismatch {
                expected: n,
                found: images.len(),
            });
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or(AlgebraError::LengthMismatch { expected: 1, found: 0 })?;
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .map(|p| vec![Polynomial::from_monomial(target.clone(), Monomial::one(target.nvars())), p.clone()])
            .collect();
        let mut total = Polynomial::zero(target.clone());
        for t in &self.terms {
            let mut v = Polynomial::from_terms(target.clone(), vec![(t.coeff.clone(), Monomial::one(target.nvars()))]);
            for (i, &e) in t.mono.exps().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                v = &v * &powers[i][e];
            }
            total = &total + &v;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`.
    pub fn embed(&self, target: &Arc<Ring<F>>, var_map: &[usize]) -> Polynomial<F> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let mut terms: Vec<Term<F::Elem>> = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u16; n];
                for (i, &x) in t.mono.exps().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::new(e),
                }
            })
            .collect();
        let order = target.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }

    /// Same variables, different order: re-sorts the terms.
    pub fn with_ring(&self, target: &Arc<Ring<F>>) -> Polynomial<F> {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &map)
    }

    /// Whether some term involves variable `i`.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(i) > 0)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.product(rhs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Self) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }

        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$method(rhs)
            }
        }

        impl<F: Field> $tr<Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.neg(&t.coeff),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Prints in the input grammar: `3*x0^2*x1 - x2 + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.names();
        for (k, t) in self.terms.iter().enumerate() {
            let (negative, magnitude) = match field.to_integer(&t.coeff) {
                Some(n) if n < 0.into() => (true, Some(-n)),
                Some(n) => (false, Some(n)),
                None => (false, None),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            match magnitude {
                Some(m) => {
                    if m != 1.into() || t.mono.is_one() {
                        factors.push(m.to_string());
                    }
                }
                None => factors.push(field.display(&t.coeff).to_string()),
            }
            for (i, &e) in t.mono.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
