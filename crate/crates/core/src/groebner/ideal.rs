use std::sync::Arc;

use super::basis::{buchberger, GroebnerBasis};
use super::hilbert::{monomial_numerator, HilbertSeries};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{same_ring, MonomialOrder, Polynomial, Ring, RingHandle};

/// Sum, product or power, for [`Ideal::ideal_ops`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Power(u32),
}

/// An ideal given by generators. Zero generators are dropped.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
}

/// `(dim R/I, height I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionHeight {
    pub dim: usize,
    pub height: usize,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Self {
        assert!(gens.iter().all(|g| same_ring(g.ring(), &ring)), "generators live in different rings");
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self { ring, gens }
    }

    pub fn zero(ring: Arc<Ring<F>>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<Ring<F>>) -> Self {
        let one = ring.one();
        Self { ring, gens: vec![one] }
    }

    /// The homogeneous maximal ideal `(x_0, ..., x_n)`.
    pub fn maximal(ring: Arc<Ring<F>>) -> Self {
        let gens = ring.vars();
        Self { ring, gens }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Reduced Gröbner basis in the ring's order.
    pub fn groebner_basis(&self) -> GroebnerBasis<F> {
        self.groebner_basis_in(self.ring.order())
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> GroebnerBasis<F> {
        if self.gens.is_empty() {
            return buchberger(&[self.ring.zero()], order);
        }
        buchberger(&self.gens, order)
    }

    /// The ideal generated by its own reduced Gröbner basis.
    pub fn normalized(&self) -> Self {
        let gb = self.groebner_basis();
        Self::new(self.ring.clone(), gb.elements().to_vec())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.groebner_basis().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        let gb = other.groebner_basis();
        self.gens.iter().all(|g| gb.contains(g))
    }

    /// Equality as ideals (equal reduced Gröbner bases).
    pub fn equals(&self, other: &Self) -> bool {
        self.groebner_basis() == other.groebner_basis()
    }

    fn check_ring(&self, other: &Self) {
        assert!(same_ring(&self.ring, &other.ring), "ideals live in different rings");
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_ring(other);
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Self::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Self::new(self.ring.clone(), dedup(gens))
    }

    /// `I^n` generated by all degree-`n` products of generators; `I^0 = (1)`.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    pub fn ideal_ops(&self, other: &Self, op: IdealOp) -> Self {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Power(n) => self.power(n),
        }
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1-t)·J`.
    pub fn intersect(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let n = self.ring.nvars();
        let names = std::iter::once("_t".to_string()).chain(self.ring.names().iter().cloned());
        let ext = Ring::new(self.ring.field().clone(), names, MonomialOrder::Block(1));
        let map: Vec<usize> = (1..=n).collect();
        let t = ext.var(0);
        let one_minus_t = &ext.one() - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        gens.extend(self.gens.iter().map(|f| &t * &f.embed(&ext, &map)));
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.embed(&ext, &map)));
        let gb = buchberger(&gens, MonomialOrder::Block(1));
        let result: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .filter(|g| !g.involves(0))
            .map(|g| project(g, &self.ring, 1))
            .collect();
        Self::new(self.ring.clone(), result)
    }

    /// `(I : g)`: generators of `I ∩ (g)` divided by `g`.
    pub fn quotient_by(&self, g: &Polynomial<F>) -> Self {
        if g.is_zero() {
            return Self::unit(self.ring.clone());
        }
        let principal = Self::new(self.ring.clone(), vec![g.clone()]);
        let meet = self.intersect(&principal);
        let gens = meet
            .gens
            .iter()
            .map(|h| h.exact_div(g).expect("elements of (g) are divisible by g"))
            .collect();
        Self::new(self.ring.clone(), gens)
    }

    /// `(I : J) = ∩_{g ∈ gens(J)} (I : g)`.
    pub fn quotient(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut parts = other.gens.iter().map(|g| self.quotient_by(g));
        match parts.next() {
            None => Self::unit(self.ring.clone()),
            Some(first) => parts.fold(first, |acc, q| acc.intersect(&q)),
        }
    }

    /// `(I : J^∞) = ∩_{g ∈ gens(J)} (I : g^∞)`.
    pub fn saturate(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut parts = other.gens.iter().map(|g| self.saturate_by(g));
        match parts.next() {
            None => Self::unit(self.ring.clone()),
            Some(first) => parts.fold(first, |acc, q| {
                if acc.is_unit() {
                    q
                } else {
                    acc.intersect(&q)
                }
            }),
        }
    }

    /// `(I : g^∞)`.
    ///
    /// For a variable and a homogeneous `I` this strips powers of the variable
    /// from a grevlex basis in which it comes last; otherwise it eliminates `t`
    /// from `I + (1 - t g)`.
    pub fn saturate_by(&self, g: &Polynomial<F>) -> Self {
        assert!(same_ring(&self.ring, g.ring()), "polynomial from a different ring");
        if g.is_zero() {
            return Self::unit(self.ring.clone());
        }
        if self.is_zero() {
            return self.clone();
        }
        if let Some(i) = single_variable(g) {
            if self.is_homogeneous() {
                return self.saturate_by_variable(i);
            }
        }
        let n = self.ring.nvars();
        let names = std::iter::once("_t".to_string()).chain(self.ring.names().iter().cloned());
        let ext = Ring::new(self.ring.field().clone(), names, MonomialOrder::Block(1));
        let map: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|f| f.embed(&ext, &map)).collect();
        gens.push(&ext.one() - &(&ext.var(0) * &g.embed(&ext, &map)));
        let gb = buchberger(&gens, MonomialOrder::Block(1));
        let result = gb
            .elements()
            .iter()
            .filter(|h| !h.involves(0))
            .map(|h| project(h, &self.ring, 1))
            .collect();
        Self::new(self.ring.clone(), result)
    }

    fn saturate_by_variable(&self, i: usize) -> Self {
        let n = self.ring.nvars();
        let to_last: Vec<usize> = (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => j,
                std::cmp::Ordering::Equal => n - 1,
                std::cmp::Ordering::Greater => j - 1,
            })
            .collect();
        let mut names = vec![String::new(); n];
        for (j, &k) in to_last.iter().enumerate() {
            names[k] = self.ring.names()[j].clone();
        }
        let moved = Ring::new(self.ring.field().clone(), names, MonomialOrder::Grevlex);
        let gens: Vec<Polynomial<F>> = self.gens.iter().map(|f| f.embed(&moved, &to_last)).collect();
        let gb = buchberger(&gens, MonomialOrder::Grevlex);
        let back: Vec<usize> = (0..n).map(|k| to_last.iter().position(|&j| j == k).unwrap()).collect();
        let last = moved.var(n - 1);
        let result = gb
            .elements()
            .iter()
            .map(|h| {
                let e = h.terms().iter().map(|t| t.mono.exp(n - 1)).min().unwrap_or(0);
                h.exact_div(&last.pow(e as u32)).expect("every term carries the power").embed(&self.ring, &back)
            })
            .collect();
        Self::new(self.ring.clone(), result)
    }

    /// `I ∩ k[x_k, ..., x_{n-1}]`, returned in the subring on the last
    /// `n - k` variables (graded reverse lexicographic).
    pub fn eliminate(&self, k: usize) -> Result<Self> {
        let n = self.ring.nvars();
        if k == 0 || k >= n {
            return Err(AlgebraError::InvalidParameters(format!(
                "cannot eliminate {k} of {n} variables"
            )));
        }
        let sub = Ring::new(
            self.ring.field().clone(),
            self.ring.names()[k..].iter().cloned(),
            MonomialOrder::Grevlex,
        );
        if self.is_zero() {
            return Ok(Self::zero(sub));
        }
        let gb = self.groebner_basis_in(MonomialOrder::Block(k));
        let gens = gb
            .elements()
            .iter()
            .filter(|g| (0..k).all(|i| !g.involves(i)))
            .map(|g| project(g, &sub, k))
            .collect();
        Ok(Self::new(sub, gens))
    }

    /// Hilbert series of `R/I` (standard grading).
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let lms = if self.is_zero() {
            Vec::new()
        } else {
            self.groebner_basis_in(MonomialOrder::Grevlex).leading_monomials()
        };
        Ok(HilbertSeries::new(monomial_numerator(&lms), self.ring.nvars()))
    }

    /// `dim_k [R/I]_e`.
    pub fn hilbert_function(&self, e: usize) -> Result<i64> {
        Ok(self.hilbert_series()?.coefficient(e))
    }

    /// Krull dimension of `R/I` and the height of `I`.
    pub fn dimension_and_height(&self) -> Result<DimensionHeight> {
        let hs = self.hilbert_series()?;
        if hs.is_zero() {
            return Err(AlgebraError::UnitIdeal);
        }
        let dim = hs.dimension();
        Ok(DimensionHeight {
            dim,
            height: self.ring.nvars() - dim,
        })
    }

    /// Height, with `usize::MAX` standing in for the unit ideal.
    pub fn height_or_infinite(&self) -> Result<usize> {
        match self.dimension_and_height() {
            Ok(dh) => Ok(dh.height),
            Err(AlgebraError::UnitIdeal) => Ok(usize::MAX),
            Err(e) => Err(e),
        }
    }
}

/// Drops the first `skip` variables (which must not occur) and re-sorts into
/// `target`.
fn project<F: Field>(p: &Polynomial<F>, target: &Arc<Ring<F>>, skip: usize) -> Polynomial<F> {
    let terms = p
        .terms()
        .iter()
        .map(|t| {
            debug_assert!(t.mono.exps()[..skip].iter().all(|&e| e == 0));
            (t.coeff.clone(), crate::poly::Monomial::new(t.mono.exps()[skip..].iter().copied()))
        })
        .collect();
    Polynomial::from_terms(target.clone(), terms)
}

/// Index of `x_i` when `g` is a nonzero scalar multiple of it.
fn single_variable<F: Field>(g: &Polynomial<F>) -> Option<usize> {
    match g.terms() {
        [t] if t.mono.degree() == 1 => t.mono.exps().iter().position(|&e| e == 1),
        _ => None,
    }
}

fn dedup<F: Field>(gens: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut out: Vec<Polynomial<F>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(n: usize) -> Arc<Ring<PrimeField>> {
        Ring::with_prefix(PrimeField::default(), "x", n)
    }

    fn ideal(r: &Arc<Ring<PrimeField>>, gens: Vec<Polynomial<PrimeField>>) -> Ideal<PrimeField> {
        Ideal::new(r.clone(), gens)
    }

    #[test]
    fn power_and_product() {
        let r = ring(3);
        let x = r.vars();
        let i = ideal(&r, vec![x[0].clone(), x[1].clone()]);
        let sq = i.power(2);
        assert!(sq.equals(&ideal(&r, vec![x[0].pow(2), &x[0] * &x[1], x[1].pow(2)])));
        assert_eq!(sq.gens().len(), 3);
        assert!(i.power(0).is_unit());
        let p = ideal(&r, vec![x[0].clone()]).product(&ideal(&r, vec![x[1].clone()]));
        assert_eq!(p.gens(), &[&x[0] * &x[1]]);
    }

    #[test]
    fn intersection_examples() {
        let r = ring(3);
        let x = r.vars();
        let a = ideal(&r, vec![x[0].clone()]);
        let b = ideal(&r, vec![x[1].clone()]);
        assert!(a.intersect(&b).equals(&ideal(&r, vec![&x[0] * &x[1]])));
        let c = ideal(&r, vec![x[0].pow(2), x[1].clone()]);
        let meet = c.intersect(&a);
        assert!(meet.equals(&ideal(&r, vec![x[0].pow(2), &x[0] * &x[1]])));
        assert!(c.intersect(&c).equals(&c));
    }

    #[test]
    fn quotient_examples() {
        let r = ring(3);
        let x = r.vars();
        let i = ideal(&r, vec![x[0].pow(2), &x[0] * &x[1]]);
        let q = i.quotient(&ideal(&r, vec![x[0].clone()]));
        assert!(q.equals(&ideal(&r, vec![x[0].clone(), x[1].clone()])));
        assert!(i.quotient(&Ideal::unit(r.clone())).equals(&i));
        let cremona = ideal(&r, vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]);
        let q = cremona.quotient(&ideal(&r, vec![x[0].clone()]));
        assert!(q.equals(&ideal(&r, vec![x[1].clone(), x[2].clone()])));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        let x = r.vars();
        let m = Ideal::maximal(r.clone());
        let i = ideal(&r, vec![x[0].pow(2), &x[0] * &x[1]]);
        assert!(i.saturate(&m).equals(&ideal(&r, vec![x[0].clone()])));
        let primary = ideal(&r, vec![x[0].pow(2), x[1].pow(3)]);
        assert!(primary.saturate(&m).is_unit());

        let r3 = ring(3);
        let y = r3.vars();
        let cremona = ideal(&r3, vec![&y[0] * &y[1], &y[0] * &y[2], &y[1] * &y[2]]);
        assert!(cremona.saturate(&Ideal::maximal(r3.clone())).equals(&cremona));
    }

    #[test]
    fn elimination_examples() {
        let field = PrimeField::default();
        let r = Ring::new(field, ["x0", "x1", "y0", "y1", "y2"], MonomialOrder::Grevlex);
        let v = r.vars();
        let gens = vec![
            &v[2] - &v[0].pow(2),
            &v[3] - &(&v[0] * &v[1]),
            &v[4] - &v[1].pow(2),
        ];
        let e = ideal(&r, gens).eliminate(2).unwrap();
        let sub = e.ring().clone();
        let y = sub.vars();
        assert!(e.equals(&Ideal::new(sub.clone(), vec![&(&y[0] * &y[2]) - &y[1].pow(2)])));

        let r2 = Ring::new(field, ["x0", "y0"], MonomialOrder::Grevlex);
        let w = r2.vars();
        let e = ideal(&r2, w.clone()).eliminate(1).unwrap();
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "y0");

        let e = ideal(&r2, vec![w[0].clone()]).eliminate(1).unwrap();
        assert!(e.is_zero());
        assert!(ideal(&r2, vec![w[0].clone()]).eliminate(2).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let r = ring(3);
        let x = r.vars();
        let hs = ideal(&r, vec![&x[0] * &x[1]]).hilbert_series().unwrap();
        assert_eq!((hs.dimension(), hs.degree()), (2, 2));
        let hs = Ideal::zero(r.clone()).hilbert_series().unwrap();
        assert_eq!(hs.numerator(), &[1]);
        assert_eq!(hs.denominator_exp(), 3);
        let cremona = ideal(&r, vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]);
        let hs = cremona.hilbert_series().unwrap();
        assert_eq!((hs.dimension(), hs.degree()), (1, 3));
        assert_eq!(Ideal::zero(r.clone()).hilbert_function(2).unwrap(), 6);
        assert_eq!(ideal(&r, vec![x[0].clone()]).hilbert_function(0).unwrap(), 1);
        assert_eq!(cremona.hilbert_function(5).unwrap(), 3);
    }

    #[test]
    fn dimension_height_examples() {
        let r = ring(3);
        let x = r.vars();
        let cremona = ideal(&r, vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]);
        assert_eq!(cremona.dimension_and_height().unwrap(), DimensionHeight { dim: 1, height: 2 });
        assert_eq!(
            ideal(&r, vec![x[0].clone()]).dimension_and_height().unwrap(),
            DimensionHeight { dim: 2, height: 1 }
        );
        assert_eq!(Ideal::maximal(r.clone()).dimension_and_height().unwrap(), DimensionHeight { dim: 0, height: 3 });
        assert_eq!(Ideal::unit(r.clone()).dimension_and_height(), Err(AlgebraError::UnitIdeal));
        assert_eq!(Ideal::unit(r.clone()).height_or_infinite(), Ok(usize::MAX));
    }

    #[test]
    fn saturating_cremona_powers() {
        let r = ring(3);
        let x = r.vars();
        let cremona = ideal(&r, vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]);
        let m = Ideal::maximal(r.clone());
        let t = std::time::Instant::now();
        for n in 1..=4u32 {
            let j = cremona.power(n).saturate(&m);
            let dim = crate::groebner::binomial(2 * n as u64 + 2, 2) - j.hilbert_function(2 * n as usize).unwrap();
            assert_eq!(dim, crate::groebner::binomial(n as u64 + 2, 2));
        }
        eprintln!("cremona saturations: {:?}", t.elapsed());
    }
}

