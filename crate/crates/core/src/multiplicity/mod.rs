//! Closed formulas in the syzygy degrees `mu_1, ..., mu_s`.
//!
//! For a perfect height-two ideal satisfying `G_{r+1}`, the saturated special
//! fiber ring has multiplicity `e_r(mu)`, the r-th elementary symmetric
//! polynomial in the syzygy degrees, and the j-multiplicity is `d * e_r(mu)`.
//! The same multiplicity is also an alternating sum of the coefficients
//! `m_i`; [`multiplicity_from_m`] evaluates that route independently.

mod lemma;

pub use lemma::{lemma_grid, lemma_identity, parts_for, random_lemma_instances, GridSummary, LemmaFailure, LemmaPart};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};

/// Syzygy degrees together with the projective dimension `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuVector {
    r: usize,
    mu: Vec<u64>,
}

impl MuVector {
    pub fn new(r: usize, mu: Vec<u64>) -> Result<Self> {
        if r == 0 {
            return Err(AlgebraError::InvalidParameters("r must be at least 1".into()));
        }
        if mu.len() < r {
            return Err(AlgebraError::InvalidParameters(format!("s = {} < r = {r}", mu.len())));
        }
        if mu.contains(&0) {
            return Err(AlgebraError::InvalidParameters("syzygy degrees must be positive".into()));
        }
        Ok(Self { r, mu })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    pub fn degree_sum(&self) -> u64 {
        self.mu.iter().sum()
    }
}

/// `e_r(mu)` by the prefix recurrence `e_k(mu_1..mu_j) = e_k(mu_1..mu_{j-1}) + mu_j * e_{k-1}(mu_1..mu_{j-1})`.
pub fn elementary_symmetric(r: usize, mu: &[u64]) -> Result<BigInt> {
    if r > mu.len() {
        return Err(AlgebraError::InvalidParameters(format!(
            "e_{r} needs at least {r} values, got {}",
            mu.len()
        )));
    }
    let mut e = vec![BigInt::zero(); r + 1];
    e[0] = BigInt::one();
    for (j, &m) in mu.iter().enumerate() {
        for k in (1..=r.min(j + 1)).rev() {
            let add = &e[k - 1] * m;
            e[k] += add;
        }
    }
    Ok(e.swap_remove(r))
}

/// `binom(n, k)` in the counting convention: zero whenever `n < k`,
/// including negative `n`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    if n < 0 || (n as u64) < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n as u64 - i;
        acc /= i + 1;
    }
    acc
}

/// `m_i = sum over i-subsets J of binom(sum_J mu - 1, r)`.
///
/// Counts subsets by (size, sum) instead of enumerating them.
pub fn m_coefficient(i: usize, mv: &MuVector) -> BigInt {
    let s = mv.s();
    if i > s {
        return BigInt::zero();
    }
    let total: usize = mv.degree_sum() as usize;
    // counts[k][sigma] = number of k-subsets with sum sigma
    let mut counts = vec![vec![BigInt::zero(); total + 1]; i + 1];
    counts[0][0] = BigInt::one();
    for &m in mv.mu() {
        let m = m as usize;
        for k in (1..=i).rev() {
            for sigma in (m..=total).rev() {
                if !counts[k - 1][sigma - m].is_zero() {
                    let add = counts[k - 1][sigma - m].clone();
                    counts[k][sigma] += add;
                }
            }
        }
    }
    counts[i]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(sigma, c)| c * binomial(sigma as i64 - 1, mv.r() as u64))
        .sum()
}

/// All of `m_0, ..., m_s`.
pub fn m_vector(mv: &MuVector) -> Vec<BigInt> {
    (0..=mv.s()).map(|i| m_coefficient(i, mv)).collect()
}

/// The multiplicity as an alternating sum of the `m_i`:
/// `1 + sum_{i=0}^r (-1)^{r+i} m_i` when `s = r`, and
/// `sum_{i=s-r}^s (-1)^{s+i} m_i binom(i, s-r)` when `s > r`.
pub fn multiplicity_from_m(mv: &MuVector) -> BigInt {
    let (r, s) = (mv.r(), mv.s());
    let m = m_vector(mv);
    let sign = |e: usize| if e.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    if s == r {
        (0..=r).fold(BigInt::one(), |acc, i| acc + sign(r + i) * &m[i])
    } else {
        (s - r..=s).fold(BigInt::zero(), |acc, i| {
            acc + sign(s + i) * &m[i] * binomial(i as i64, (s - r) as u64)
        })
    }
}

/// `j(I) = d * e_r(mu)`; `d` must equal the sum of the `mu_j`.
pub fn j_multiplicity_formula(d: u64, mv: &MuVector) -> Result<BigInt> {
    let sum = mv.degree_sum();
    if d != sum {
        return Err(AlgebraError::DegreeMismatch { d, sum });
    }
    Ok(elementary_symmetric(mv.r(), mv.mu())? * d)
}

/// Formula-side values for one ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub e_r: BigInt,
    pub m: Vec<BigInt>,
    pub alt_sum: BigInt,
    pub j: BigInt,
    pub consistent: bool,
}

pub fn multiplicity_report(d: u64, mv: &MuVector) -> Result<MultiplicityReport> {
    let e_r = elementary_symmetric(mv.r(), mv.mu())?;
    let j = j_multiplicity_formula(d, mv)?;
    let alt_sum = multiplicity_from_m(mv);
    Ok(MultiplicityReport {
        consistent: alt_sum == e_r,
        m: m_vector(mv),
        e_r,
        alt_sum,
        j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Subset-enumeration oracle for `e_r`.
    fn e_naive(r: usize, mu: &[u64]) -> BigInt {
        let s = mu.len();
        (0u32..1 << s)
            .filter(|m| m.count_ones() as usize == r)
            .map(|m| (0..s).filter(|j| m & (1 << j) != 0).map(|j| BigInt::from(mu[j])).product::<BigInt>())
            .sum()
    }

    /// Subset-enumeration oracle for `m_i`.
    fn m_naive(i: usize, r: usize, mu: &[u64]) -> BigInt {
        let s = mu.len();
        (0u32..1 << s)
            .filter(|m| m.count_ones() as usize == i)
            .map(|m| {
                let sum: i64 = (0..s).filter(|j| m & (1 << j) != 0).map(|j| mu[j] as i64).sum();
                binomial(sum - 1, r as u64)
            })
            .sum()
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(2, &[1, 1]).unwrap(), big(1));
        assert_eq!(elementary_symmetric(2, &[1, 2, 3]).unwrap(), big(11));
        assert_eq!(elementary_symmetric(1, &[2, 5, 7]).unwrap(), big(14));
        assert_eq!(elementary_symmetric(3, &[2, 3, 4]).unwrap(), big(24));
        assert_eq!(elementary_symmetric(0, &[2, 3]).unwrap(), big(1));
        assert!(elementary_symmetric(3, &[1, 2]).is_err());
    }

    #[test]
    fn elementary_symmetric_is_exact_beyond_u64() {
        let mu = vec![1u64 << 40; 4];
        let expected = BigInt::from(1u64 << 40).pow(4);
        assert_eq!(elementary_symmetric(4, &mu).unwrap(), expected);
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(-1, 2), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(1, 2), big(0));
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn m_coefficient_examples() {
        let mv = MuVector::new(2, vec![2, 3]).unwrap();
        assert_eq!(m_coefficient(0, &mv), big(0));
        assert_eq!(m_coefficient(1, &mv), big(1));
        assert_eq!(m_coefficient(2, &mv), big(6));
    }

    #[test]
    fn multiplicity_from_m_examples() {
        assert_eq!(multiplicity_from_m(&MuVector::new(2, vec![2, 3]).unwrap()), big(6));
        assert_eq!(multiplicity_from_m(&MuVector::new(1, vec![1, 2]).unwrap()), big(3));
        assert_eq!(multiplicity_from_m(&MuVector::new(2, vec![1, 1]).unwrap()), big(1));
    }

    #[test]
    fn j_multiplicity_examples() {
        assert_eq!(j_multiplicity_formula(2, &MuVector::new(2, vec![1, 1]).unwrap()).unwrap(), big(2));
        assert_eq!(j_multiplicity_formula(2, &MuVector::new(1, vec![2]).unwrap()).unwrap(), big(4));
        assert_eq!(j_multiplicity_formula(3, &MuVector::new(1, vec![1, 2]).unwrap()).unwrap(), big(9));
        assert_eq!(
            j_multiplicity_formula(4, &MuVector::new(1, vec![1, 2]).unwrap()),
            Err(AlgebraError::DegreeMismatch { d: 4, sum: 3 })
        );
    }

    #[test]
    fn mu_vector_validation() {
        assert!(MuVector::new(0, vec![1]).is_err());
        assert!(MuVector::new(3, vec![1, 1]).is_err());
        assert!(MuVector::new(1, vec![0, 1]).is_err());
    }

    #[test]
    fn report_is_consistent() {
        let rep = multiplicity_report(4, &MuVector::new(2, vec![2, 2]).unwrap()).unwrap();
        assert_eq!(rep.e_r, big(4));
        assert_eq!(rep.j, big(16));
        assert!(rep.consistent);
        assert_eq!(rep.m.len(), 3);
    }

    fn arb_mu() -> impl Strategy<Value = (usize, Vec<u64>)> {
        proptest::collection::vec(1u64..=6, 1..=8).prop_flat_map(|mu| {
            let s = mu.len();
            (1..=s, Just(mu))
        })
    }

    proptest! {
        #[test]
        fn recurrence_matches_enumeration((r, mu) in arb_mu()) {
            prop_assert_eq!(elementary_symmetric(r, &mu).unwrap(), e_naive(r, &mu));
        }

        #[test]
        fn m_coefficient_matches_enumeration((r, mu) in arb_mu()) {
            let mv = MuVector::new(r, mu.clone()).unwrap();
            for i in 0..=mu.len() {
                prop_assert_eq!(m_coefficient(i, &mv), m_naive(i, r, &mu));
            }
        }

        #[test]
        fn symmetric_under_permutation((r, mu) in arb_mu(), rot in 0usize..8) {
            let mut perm = mu.clone();
            perm.rotate_left(rot % mu.len());
            perm.swap(0, mu.len() - 1);
            prop_assert_eq!(elementary_symmetric(r, &mu).unwrap(), elementary_symmetric(r, &perm).unwrap());
            let a = multiplicity_from_m(&MuVector::new(r, mu).unwrap());
            let b = multiplicity_from_m(&MuVector::new(r, perm).unwrap());
            prop_assert_eq!(a, b);
        }

        #[test]
        fn strictly_monotone((r, mu) in arb_mu(), idx in 0usize..8) {
            let j = idx % mu.len();
            let mut bumped = mu.clone();
            bumped[j] += 1;
            prop_assert!(elementary_symmetric(r, &bumped).unwrap() > elementary_symmetric(r, &mu).unwrap());
        }

        #[test]
        fn two_routes_agree((r, mu) in arb_mu()) {
            let mv = MuVector::new(r, mu.clone()).unwrap();
            prop_assert_eq!(multiplicity_from_m(&mv), elementary_symmetric(r, &mu).unwrap());
        }
    }
}
