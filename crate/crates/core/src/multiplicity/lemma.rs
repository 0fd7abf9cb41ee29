//! Brute-force verifiers for the binomial/elementary-symmetric identities
//! behind the multiplicity formula. Both sides are evaluated by explicit
//! subset enumeration, so these are test oracles and not a fast path.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{binomial, elementary_symmetric, multiplicity_from_m, MuVector};
use crate::error::{AlgebraError, Result};

const MAX_ENUMERATED_S: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaPart {
    /// `sum_i (-1)^i C(i, s-r) C(s-k, i-k) = (-1)^s [k = r]`.
    I { k: usize },
    /// `sum_i (-1)^i C(i, s-r) sum_{|J|=i} (sum_J mu)^l = (-1)^s r! e_r(mu) [l = r]`.
    II { l: usize },
    /// `sum_i (-1)^i C(i, s-r) m_i = (-1)^s e_r(mu)` for `s > r`.
    III,
    /// `1 + sum_i (-1)^{i+r} m_i = mu_1 ... mu_r` for `s = r`.
    IV,
}

impl fmt::Display for LemmaPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaPart::I { k } => write!(f, "(i) k={k}"),
            LemmaPart::II { l } => write!(f, "(ii) l={l}"),
            LemmaPart::III => write!(f, "(iii)"),
            LemmaPart::IV => write!(f, "(iv)"),
        }
    }
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Subset sums of `mu`, grouped by subset size.
fn subset_sums(mu: &[u64]) -> Vec<Vec<u64>> {
    let s = mu.len();
    let mut by_size = vec![Vec::new(); s + 1];
    for mask in 0u32..(1u32 << s) {
        let sum = (0..s).filter(|j| mask & (1 << j) != 0).map(|j| mu[j]).sum();
        by_size[mask.count_ones() as usize].push(sum);
    }
    by_size
}

fn check_mu(r: usize, s: usize, mu: &[u64]) -> Result<()> {
    if mu.len() != s {
        return Err(AlgebraError::LengthMismatch { expected: s, found: mu.len() });
    }
    if s > MAX_ENUMERATED_S {
        return Err(AlgebraError::InvalidParameters(format!(
            "s = {s} exceeds the enumeration bound {MAX_ENUMERATED_S}"
        )));
    }
    if r == 0 || r > s {
        return Err(AlgebraError::InvalidParameters(format!("need 1 <= r <= s, got r={r}, s={s}")));
    }
    if mu.contains(&0) {
        return Err(AlgebraError::InvalidParameters("syzygy degrees must be positive".into()));
    }
    Ok(())
}

/// Evaluates both sides of one identity and reports whether they agree.
///
/// Part (i) depends only on `(k, r, s)`; `mu` is ignored there and may be
/// empty. The other parts require `mu.len() == s`.
pub fn lemma_identity(part: LemmaPart, r: usize, s: usize, mu: &[u64]) -> Result<bool> {
    match part {
        LemmaPart::I { k } => {
            if !(k <= r && r <= s) {
                return Err(AlgebraError::InvalidParameters(format!(
                    "part (i) needs 0 <= k <= r <= s, got k={k}, r={r}, s={s}"
                )));
            }
            let lhs: BigInt = (k.max(s - r)..=s)
                .map(|i| sign(i) * binomial(i as i64, (s - r) as u64) * binomial((s - k) as i64, (i - k) as u64))
                .sum();
            let rhs = if k == r { sign(s) } else { BigInt::zero() };
            Ok(lhs == rhs)
        }
        LemmaPart::II { l } => {
            check_mu(r, s, mu)?;
            if l == 0 || l > r {
                return Err(AlgebraError::InvalidParameters(format!("part (ii) needs 1 <= l <= r, got l={l}")));
            }
            let sums = subset_sums(mu);
            let lhs: BigInt = (0..=s)
                .map(|i| {
                    let inner: BigInt = sums[i].iter().map(|&x| BigInt::from(x).pow(l as u32)).sum();
                    sign(i) * binomial(i as i64, (s - r) as u64) * inner
                })
                .sum();
            let rhs = if l == r {
                let fact: BigInt = (1..=r as u64).map(BigInt::from).product();
                sign(s) * fact * elementary_symmetric(r, mu)?
            } else {
                BigInt::zero()
            };
            Ok(lhs == rhs)
        }
        LemmaPart::III => {
            check_mu(r, s, mu)?;
            if s <= r {
                return Err(AlgebraError::InvalidParameters(format!("part (iii) needs s > r, got r={r}, s={s}")));
            }
            let m = enumerated_m(r, mu);
            let lhs: BigInt = (0..=s)
                .map(|i| sign(i) * binomial(i as i64, (s - r) as u64) * &m[i])
                .sum();
            Ok(lhs == sign(s) * elementary_symmetric(r, mu)?)
        }
        LemmaPart::IV => {
            check_mu(r, s, mu)?;
            if s != r {
                return Err(AlgebraError::InvalidParameters(format!("part (iv) needs s = r, got r={r}, s={s}")));
            }
            let m = enumerated_m(r, mu);
            let lhs = (0..=r).fold(BigInt::one(), |acc, i| acc + sign(i + r) * &m[i]);
            let rhs: BigInt = mu.iter().map(|&x| BigInt::from(x)).product();
            Ok(lhs == rhs)
        }
    }
}

/// `m_0, ..., m_s` by listing every subset.
fn enumerated_m(r: usize, mu: &[u64]) -> Vec<BigInt> {
    subset_sums(mu)
        .iter()
        .map(|sums| sums.iter().map(|&x| binomial(x as i64 - 1, r as u64)).sum())
        .collect()
}

/// Admissible parts for the shape `(r, s)`.
pub fn parts_for(r: usize, s: usize) -> Vec<LemmaPart> {
    let mut parts: Vec<LemmaPart> = (0..=r).map(|k| LemmaPart::I { k }).collect();
    parts.extend((1..=r).map(|l| LemmaPart::II { l }));
    parts.push(if s > r { LemmaPart::III } else { LemmaPart::IV });
    parts
}

/// A single disagreement found by a grid run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaFailure {
    /// `None` for the formula-equivalence check.
    pub part: Option<LemmaPart>,
    pub r: usize,
    pub mu: Vec<u64>,
}

impl fmt::Display for LemmaFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.part {
            Some(p) => write!(f, "part {p} fails at r={}, mu={:?}", self.r, self.mu),
            None => write!(f, "alternating sum differs from e_r at r={}, mu={:?}", self.r, self.mu),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridSummary {
    pub checked: usize,
    pub failures: Vec<LemmaFailure>,
}

impl GridSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: GridSummary) -> GridSummary {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs every identity plus the formula equivalence on one instance.
fn check_instance(r: usize, mu: &[u64]) -> Result<GridSummary> {
    let s = mu.len();
    let mut summary = GridSummary::default();
    for part in parts_for(r, s) {
        summary.checked += 1;
        if !lemma_identity(part, r, s, mu)? {
            summary.failures.push(LemmaFailure { part: Some(part), r, mu: mu.to_vec() });
        }
    }
    summary.checked += 1;
    let mv = MuVector::new(r, mu.to_vec())?;
    if multiplicity_from_m(&mv) != elementary_symmetric(r, mu)? {
        summary.failures.push(LemmaFailure { part: None, r, mu: mu.to_vec() });
    }
    Ok(summary)
}

/// All tuples in `{1..=mu_max}^s`.
fn tuples(s: usize, mu_max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=mu_max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Exhaustive check over `1 <= r <= r_max`, `r <= s <= s_max`,
/// `mu in {1..=mu_max}^s`.
pub fn lemma_grid(r_max: usize, s_max: usize, mu_max: u64) -> Result<GridSummary> {
    if s_max > MAX_ENUMERATED_S || mu_max == 0 {
        return Err(AlgebraError::InvalidParameters(format!(
            "grid bounds out of range: s_max={s_max}, mu_max={mu_max}"
        )));
    }
    let cases: Vec<(usize, Vec<u64>)> = (1..=r_max)
        .flat_map(|r| (r..=s_max).flat_map(move |s| tuples(s, mu_max).into_iter().map(move |mu| (r, mu))))
        .collect();
    cases
        .par_iter()
        .map(|(r, mu)| check_instance(*r, mu))
        .try_reduce(GridSummary::default, |a, b| Ok(a.merge(b)))
}

/// `count` random instances with `s <= s_max` and `mu_j <= mu_max`.
pub fn random_lemma_instances(count: usize, s_max: usize, mu_max: u64, seed: u64) -> Result<GridSummary> {
    if s_max == 0 || s_max > MAX_ENUMERATED_S || mu_max == 0 {
        return Err(AlgebraError::InvalidParameters(format!(
            "random bounds out of range: s_max={s_max}, mu_max={mu_max}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(usize, Vec<u64>)> = (0..count)
        .map(|_| {
            let s = rng.gen_range(1..=s_max);
            let r = rng.gen_range(1..=s);
            let mu = (0..s).map(|_| rng.gen_range(1..=mu_max)).collect();
            (r, mu)
        })
        .collect();
    cases
        .par_iter()
        .map(|(r, mu)| check_instance(*r, mu))
        .try_reduce(GridSummary::default, |a, b| Ok(a.merge(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        assert!(lemma_identity(LemmaPart::I { k: 2 }, 2, 4, &[]).unwrap());
        assert!(lemma_identity(LemmaPart::II { l: 1 }, 2, 3, &[1, 4, 2]).unwrap());
        assert!(lemma_identity(LemmaPart::IV, 2, 2, &[2, 3]).unwrap());
        assert!(lemma_identity(LemmaPart::III, 1, 2, &[1, 2]).unwrap());
    }

    #[test]
    fn range_violations() {
        assert!(lemma_identity(LemmaPart::I { k: 3 }, 2, 4, &[]).is_err());
        assert!(lemma_identity(LemmaPart::II { l: 0 }, 2, 2, &[1, 1]).is_err());
        assert!(lemma_identity(LemmaPart::II { l: 3 }, 2, 2, &[1, 1]).is_err());
        assert!(lemma_identity(LemmaPart::III, 2, 2, &[1, 1]).is_err());
        assert!(lemma_identity(LemmaPart::IV, 1, 2, &[1, 1]).is_err());
        assert!(lemma_identity(LemmaPart::IV, 2, 2, &[1]).is_err());
        assert!(lemma_identity(LemmaPart::IV, 21, 21, &[1; 21]).is_err());
    }

    #[test]
    fn wrong_right_side_is_detected() {
        // m_0 under the falling-factorial convention would be C(-1, r) = (-1)^r,
        // which breaks (iv); make sure the verifier would notice such a shift.
        let m = enumerated_m(1, &[3]);
        assert_eq!(m, vec![BigInt::zero(), BigInt::from(2)]);
        let shifted = BigInt::one() - (&m[0] - BigInt::one()) + &m[1];
        assert_ne!(shifted, BigInt::from(3));
        assert!(lemma_identity(LemmaPart::IV, 1, 1, &[3]).unwrap());
    }

    #[test]
    fn small_grid_passes() {
        let summary = lemma_grid(2, 3, 3).unwrap();
        assert!(summary.passed(), "{:?}", summary.failures.first());
        assert!(summary.checked > 100);
    }

    #[test]
    fn random_instances_are_reproducible() {
        let a = random_lemma_instances(20, 6, 9, 7).unwrap();
        let b = random_lemma_instances(20, 6, 9, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
    }
}
