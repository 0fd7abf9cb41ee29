//! Hilbert series of graded quotients `R/I`, via the leading-term ideal and
//! the pivot recursion for monomial ideals.

use std::fmt;

use crate::poly::Monomial;

/// `numerator(T) / (1 - T)^denominator_exp`, stored in reduced form:
/// `numerator(1) != 0` unless the series is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    denominator_exp: usize,
}

impl HilbertSeries {
    /// Reduces `numerator / (1-T)^exp` by cancelling common `(1-T)` factors.
    pub fn new(numerator: Vec<i64>, exp: usize) -> Self {
        let mut num = trim(numerator);
        let mut exp = if num.is_empty() { 0 } else { exp };
        while exp > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            num = divide_one_minus_t(&num).expect("numerator vanishes at 1");
            exp -= 1;
        }
        Self {
            numerator: num,
            denominator_exp: exp,
        }
    }

    /// Coefficients of the reduced numerator, lowest degree first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_exp(&self) -> usize {
        self.denominator_exp
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Krull dimension of the quotient.
    pub fn dimension(&self) -> usize {
        self.denominator_exp
    }

    /// Multiplicity: the reduced numerator at `T = 1`.
    pub fn degree(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Numerator over `(1 - T)^n` for `n >= denominator_exp`.
    pub fn numerator_over(&self, n: usize) -> Vec<i64> {
        assert!(n >= self.denominator_exp);
        let mut num = self.numerator.clone();
        for _ in self.denominator_exp..n {
            num = mul_one_minus_t(&num);
        }
        num
    }

    /// Coefficient of `T^e` in the expansion.
    pub fn coefficient(&self, e: usize) -> i64 {
        let k = self.denominator_exp;
        self.numerator
            .iter()
            .enumerate()
            .take_while(|(j, _)| *j <= e)
            .map(|(j, &c)| {
                if k == 0 {
                    if j == e {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binomial((e - j + k - 1) as u64, (k - 1) as u64)
                }
            })
            .sum()
    }

    /// First `len` coefficients of the expansion.
    pub fn expand(&self, len: usize) -> Vec<i64> {
        (0..len).map(|e| self.coefficient(e)).collect()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*T"),
                _ => format!("{c}*T^{i}"),
            });
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" + ").replace("+ -", "- ") };
        write!(f, "({num})/(1-T)^{}", self.denominator_exp)
    }
}

pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial overflows i64")
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_one_minus_t(p: &[i64]) -> Vec<i64> {
    let mut out = vec![0; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i] += c;
        out[i + 1] -= c;
    }
    trim(out)
}

/// Exact division by `(1 - T)`; `None` if `p(1) != 0`.
pub(crate) fn divide_one_minus_t(p: &[i64]) -> Option<Vec<i64>> {
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    // p = (1 - T) q  =>  q_i = sum_{j <= i} p_j
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        q.push(acc);
    }
    Some(trim(q))
}

pub(crate) fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// Numerator `N` with `HS(R/M) = N / (1-T)^n` for the monomial ideal `M`
/// generated by `gens` in a ring with `n` variables.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    trim(numerator_rec(gens))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let (pivot_var, &most) = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i)))
        .unwrap();
    if most <= 1 {
        // pairwise coprime: product of (1 - T^deg)
        let mut num = vec![1i64];
        for g in &gens {
            let mut factor = vec![0i64; g.degree() as usize + 1];
            factor[0] = 1;
            factor[g.degree() as usize] -= 1;
            num = poly_mul(&num, &factor);
        }
        return num;
    }
    // pivot x^e with e the smallest positive exponent of x in the generators
    let e = gens
        .iter()
        .map(|g| g.exp(pivot_var))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let pivot = Monomial::var(nvars, pivot_var, e);

    // M + (p)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let plus = minimalize(plus);

    // M : p
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex: Vec<u16> = g.exps().to_vec();
            ex[pivot_var] = ex[pivot_var].saturating_sub(e);
            Monomial::new(ex)
        })
        .collect();
    let colon = minimalize(colon);

    let mut num = numerator_rec(plus);
    let tail = numerator_rec(colon);
    poly_add_shifted(&mut num, &tail, e as usize);
    trim(num)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
