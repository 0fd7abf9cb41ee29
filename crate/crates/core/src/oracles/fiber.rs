use rayon::prelude::*;

use super::differences::{difference_table, infer, Inferred};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{binomial, divide_one_minus_t, poly_sub, Ideal};
use crate::resolution::common_degree;

/// Dimensions of the graded pieces `[(I^n : m^∞)]_{nd}` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedFiberSample {
    pub d: u32,
    pub r: usize,
    /// `(n, dim)` pairs.
    pub samples: Vec<(usize, i64)>,
    /// Forward differences of the dims up to order `r`.
    pub differences: Vec<Vec<i64>>,
    pub inferred_multiplicity: Inferred,
}

impl SaturatedFiberSample {
    pub fn dims(&self) -> Vec<i64> {
        self.samples.iter().map(|&(_, v)| v).collect()
    }
}

/// Lengths of `H^0_m(I^n / I^{n+1})` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JMultSample {
    pub r: usize,
    pub samples: Vec<(usize, i64)>,
    pub differences: Vec<Vec<i64>>,
    pub inferred_j: Inferred,
}

fn check_sweep<F: Field>(ideal: &Ideal<F>, n_max: usize) -> Result<(u32, usize)> {
    let d = common_degree(ideal.gens())?;
    let r = ideal.ring().nvars() - 1;
    if n_max < r + 2 {
        return Err(AlgebraError::InvalidParameters(format!(
            "sweep bound {n_max} is below r + 2 = {}",
            r + 2
        )));
    }
    Ok((d, r))
}

/// `I^0, ..., I^top`.
fn powers<F: Field>(ideal: &Ideal<F>, top: usize) -> Vec<Ideal<F>> {
    let mut out = vec![Ideal::unit(ideal.ring().clone())];
    for _ in 0..top {
        let next = out.last().unwrap().product(ideal);
        out.push(next);
    }
    out
}

/// Samples `dim_k [(I^n : m^∞)]_{nd}` and reads the multiplicity of the
/// saturated special fiber ring off the `r`-th differences.
pub fn saturated_fiber_sample<F: Field>(ideal: &Ideal<F>, n_max: usize) -> Result<SaturatedFiberSample> {
    let (d, r) = check_sweep(ideal, n_max)?;
    let m = Ideal::maximal(ideal.ring().clone());
    let dims: Vec<i64> = powers(ideal, n_max)
        .par_iter()
        .enumerate()
        .map(|(n, p)| {
            let sat = p.saturate(&m);
            let deg = n * d as usize;
            let ambient = binomial((deg + r) as u64, r as u64);
            Ok(ambient - sat.hilbert_function(deg)?)
        })
        .collect::<Result<_>>()?;
    let differences = difference_table(&dims, r);
    Ok(SaturatedFiberSample {
        d,
        r,
        samples: dims.into_iter().enumerate().collect(),
        inferred_multiplicity: infer(&differences),
        differences,
    })
}

/// Samples the lengths of `H^0_m(I^n / I^{n+1}) = K_n / I^{n+1}` with
/// `K_n = (I^{n+1} : m^∞) ∩ I^n`, and reads `j(I)` off the `r`-th differences.
pub fn j_mult_sample<F: Field>(ideal: &Ideal<F>, n_max: usize) -> Result<JMultSample> {
    let (_, r) = check_sweep(ideal, n_max)?;
    let nvars = ideal.ring().nvars();
    let m = Ideal::maximal(ideal.ring().clone());
    let pw = powers(ideal, n_max + 1);
    let lengths: Vec<i64> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let next = &pw[n + 1];
            let k = next.saturate(&m).intersect(&pw[n]);
            let big = next.hilbert_series()?.numerator_over(nvars);
            let small = k.hilbert_series()?.numerator_over(nvars);
            let mut diff = poly_sub(&big, &small);
            for _ in 0..nvars {
                diff = divide_one_minus_t(&diff).ok_or(AlgebraError::NonFiniteLength)?;
            }
            Ok(diff.iter().sum())
        })
        .collect::<Result<_>>()?;
    let differences = difference_table(&lengths, r);
    Ok(JMultSample {
        r,
        samples: lengths.into_iter().enumerate().collect(),
        inferred_j: infer(&differences),
        differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, Ring, RingHandle};

    fn square() -> Ideal<PrimeField> {
        let r = Ring::new(PrimeField::default(), ["s", "t"], MonomialOrder::Grevlex);
        let v = r.vars();
        Ideal::new(r.clone(), vec![v[0].pow(2), v[1].pow(2)])
    }

    fn cremona() -> Ideal<PrimeField> {
        let r = Ring::with_prefix(PrimeField::default(), "x", 3);
        let x = r.vars();
        Ideal::new(r.clone(), vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]])
    }

    #[test]
    fn m_primary_fiber_dims() {
        let s = saturated_fiber_sample(&square(), 4).unwrap();
        assert_eq!(s.dims(), vec![1, 3, 5, 7, 9]);
        assert_eq!(s.inferred_multiplicity, Inferred::Stable(2));
    }

    #[test]
    fn cremona_fiber_dims() {
        let s = saturated_fiber_sample(&cremona(), 5).unwrap();
        assert_eq!(s.dims(), vec![1, 3, 6, 10, 15, 21]);
        assert_eq!(s.inferred_multiplicity, Inferred::Stable(1));
    }

    #[test]
    fn m_primary_j() {
        let j = j_mult_sample(&square(), 4).unwrap();
        // I^n / I^{n+1} has length 4n + 4 here
        assert_eq!(j.samples.iter().map(|&(_, v)| v).collect::<Vec<_>>(), vec![4, 8, 12, 16, 20]);
        assert_eq!(j.inferred_j, Inferred::Stable(4));
    }

    #[test]
    fn cremona_j() {
        let j = j_mult_sample(&cremona(), 5).unwrap();
        assert_eq!(j.inferred_j, Inferred::Stable(2));
    }

    #[test]
    fn sweep_bound_is_checked() {
        assert!(matches!(
            saturated_fiber_sample(&cremona(), 3),
            Err(AlgebraError::InvalidParameters(_))
        ));
    }
}
