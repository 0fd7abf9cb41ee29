use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fiber::SaturatedFiberSample;
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldKind};
use crate::groebner::Ideal;
use crate::multiplicity::elementary_symmetric;
use crate::poly::{MonomialOrder, Polynomial, Ring, RingHandle};
use crate::resolution::{common_degree, GCondReport, HilbertBurchData};

/// Kernel of `k[y_0, ..., y_s] -> k[x]`, `y_i -> f_i`: the ideal of the
/// closure of the image of the map given by the `f_i`.
pub fn image_ideal<F: Field>(f: &[Polynomial<F>]) -> Result<Ideal<F>> {
    common_degree(f)?;
    let source = f[0].ring();
    let nx = source.nvars();
    let ny = f.len();
    let names = source
        .names()
        .iter()
        .map(|n| format!("_{n}"))
        .chain((0..ny).map(|i| format!("y{i}")));
    let ext = Ring::new(source.field().clone(), names, MonomialOrder::Block(nx));
    let map: Vec<usize> = (0..nx).collect();
    let gens = f
        .iter()
        .enumerate()
        .map(|(i, fi)| &ext.var(nx + i) - &fi.embed(&ext, &map))
        .collect();
    Ideal::new(ext, gens).eliminate(nx)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalMapReport<F: Field> {
    /// Projective dimension of the image `Y`.
    pub dim_y: usize,
    pub deg_y: u64,
    pub e_r: BigInt,
    pub deg_f: u64,
    pub birational: bool,
    pub kernel_gens: Vec<Polynomial<F>>,
    /// Set when `G_{r+1}` failed; the numbers are then unsupported.
    pub hypothesis_violated: bool,
}

/// Degree of the image and of the map, from the Hilbert series of the
/// image ideal and `deg F * deg Y = e_r(mu)`.
pub fn map_degree_report<F: Field>(hb: &HilbertBurchData<F>, g: &GCondReport) -> Result<RationalMapReport<F>> {
    let kernel = image_ideal(&hb.generators)?;
    let hs = kernel.hilbert_series()?;
    let krull = hs.dimension();
    if krull != hb.r + 1 {
        return Err(AlgebraError::DimensionAnomaly { expected: hb.r + 1, found: krull });
    }
    let deg_y = hs.degree() as u64;
    let mu: Vec<u64> = hb.mu.iter().map(|&m| m as u64).collect();
    let e_r = elementary_symmetric(hb.r, &mu)?;
    if deg_y == 0 || !(&e_r % deg_y).is_zero() {
        return Err(AlgebraError::NonIntegralDegree {
            deg_y,
            e_r: e_r.to_u64().unwrap_or(u64::MAX),
        });
    }
    let deg_f = (&e_r / deg_y).to_u64().expect("map degree fits in u64");
    Ok(RationalMapReport {
        dim_y: krull - 1,
        deg_y,
        birational: deg_f == 1,
        e_r,
        deg_f,
        kernel_gens: kernel.gens().to_vec(),
        hypothesis_violated: !g.pass,
    })
}

/// Outcome of the random-fiber heuristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericFiberEstimate {
    /// Most frequent fiber degree; ties go to the smaller value.
    pub degree: i64,
    /// Fiber degree per trial; `None` when the fiber was not finite.
    pub trials: Vec<Option<i64>>,
}

const POINT_ATTEMPTS: usize = 64;

/// Counts the points of `F^{-1}(F(p))` for random `p` over a prime field.
///
/// The fiber is `(q_j f_i - q_i f_j : I^∞)` with `q = F(p)`. Over a finite
/// field a special point or inseparability can skew the count, so this is a
/// heuristic only.
pub fn generic_fiber_degree<F: Field>(f: &[Polynomial<F>], trials: usize, seed: u64) -> Result<GenericFiberEstimate> {
    common_degree(f)?;
    let ring = f[0].ring().clone();
    let field = ring.field().clone();
    let p = match field.kind() {
        FieldKind::Prime(p) => p,
        FieldKind::Rational => return Err(AlgebraError::NotPrimeField),
    };
    if trials < 3 {
        return Err(AlgebraError::InvalidParameters(format!("need at least 3 trials, got {trials}")));
    }
    let base = Ideal::new(ring.clone(), f.to_vec());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::with_capacity(trials);
    for _ in 0..trials {
        let image = (0..POINT_ATTEMPTS).find_map(|_| {
            let point: Vec<F::Elem> = (0..ring.nvars())
                .map(|_| field.from_i64(rng.gen_range(0..p as i64)))
                .collect();
            let q: Vec<F::Elem> = f.iter().map(|fi| fi.evaluate(&point).expect("point has the right length")).collect();
            q.iter().any(|c| !field.is_zero(c)).then_some(q)
        });
        let Some(q) = image else {
            results.push(None);
            continue;
        };
        let mut gens = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                gens.push(&f[i].scale(&q[j]) - &f[j].scale(&q[i]));
            }
        }
        let fiber = Ideal::new(ring.clone(), gens).saturate(&base);
        let hs = fiber.hilbert_series()?;
        results.push((!hs.is_zero() && hs.dimension() == 1).then(|| hs.degree()));
    }
    let mut votes: BTreeMap<i64, usize> = BTreeMap::new();
    for v in results.iter().flatten() {
        *votes.entry(*v).or_default() += 1;
    }
    let degree = votes
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&d, _)| d)
        .ok_or(AlgebraError::AllTrialsDegenerate)?;
    Ok(GenericFiberEstimate { degree, trials: results })
}

/// One row of `dim [(I^n : m^∞)]_{nd} >= dim [k[y]/ker]_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityRow {
    pub n: usize,
    pub fiber_dim: i64,
    pub image_dim: i64,
    pub holds: bool,
}

/// Compares the saturated fiber dims with the Hilbert function of the image:
/// the special fiber ring embeds in the saturated one degree by degree.
pub fn fiber_image_inequality<F: Field>(sample: &SaturatedFiberSample, kernel: &Ideal<F>) -> Result<Vec<InequalityRow>> {
    let hs = kernel.hilbert_series()?;
    Ok(sample
        .samples
        .iter()
        .map(|&(n, fiber_dim)| {
            let image_dim = hs.coefficient(n);
            InequalityRow { n, fiber_dim, image_dim, holds: fiber_dim >= image_dim }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::oracles::saturated_fiber_sample;
    use crate::resolution::{g_condition, hilbert_burch};

    fn st() -> std::sync::Arc<Ring<PrimeField>> {
        Ring::new(PrimeField::default(), ["s", "t"], MonomialOrder::Grevlex)
    }

    fn kernel_vanishes(f: &[Polynomial<PrimeField>], k: &Ideal<PrimeField>) {
        for g in k.gens() {
            assert!(g.compose(f).unwrap().is_zero(), "{g} does not vanish on the image");
        }
    }

    #[test]
    fn conic_image() {
        let r = Ring::with_prefix(PrimeField::default(), "x", 2);
        let x = r.vars();
        let f = vec![x[0].pow(2), &x[0] * &x[1], x[1].pow(2)];
        let k = image_ideal(&f).unwrap();
        assert_eq!(k.gens().len(), 1);
        let y = k.ring().vars();
        assert!(k.equals(&Ideal::new(k.ring().clone(), vec![&(&y[0] * &y[2]) - &y[1].pow(2)])));
        kernel_vanishes(&f, &k);
    }

    #[test]
    fn cremona_image_is_dense() {
        let r = Ring::with_prefix(PrimeField::default(), "x", 3);
        let x = r.vars();
        let f = vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]];
        assert!(image_ideal(&f).unwrap().is_zero());
    }

    #[test]
    fn cubic_image_is_a_cubic() {
        let v = st().vars();
        let f = vec![v[0].pow(3), &v[0].pow(2) * &v[1], v[1].pow(3)];
        let k = image_ideal(&f).unwrap();
        assert_eq!(k.gens().len(), 1);
        assert_eq!(k.gens()[0].homogeneous_degree().unwrap(), 3);
        kernel_vanishes(&f, &k);
    }

    #[test]
    fn map_degrees() {
        let v = st().vars();
        let cases = [
            (vec![v[0].pow(2), v[1].pow(2)], (1, 2, false)),
            (vec![v[0].pow(3), &v[0].pow(2) * &v[1], v[1].pow(3)], (3, 1, true)),
        ];
        for (f, (deg_y, deg_f, bir)) in cases {
            let i = Ideal::new(f[0].ring().clone(), f.clone());
            let hb = hilbert_burch(&i).unwrap();
            let rep = map_degree_report(&hb, &g_condition(&hb).unwrap()).unwrap();
            assert_eq!((rep.deg_y, rep.deg_f, rep.birational), (deg_y, deg_f, bir));
            assert_eq!(BigInt::from(rep.deg_y * rep.deg_f), rep.e_r);
            assert!(!rep.hypothesis_violated);
            assert_eq!(generic_fiber_degree(&f, 5, 0).unwrap().degree, deg_f as i64);
        }
    }

    #[test]
    fn fiber_heuristic_needs_prime_field() {
        let r = Ring::new(RationalField, ["s", "t"], MonomialOrder::Grevlex);
        let v = r.vars();
        assert_eq!(
            generic_fiber_degree(&[v[0].pow(2), v[1].pow(2)], 5, 0),
            Err(AlgebraError::NotPrimeField)
        );
        let w = st().vars();
        assert!(generic_fiber_degree(&[w[0].pow(2), w[1].pow(2)], 2, 0).is_err());
    }

    #[test]
    fn inequality_on_cubic() {
        let v = st().vars();
        let f = vec![v[0].pow(3), &v[0].pow(2) * &v[1], v[1].pow(3)];
        let i = Ideal::new(f[0].ring().clone(), f.clone());
        let sample = saturated_fiber_sample(&i, 4).unwrap();
        let rows = fiber_image_inequality(&sample, &image_ideal(&f).unwrap()).unwrap();
        assert!(rows.iter().all(|r| r.holds));
        assert_eq!(rows[0].fiber_dim, 1);
        assert_eq!(rows[0].image_dim, 1);
    }
}
