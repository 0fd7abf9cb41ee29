#![allow(dead_code)]

use std::sync::Arc;

use hbfiber_core::{Ideal, MonomialOrder, Polynomial, PrimeField, Ring, RingHandle};

pub type P = Polynomial<PrimeField>;

pub fn xring(n: usize) -> Arc<Ring<PrimeField>> {
    Ring::with_prefix(PrimeField::default(), "x", n)
}

pub fn st() -> Arc<Ring<PrimeField>> {
    Ring::new(PrimeField::default(), ["s", "t"], MonomialOrder::Grevlex)
}

pub fn ideal(gens: Vec<P>) -> Ideal<PrimeField> {
    Ideal::new(gens[0].ring().clone(), gens)
}

/// `(x0 x1, x0 x2, x1 x2)`.
pub fn cremona() -> Ideal<PrimeField> {
    let x = xring(3).vars();
    ideal(vec![&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]])
}

/// `(s^2, t^2)`.
pub fn square() -> Ideal<PrimeField> {
    let v = st().vars();
    ideal(vec![v[0].pow(2), v[1].pow(2)])
}

/// `(s^3, s^2 t, t^3)`.
pub fn cubic() -> Ideal<PrimeField> {
    let v = st().vars();
    ideal(vec![v[0].pow(3), &v[0].pow(2) * &v[1], v[1].pow(3)])
}

/// Maximal minors of the 3x2 matrix with columns
/// `(x0^2, x1^2, x2^2)` and `(x1^2, x2^2, x0^2)`.
pub fn quartic() -> Ideal<PrimeField> {
    let x = xring(3).vars();
    let sq: Vec<P> = x.iter().map(|v| v.pow(2)).collect();
    ideal(vec![
        &sq[1] * &sq[0] - &sq[2] * &sq[2],
        &sq[0] * &sq[0] - &sq[1] * &sq[2],
        &sq[2] * &sq[0] - &sq[1] * &sq[1],
    ])
}

/// `(x0, x1)^2` in three variables: perfect of height two but not `G_3`.
pub fn g_fail() -> Ideal<PrimeField> {
    let x = xring(3).vars();
    ideal(vec![x[0].pow(2), &x[0] * &x[1], x[1].pow(2)])
}
