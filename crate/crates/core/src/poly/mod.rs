//! Monomials, monomial orders and sparse multivariate polynomials.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::{Exponents, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{ArithOp, Polynomial, Term};
pub(crate) use polynomial::same_ring;
pub use ring::{Ring, RingHandle};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField, RationalField};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring3() -> Arc<Ring<PrimeField>> {
        Ring::with_prefix(PrimeField::default(), "x", 3)
    }

    #[test]
    fn arith_examples() {
        let r = ring3();
        let x = r.vars();
        let sum = &(&x[0] + &x[1]) + &(-&x[1]);
        assert_eq!(sum, x[0]);
        let prod = &(&x[0] * &x[1]) * &x[2];
        assert_eq!(prod, r.monomial(Monomial::new([1, 1, 1])));
        let f = &(&(&x[0] * &x[0]) * &x[1]) + &(&(&x[0] * &x[1]) * &x[1]);
        let g = &x[0] * &x[1];
        assert_eq!(f.arith(&g, ArithOp::ExactDivide).unwrap(), &x[0] + &x[1]);
    }

    #[test]
    fn inexact_division_is_reported() {
        let r = ring3();
        let x = r.vars();
        let f = &(&x[0] * &x[0]) + &x[1];
        assert_eq!(f.exact_div(&x[0]), Err(crate::AlgebraError::InexactDivision));
    }

    #[test]
    fn homogeneous_degree_examples() {
        let r = ring3();
        let x = r.vars();
        assert_eq!((&(&x[0] * &x[1]) + &(&x[2] * &x[2])).homogeneous_degree(), Ok(2));
        assert_eq!(
            (&x[0] + &(&x[1] * &x[1])).homogeneous_degree(),
            Err(crate::AlgebraError::NotHomogeneous)
        );
        assert_eq!(x[0].pow(3).homogeneous_degree(), Ok(3));
        assert_eq!(r.zero().homogeneous_degree(), Err(crate::AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn evaluate_examples() {
        let r = ring3();
        let f = *r.field();
        let x = r.vars();
        let p = &x[0] * &x[1];
        assert_eq!(p.evaluate(&[2, 3, 1]).unwrap(), 6);
        assert_eq!(p.evaluate(&[0, 0, 0]).unwrap(), 0);
        let r2 = Ring::with_prefix(f, "x", 2);
        let y = r2.vars();
        let q = &(&y[0] * &y[0]) + &y[1];
        assert_eq!(q.evaluate(&[1, 1]).unwrap(), 2);
        assert!(q.evaluate(&[1]).is_err());
    }

    #[test]
    fn display_uses_input_grammar() {
        let r = ring3();
        let field = *r.field();
        let x = r.vars();
        let p = &(&x[0].pow(2).scale(&field.from_i64(3)) - &x[2]) + &r.constant(field.from_i64(5));
        assert_eq!(p.to_string(), "3*x0^2 - x2 + 5");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn rational_display_marks_fractions() {
        let r = Ring::with_prefix(RationalField, "x", 1);
        let half = RationalField.div(&RationalField.one(), &RationalField.from_i64(2)).unwrap();
        assert_eq!(r.var(0).scale(&half).to_string(), "(1/2)*x0");
    }

    #[test]
    fn compose_substitutes() {
        let r = ring3();
        let y = Ring::with_prefix(PrimeField::default(), "y", 3);
        let x = r.vars();
        let yv = y.vars();
        // y0*y2 - y1^2 at (x0^2, x0 x1, x1^2) vanishes
        let g = &(&yv[0] * &yv[2]) - &yv[1].pow(2);
        let images = vec![x[0].pow(2), &x[0] * &x[1], x[1].pow(2)];
        assert!(g.compose(&images).unwrap().is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<PrimeField>> {
        proptest::collection::vec((0i64..50, proptest::collection::vec(0u16..3, 3)), 0..6).prop_map(|ts| {
            let r = ring3();
            let f = *r.field();
            Polynomial::from_terms(r, ts.into_iter().map(|(c, e)| (f.from_i64(c - 25), Monomial::new(e))).collect())
        })
    }

    fn arb_form(deg: u32) -> impl Strategy<Value = Polynomial<PrimeField>> {
        proptest::collection::vec((1i64..50, 0u16..=deg as u16, 0u16..=deg as u16), 1..5).prop_map(move |ts| {
            let r = ring3();
            let f = *r.field();
            let terms = ts
                .into_iter()
                .filter(|(_, a, b)| (a + b) as u32 <= deg)
                .map(|(c, a, b)| (f.from_i64(c), Monomial::new([a, b, deg as u16 - a - b])))
                .collect();
            Polynomial::from_terms(r, terms)
        })
    }

    proptest! {
        #[test]
        fn distributive(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let lhs = &(&f + &g) * &h;
            let rhs = &(&f * &h) + &(&g * &h);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn terms_are_canonical(f in arb_poly(), g in arb_poly()) {
            let p = &f * &g;
            let order = p.ring().order();
            prop_assert!(p.terms().windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == std::cmp::Ordering::Greater));
            prop_assert!(p.terms().iter().all(|t| t.coeff != 0));
        }

        #[test]
        fn exact_divide_inverts_mul(f in arb_form(2), g in arb_form(3)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            prop_assert_eq!(fg.exact_div(&g).unwrap(), f);
        }
    }
}
