use std::cmp::Ordering;

use super::Monomial;
use crate::error::{AlgebraError, Result};

/// Monomial orders supported by the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic, `x0 > x1 > ...`.
    Lex,
    /// Product order: grevlex on the first `k` variables, then grevlex on the
    /// rest. Eliminates the first `k` variables.
    Block(usize),
}

impl MonomialOrder {
    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without the length check. Hot path for the Gröbner engine.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.exps(), b.exps())),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Block(k) => {
                let (ah, at) = a.exps().split_at(k);
                let (bh, bt) = b.exps().split_at(k);
                grevlex_slice(ah, bh).then_with(|| grevlex_slice(at, bt))
            }
        }
    }
}

/// Tie break of grevlex on equal degrees: the last nonzero entry of `a - b`
/// being negative makes `a` greater.
#[inline]
fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x1^2 > x0*x2 in grevlex
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block_examples() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let b = MonomialOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 1, 2]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(MonomialOrder::Grevlex.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (1usize..4).prop_map(MonomialOrder::Block),
        ]
    }

    fn mono4() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(o in orders(), a in mono4(), b in mono4(), c in mono4()) {
            if o.cmp(&a, &b) == Ordering::Greater {
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), Ordering::Greater);
            }
        }

        #[test]
        fn order_is_antisymmetric(o in orders(), a in mono4(), b in mono4()) {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
        }

        #[test]
        fn block_order_eliminates(k in 1usize..4, a in mono4(), b in mono4()) {
            let o = MonomialOrder::Block(k);
            let a_hits = a.exps()[..k].iter().any(|&e| e > 0);
            let b_free = b.exps()[..k].iter().all(|&e| e == 0);
            if a_hits && b_free {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Greater);
            }
        }
    }
}
