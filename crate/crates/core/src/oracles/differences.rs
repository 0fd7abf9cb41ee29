use std::fmt;

/// A value read off a finite-difference table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inferred {
    Stable(i64),
    /// The last two entries of the top row disagree; sample further.
    Unstable,
}

impl Inferred {
    pub fn value(self) -> Option<i64> {
        match self {
            Inferred::Stable(v) => Some(v),
            Inferred::Unstable => None,
        }
    }
}

impl fmt::Display for Inferred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inferred::Stable(v) => write!(f, "{v}"),
            Inferred::Unstable => f.write_str("unstable"),
        }
    }
}

/// Rows `0..=order` of forward differences; row `k` has `len - k` entries.
pub fn difference_table(values: &[i64], order: usize) -> Vec<Vec<i64>> {
    let mut table = vec![values.to_vec()];
    for _ in 0..order {
        let prev = table.last().unwrap();
        let next: Vec<i64> = prev.windows(2).map(|w| w[1] - w[0]).collect();
        table.push(next);
    }
    table
}

/// Stable when the last two entries of the top row agree.
pub fn infer(table: &[Vec<i64>]) -> Inferred {
    match table.last().map(Vec::as_slice) {
        Some([.., a, b]) if a == b => Inferred::Stable(*b),
        _ => Inferred::Unstable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_sequence() {
        let vals: Vec<i64> = (0..6).map(|n| (n + 1) * (n + 2) / 2).collect();
        let t = difference_table(&vals, 2);
        assert_eq!(t[2], vec![1, 1, 1, 1]);
        assert_eq!(infer(&t), Inferred::Stable(1));
    }

    #[test]
    fn too_short_or_drifting() {
        assert_eq!(infer(&difference_table(&[1, 2], 1)), Inferred::Unstable);
        assert_eq!(infer(&difference_table(&[1, 2, 4, 8], 1)), Inferred::Unstable);
        assert_eq!(infer(&difference_table(&[0, 5, 3, 5, 7], 1)), Inferred::Stable(2));
    }
}
