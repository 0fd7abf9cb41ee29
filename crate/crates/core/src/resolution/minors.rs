//! Determinantal ideals of polynomial matrices.

use std::collections::HashMap;
use std::sync::Arc;

use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Ring, RingHandle};

/// Dense matrix of polynomials, stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F: Field> {
    ring: Arc<Ring<F>>,
    rows: Vec<Vec<Polynomial<F>>>,
    ncols: usize,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(ring: Arc<Ring<F>>, rows: Vec<Vec<Polynomial<F>>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Self { ring, rows, ncols }
    }

    pub fn from_columns(ring: Arc<Ring<F>>, cols: &[Vec<Polynomial<F>>]) -> Self {
        let nrows = cols.first().map_or(0, Vec::len);
        let rows = (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        Self {
            ring,
            rows,
            ncols: cols.len(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<F>>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        assert_eq!(rows.len(), cols.len());
        let mut memo = HashMap::new();
        self.det_rec(mask(rows), mask(cols), &mut memo)
    }

    /// Cofactor expansion along the first remaining row, memoized on the
    /// (row set, column set) pair.
    fn det_rec(&self, rows: u64, cols: u64, memo: &mut HashMap<(u64, u64), Polynomial<F>>) -> Polynomial<F> {
        if rows == 0 {
            return self.ring.one();
        }
        if let Some(p) = memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r);
        let mut total = self.ring.zero();
        let mut sign = false;
        for c in bits(cols) {
            let entry = &self.rows[r][c];
            if !entry.is_zero() {
                let sub = self.det_rec(rest, cols & !(1 << c), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    total = if sign { &total - &term } else { &total + &term };
                }
            }
            sign = !sign;
        }
        memo.insert((rows, cols), total.clone());
        total
    }

    /// Ideal of all `t × t` minors. `t <= 0` gives the unit ideal and
    /// `t > min(rows, cols)` the zero ideal.
    pub fn minors(&self, t: i64) -> Ideal<F> {
        if t <= 0 {
            return Ideal::unit(self.ring.clone());
        }
        let t = t as usize;
        if t > self.nrows().min(self.ncols) {
            return Ideal::zero(self.ring.clone());
        }
        assert!(self.nrows() <= 64 && self.ncols <= 64);
        let mut memo = HashMap::new();
        let mut gens = Vec::new();
        for rs in subsets(self.nrows(), t) {
            for cs in subsets(self.ncols, t) {
                let m = self.det_rec(mask(&rs), mask(&cs), &mut memo);
                if !m.is_zero() && !gens.contains(&m) && !gens.contains(&-&m) {
                    gens.push(m);
                }
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Maximal minor omitting row `i` of an `(n+1) × n` matrix.
    pub fn minor_without_row(&self, i: usize) -> Polynomial<F> {
        assert_eq!(self.nrows(), self.ncols + 1);
        let rows: Vec<usize> = (0..self.nrows()).filter(|&k| k != i).collect();
        let cols: Vec<usize> = (0..self.ncols).collect();
        self.minor(&rows, &cols)
    }
}

/// Ideal of `t × t` minors.
pub fn minors<F: Field>(m: &PolyMatrix<F>, t: i64) -> Ideal<F> {
    m.minors(t)
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |acc, &i| acc | 1 << i)
}

fn bits(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m & (1 << i) != 0)
}

/// All `k`-subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
