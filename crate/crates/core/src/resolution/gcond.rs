use rayon::prelude::*;

use super::hilbert_burch::HilbertBurchData;
use crate::error::Result;
use crate::field::Field;

/// One inequality `ht I_t(phi) > i` with `t = r + 1 - i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GCondRow {
    pub i: usize,
    pub t: usize,
    /// `None` when `I_t(phi)` is the unit ideal (infinite height).
    pub height: Option<usize>,
    pub threshold: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCondReport {
    pub rows: Vec<GCondRow>,
    pub pass: bool,
}

impl GCondReport {
    pub fn first_failure(&self) -> Option<&GCondRow> {
        self.rows.iter().find(|r| !r.pass)
    }
}

/// The condition `G_{r+1}` in its Fitting-ideal form:
/// `ht I_{r+1-i}(phi) > i` for `1 <= i <= r`.
pub fn g_condition<F: Field>(hb: &HilbertBurchData<F>) -> Result<GCondReport> {
    let rows: Vec<GCondRow> = (1..=hb.r)
        .into_par_iter()
        .map(|i| {
            let t = hb.r + 1 - i;
            let fitting = hb.phi.matrix().minors(t as i64);
            let h = fitting.height_or_infinite()?;
            let height = (h != usize::MAX).then_some(h);
            Ok(GCondRow {
                i,
                t,
                height,
                threshold: i,
                pass: height.is_none_or(|h| h > i),
            })
        })
        .collect::<Result<_>>()?;
    let pass = rows.iter().all(|r| r.pass);
    Ok(GCondReport { rows, pass })
}
