//! Pseudo-Frobenius numbers and special gaps read off the Apéry set.
//!
//! `w(i)` is maximal in the Apéry set for the order `a ≤ b ⇔ b - a ∈ S`
//! exactly when no difference `w(k) - w(i)` with `k ≠ i` is again an Apéry
//! element. Shifting the maximal elements down by `m` gives the
//! pseudo-Frobenius numbers, and the special gaps are those `x` among them
//! with `2x ∈ S`.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

fn require_gaps(s: &NumericalSemigroup) -> Result<()> {
    if s.multiplicity() < 2 {
        return Err(Error::MultiplicityOne);
    }
    Ok(())
}

/// Whether `w(i)`, `i ≥ 1`, is maximal in the Apéry set.
pub(crate) fn is_apery_maximal(s: &NumericalSemigroup, i: usize) -> bool {
    let ap = s.apery_set();
    let wi = s.w(i);
    (1..s.multiplicity() as usize)
        .filter(|&k| k != i)
        .all(|k| s.w(k) < wi || !ap.contains(s.w(k) - wi))
}

/// Residues `i` whose Apéry element `w(i)` is maximal, increasing in `i`.
pub(crate) fn maximal_residues(s: &NumericalSemigroup) -> Vec<usize> {
    (1..s.multiplicity() as usize)
        .filter(|&i| is_apery_maximal(s, i))
        .collect()
}

/// Maximal elements of the Apéry set, in increasing order.
pub fn apery_maximals(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    require_gaps(s)?;
    let mut v: Vec<u64> = maximal_residues(s).into_iter().map(|i| s.w(i)).collect();
    v.sort_unstable();
    Ok(v)
}

pub fn pseudo_frobenius(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    let m = s.multiplicity();
    Ok(apery_maximals(s)?.into_iter().map(|w| w - m).collect())
}

pub fn special_gaps(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    Ok(pseudo_frobenius(s)?
        .into_iter()
        .filter(|&x| doubles_into(s, x))
        .collect())
}

/// `2x ∈ S`; a doubling past `u64::MAX` lies above every Apéry element.
pub(crate) fn doubles_into(s: &NumericalSemigroup, x: u64) -> bool {
    x.checked_mul(2).map_or(true, |d| s.contains(d))
}

/// Special gaps exceeding the multiplicity: the ones that can be adjoined
/// without changing it.
pub fn special_gaps_above_m(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    let m = s.multiplicity();
    Ok(special_gaps(s)?.into_iter().filter(|&x| x > m).collect())
}
