//! Minimal decompositions into m-irreducible semigroups.
//!
//! The inclusion-minimal m-irreducible oversemigroups of `S` are found by a
//! pruned breadth-first search. A family of oversemigroups intersects to `S`
//! exactly when every special gap of `S` above `m` is missing from one of its
//! members, so choosing the fewest minimal elements is a set cover over the
//! sets `P(T) = {h ∈ SG(S) : h > m, h ∉ T}`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapsets::special_gaps_above_m;
use crate::oversemigroups::coordinate_candidates;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    /// Special gaps of `S` above the multiplicity.
    pub target: Vec<u64>,
    /// All inclusion-minimal m-irreducible oversemigroups, sorted.
    pub minimals: Vec<NumericalSemigroup>,
    /// Chosen components, sorted; their intersection is `S`.
    pub components: Vec<NumericalSemigroup>,
    /// `P(T)` for each component, in the same order.
    pub p_sets: Vec<Vec<u64>>,
}

impl DecompositionResult {
    /// Number of sets in the minimum cover of `target`: zero when `S` is the
    /// maximum of its lattice, otherwise the number of components.
    pub fn cover_size(&self) -> usize {
        if self.target.is_empty() {
            0
        } else {
            self.components.len()
        }
    }
}

fn require_gaps(s: &NumericalSemigroup) -> Result<()> {
    if s.multiplicity() < 2 {
        return Err(Error::MultiplicityOne);
    }
    Ok(())
}

/// Inclusion-minimal elements of the m-irreducible oversemigroups of `s`.
///
/// The search runs generation by generation. Within a generation the
/// members with at most one special gap above `m` are recorded first; the
/// others are then expanded, dropping any child that contains a recorded
/// semigroup.
pub fn minimal_m_irreducible_oversemigroups(
    s: &NumericalSemigroup,
    parallel: bool,
) -> Result<Vec<NumericalSemigroup>> {
    require_gaps(s)?;
    let m = s.multiplicity();
    let mut found: Vec<NumericalSemigroup> = Vec::new();
    let mut active = BTreeSet::from([s.clone()]);
    while !active.is_empty() {
        let mut expand = Vec::new();
        for t in active {
            let cands = coordinate_candidates(&t);
            if cands.len() <= 1 {
                found.push(t);
            } else {
                expand.push((t, cands));
            }
        }
        let children = |(t, cands): &(NumericalSemigroup, Vec<usize>)| -> Vec<NumericalSemigroup> {
            cands
                .iter()
                .map(|&i| NumericalSemigroup::from_coordinates_unchecked(m, t.with_coord(i, t.w(i) - m)))
                .filter(|c| !found.iter().any(|b| b.is_subset(c).unwrap_or(false)))
                .collect()
        };
        active = if parallel {
            expand.par_iter().flat_map_iter(children).collect()
        } else {
            expand.iter().flat_map(children).collect()
        };
    }
    found.sort();
    Ok(found)
}

/// `{h ∈ SG(S) : h > m, h ∉ T}` for an oversemigroup `T` of `S`.
pub fn p_set(s: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<Vec<u64>> {
    if !s.is_subset(t)? {
        return Err(Error::NotOversemigroup);
    }
    Ok(special_gaps_above_m(s)?
        .into_iter()
        .filter(|&h| !t.contains(h))
        .collect())
}

/// Indices of a minimum family of `sets` whose union contains `target`.
///
/// Sizes are tried in increasing order and subsets of one size in
/// lexicographic order of indices, so the first hit is the lexicographically
/// least minimum cover. `None` when even all sets together fall short.
pub fn min_cover(target: &[u64], sets: &[Vec<u64>]) -> Option<Vec<usize>> {
    let words = target.len().div_ceil(64).max(1);
    let mask_of = |set: &[u64]| {
        let mut mask = vec![0u64; words];
        for (bit, t) in target.iter().enumerate() {
            if set.contains(t) {
                mask[bit / 64] |= 1 << (bit % 64);
            }
        }
        mask
    };
    let full = mask_of(target);
    let masks: Vec<Vec<u64>> = sets.iter().map(|s| mask_of(s)).collect();

    // suffix[i] = union of masks[i..]
    let mut suffix = vec![vec![0u64; words]; masks.len() + 1];
    for i in (0..masks.len()).rev() {
        suffix[i] = or(&suffix[i + 1], &masks[i]);
    }
    if !covers(&suffix[0], &full) {
        return None;
    }

    fn or(a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| x | y).collect()
    }
    fn covers(have: &[u64], want: &[u64]) -> bool {
        have.iter().zip(want).all(|(h, w)| h & w == *w)
    }
    fn search(
        start: usize,
        left: usize,
        acc: &[u64],
        full: &[u64],
        masks: &[Vec<u64>],
        suffix: &[Vec<u64>],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if left == 0 {
            return covers(acc, full);
        }
        for i in start..=masks.len().saturating_sub(left) {
            if i >= masks.len() || !covers(&or(acc, &suffix[i]), full) {
                break;
            }
            chosen.push(i);
            if search(i + 1, left - 1, &or(acc, &masks[i]), full, masks, suffix, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let empty = vec![0u64; words];
    (0..=masks.len()).find_map(|k| {
        let mut chosen = Vec::with_capacity(k);
        search(0, k, &empty, &full, &masks, &suffix, &mut chosen).then_some(chosen)
    })
}

/// A decomposition of `s` into the fewest m-irreducible semigroups.
pub fn minimal_decomposition(s: &NumericalSemigroup, parallel: bool) -> Result<DecompositionResult> {
    let target = special_gaps_above_m(s)?;
    let minimals = minimal_m_irreducible_oversemigroups(s, parallel)?;
    let all_p: Vec<Vec<u64>> = minimals
        .iter()
        .map(|t| p_set(s, t))
        .collect::<Result<_>>()?;
    let chosen = min_cover(&target, &all_p).ok_or(Error::Infeasible)?;
    let (components, p_sets) = if chosen.is_empty() {
        (vec![s.clone()], vec![Vec::new()])
    } else {
        chosen
            .iter()
            .map(|&i| (minimals[i].clone(), all_p[i].clone()))
            .unzip()
    };
    debug_assert_eq!(NumericalSemigroup::intersect(&components).as_ref(), Ok(s));
    Ok(DecompositionResult {
        target,
        minimals,
        components,
        p_sets,
    })
}

/// `min(|SG(S) ∩ (m, ∞)|, m - 1)`, an upper bound on the cover size.
pub fn decomposition_bound(s: &NumericalSemigroup) -> Result<usize> {
    let target = special_gaps_above_m(s)?;
    Ok(target.len().min(s.multiplicity() as usize - 1))
}
