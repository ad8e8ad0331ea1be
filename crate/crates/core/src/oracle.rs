//! Brute-force reference computations.
//!
//! Everything here works from the definitions on explicit finite sets of
//! integers and is exponential in the genus. These functions exist to check
//! the main algorithms and back the CLI's `--verify` mode; they refuse to run
//! past their budget instead of truncating.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest number of gaps above the multiplicity whose subsets are
    /// enumerated.
    pub max_gap_bound: usize,
    /// Largest number of subsets examined by the cover search.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_gap_bound: 20,
            max_subsets: 1 << 22,
        }
    }
}

/// `true` when `ℕ \ gaps` is closed under addition. `gaps` is sorted.
fn complement_is_closed(gaps: &[u64]) -> bool {
    let Some(&f) = gaps.last() else {
        return true;
    };
    let mut gap = vec![false; f as usize + 1];
    for &g in gaps {
        gap[g as usize] = true;
    }
    gaps.iter().all(|&g| (1..=g / 2).all(|x| gap[x as usize] || gap[(g - x) as usize]))
}

/// Gaps `x` for which `S ∪ {x}` is again a numerical semigroup.
pub fn brute_special_gaps(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    if s.multiplicity() < 2 {
        return Err(Error::MultiplicityOne);
    }
    let gaps = s.gaps();
    Ok(gaps
        .iter()
        .filter(|&&x| {
            let rest: Vec<u64> = gaps.iter().copied().filter(|&g| g != x).collect();
            complement_is_closed(&rest)
        })
        .copied()
        .collect())
}

/// Every `T ⊇ S` of multiplicity `m`, by testing each subset of the gaps
/// above `m` for closure. Sorted by coordinates.
pub fn brute_oversemigroups(
    s: &NumericalSemigroup,
    budget: &OracleBudget,
) -> Result<Vec<NumericalSemigroup>> {
    let m = s.multiplicity();
    if m < 2 {
        return Err(Error::MultiplicityOne);
    }
    let gaps = s.gaps();
    let (fixed, free): (Vec<u64>, Vec<u64>) = gaps.into_iter().partition(|&g| g < m);
    if free.len() > budget.max_gap_bound {
        return Err(Error::BudgetExceeded(format!(
            "{} gaps above the multiplicity, bound is {}",
            free.len(),
            budget.max_gap_bound
        )));
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << free.len()) {
        let mut kept = fixed.clone();
        kept.extend(
            free.iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &g)| g),
        );
        if complement_is_closed(&kept) {
            let t = NumericalSemigroup::from_gaps(&kept)?;
            debug_assert_eq!(t.multiplicity(), m);
            out.insert(t);
        }
    }
    Ok(out.into_iter().collect())
}

/// `S` is not the intersection of two multiplicity-`m` semigroups that
/// strictly contain it.
pub fn brute_is_m_irreducible(s: &NumericalSemigroup, budget: &OracleBudget) -> Result<bool> {
    let over = brute_oversemigroups(s, budget)?;
    Ok(irreducible_within(s, &over))
}

/// Definitional m-irreducibility of `t`, given a family that contains every
/// multiplicity-`m` oversemigroup of `t`.
fn irreducible_within(t: &NumericalSemigroup, family: &[NumericalSemigroup]) -> bool {
    let above: Vec<&NumericalSemigroup> = family
        .iter()
        .filter(|u| *u != t && t.is_subset(u).unwrap_or(false))
        .collect();
    !above.iter().enumerate().any(|(a, u1)| {
        above[a..].iter().any(|u2| {
            u1.coords()
                .iter()
                .zip(u2.coords())
                .map(|(x, y)| *x.max(y))
                .eq(t.coords().iter().copied())
        })
    })
}

/// Inclusion-minimal m-irreducible oversemigroups of `S`, from the
/// definitions. Sorted by coordinates.
pub fn brute_minimal_m_irreducible(
    s: &NumericalSemigroup,
    budget: &OracleBudget,
) -> Result<Vec<NumericalSemigroup>> {
    let over = brute_oversemigroups(s, budget)?;
    let irreducible: Vec<&NumericalSemigroup> =
        over.iter().filter(|t| irreducible_within(t, &over)).collect();
    Ok(irreducible
        .iter()
        .filter(|t| {
            !irreducible
                .iter()
                .any(|u| u != *t && u.is_subset(t).unwrap_or(false))
        })
        .map(|t| (*t).clone())
        .collect())
}

/// Size of a smallest subfamily of `p_sets` whose union contains `target`,
/// found by examining every subfamily.
pub fn brute_min_cover(target: &[u64], p_sets: &[Vec<u64>], budget: &OracleBudget) -> Result<usize> {
    let n = p_sets.len();
    if n >= 64 || (1u64 << n) > budget.max_subsets {
        return Err(Error::BudgetExceeded(format!("2^{n} subfamilies")));
    }
    let want: BTreeSet<u64> = target.iter().copied().collect();
    (0u64..(1 << n))
        .filter(|mask| {
            let union: BTreeSet<u64> = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .flat_map(|b| p_sets[b].iter().copied())
                .collect();
            want.is_subset(&union)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .ok_or(Error::Infeasible)
}

/// All semigroups with multiplicity `m` and Frobenius number `f`.
pub fn enumerate_s_m_f(m: u64, f: u64, budget: &OracleBudget) -> Result<Vec<NumericalSemigroup>> {
    if m < 2 || f + 1 < m || f % m == 0 {
        return Err(Error::InvalidPair { m, frobenius: f });
    }
    let seed_gaps: Vec<u64> = (1..=f).filter(|x| x % m != 0).collect();
    let seed = NumericalSemigroup::from_gaps(&seed_gaps)?;
    Ok(brute_oversemigroups(&seed, budget)?
        .into_iter()
        .filter(|t| t.frobenius() == Ok(f))
        .collect())
}

/// Inclusion-maximal members of `enumerate_s_m_f(m, f)`.
pub fn brute_maximal(m: u64, f: u64, budget: &OracleBudget) -> Result<Vec<NumericalSemigroup>> {
    let all = enumerate_s_m_f(m, f, budget)?;
    Ok(all
        .iter()
        .filter(|t| !all.iter().any(|u| u != *t && t.is_subset(u).unwrap_or(false)))
        .cloned()
        .collect())
}
