//! Oversemigroups with the same multiplicity, enumerated in coordinate space.
//!
//! Adjoining a special gap `x > m` to `S` lowers the single coordinate at
//! index `x mod m` by `m`. Every oversemigroup of multiplicity `m` is reached
//! from `S` by a chain of such steps, so a breadth-first expansion over
//! coordinate tuples visits all of them; each generation has genus one less
//! than the previous one.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapsets::{doubles_into, is_apery_maximal, special_gaps};
use crate::semigroup::NumericalSemigroup;

/// Cap on the number of oversemigroups returned when none is given.
pub const DEFAULT_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// Fail with `LimitExceeded` instead of returning more than this many.
    pub limit: Option<usize>,
    /// Expand each generation on the rayon thread pool.
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            limit: Some(DEFAULT_LIMIT),
            parallel: false,
        }
    }
}

/// `S ∪ {x}` for a special gap `x` above the multiplicity.
pub fn adjoin(s: &NumericalSemigroup, x: u64) -> Result<NumericalSemigroup> {
    if !special_gaps(s)?.contains(&x) {
        return Err(Error::NotSpecialGap(x));
    }
    let m = s.multiplicity();
    if x <= m {
        return Err(Error::NotAboveMultiplicity(x));
    }
    let i = (x % m) as usize;
    debug_assert_eq!(s.w(i), x + m);
    Ok(NumericalSemigroup::from_coordinates_unchecked(
        m,
        s.with_coord(i, x),
    ))
}

/// Indices `i` such that `y - m·e_i` is again a semigroup of multiplicity `m`.
///
/// Besides `y_i > 2m` and Apéry maximality of `y_i`, the candidate gap
/// `x = y_i - m` must satisfy `2x ∈ S`; without that test a tuple such as
/// `(6,12,13,19)` would yield the non-semigroup `(6,7,13,19)`.
pub fn coordinate_candidates(s: &NumericalSemigroup) -> Vec<usize> {
    let m = s.multiplicity();
    (1..m as usize)
        .filter(|&i| {
            let wi = s.w(i);
            wi > 2 * m && is_apery_maximal(s, i) && doubles_into(s, wi - m)
        })
        .collect()
}

/// Work sets of the breadth-first expansion.
#[derive(Clone, Debug)]
pub struct Frontier {
    active: BTreeSet<NumericalSemigroup>,
    accumulated: BTreeSet<NumericalSemigroup>,
}

impl Frontier {
    pub fn new(start: NumericalSemigroup) -> Self {
        Self {
            active: BTreeSet::from([start.clone()]),
            accumulated: BTreeSet::from([start]),
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.active.is_empty()
    }

    pub fn active(&self) -> &BTreeSet<NumericalSemigroup> {
        &self.active
    }

    pub fn accumulated(&self) -> &BTreeSet<NumericalSemigroup> {
        &self.accumulated
    }

    /// Replaces the active set by the unseen children of its members.
    ///
    /// `keep` filters candidate gaps before they are adjoined.
    pub fn advance<F>(&mut self, parallel: bool, keep: F)
    where
        F: Fn(u64) -> bool + Sync,
    {
        let expand = |y: &NumericalSemigroup| -> Vec<NumericalSemigroup> {
            let m = y.multiplicity();
            coordinate_candidates(y)
                .into_iter()
                .filter(|&i| keep(y.w(i) - m))
                .map(|i| {
                    NumericalSemigroup::from_coordinates_unchecked(m, y.with_coord(i, y.w(i) - m))
                })
                .collect()
        };
        let children: Vec<NumericalSemigroup> = if parallel {
            let active: Vec<_> = self.active.iter().collect();
            active.par_iter().flat_map_iter(|y| expand(y)).collect()
        } else {
            self.active.iter().flat_map(expand).collect()
        };
        let mut next = BTreeSet::new();
        for c in children {
            if self.accumulated.insert(c.clone()) {
                next.insert(c);
            }
        }
        self.active = next;
    }

    pub fn into_accumulated(self) -> BTreeSet<NumericalSemigroup> {
        self.accumulated
    }
}

pub(crate) fn enumerate_with<F>(
    s: &NumericalSemigroup,
    options: &EnumerationOptions,
    keep: F,
) -> Result<Vec<NumericalSemigroup>>
where
    F: Fn(u64) -> bool + Sync,
{
    if s.multiplicity() < 2 {
        return Err(Error::MultiplicityOne);
    }
    let mut frontier = Frontier::new(s.clone());
    while !frontier.is_exhausted() {
        if let Some(limit) = options.limit {
            if frontier.accumulated().len() > limit {
                return Err(Error::LimitExceeded(limit));
            }
        }
        frontier.advance(options.parallel, &keep);
    }
    if let Some(limit) = options.limit {
        if frontier.accumulated().len() > limit {
            return Err(Error::LimitExceeded(limit));
        }
    }
    Ok(frontier.into_accumulated().into_iter().collect())
}

/// All oversemigroups of `s` with multiplicity `m`, sorted by coordinates.
pub fn oversemigroups(s: &NumericalSemigroup, limit: Option<usize>) -> Result<Vec<NumericalSemigroup>> {
    oversemigroups_with(
        s,
        &EnumerationOptions {
            limit,
            ..Default::default()
        },
    )
}

pub fn oversemigroups_with(
    s: &NumericalSemigroup,
    options: &EnumerationOptions,
) -> Result<Vec<NumericalSemigroup>> {
    enumerate_with(s, options, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gapsets::special_gaps_above_m;

    fn kunz(m: u64, c: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_coordinates(m, c.to_vec()).unwrap()
    }

    #[test]
    fn adjoin_examples() {
        let s = kunz(5, &[16, 7, 18, 9]);
        assert_eq!(adjoin(&s, 13), Ok(kunz(5, &[16, 7, 13, 9])));
        assert_eq!(adjoin(&s, 11), Ok(kunz(5, &[11, 7, 18, 9])));
        assert_eq!(adjoin(&s, 12), Err(Error::NotSpecialGap(12)));
        assert_eq!(
            adjoin(&kunz(5, &[6, 7, 8, 9]), 3),
            Err(Error::NotAboveMultiplicity(3))
        );
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(coordinate_candidates(&kunz(5, &[16, 7, 18, 9])), vec![1, 3]);
        assert_eq!(coordinate_candidates(&kunz(5, &[6, 7, 8, 9])), Vec::<usize>::new());
        assert_eq!(coordinate_candidates(&kunz(5, &[6, 12, 13, 19])), vec![4]);
    }

    #[test]
    fn candidates_are_special_gaps_above_m() {
        for s in [
            kunz(5, &[16, 7, 18, 9]),
            kunz(5, &[6, 12, 13, 19]),
            kunz(9, &[28, 29, 30, 31, 32, 24, 25, 17]),
        ] {
            let m = s.multiplicity();
            let mut from_idx: Vec<u64> = coordinate_candidates(&s)
                .into_iter()
                .map(|i| s.w(i) - m)
                .collect();
            from_idx.sort_unstable();
            assert_eq!(from_idx, special_gaps_above_m(&s).unwrap());
        }
    }

    #[test]
    fn example_lattice_of_eight() {
        let got = oversemigroups(&kunz(5, &[16, 7, 18, 9]), None).unwrap();
        let expected: BTreeSet<_> = [
            [16, 7, 18, 9],
            [11, 7, 18, 9],
            [16, 7, 13, 9],
            [11, 7, 13, 9],
            [16, 7, 8, 9],
            [6, 7, 13, 9],
            [11, 7, 8, 9],
            [6, 7, 8, 9],
        ]
        .iter()
        .map(|c| kunz(5, c))
        .collect();
        assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(got.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn maximum_has_only_itself() {
        let s = kunz(5, &[6, 7, 8, 9]);
        assert_eq!(oversemigroups(&s, None).unwrap(), vec![s]);
        let s = kunz(3, &[4, 5]);
        assert_eq!(oversemigroups(&s, None).unwrap(), vec![s]);
    }

    #[test]
    fn limit_fails_instead_of_truncating() {
        let s = kunz(5, &[16, 7, 18, 9]);
        assert_eq!(oversemigroups(&s, Some(7)), Err(Error::LimitExceeded(7)));
        assert_eq!(oversemigroups(&s, Some(8)).unwrap().len(), 8);
    }

    #[test]
    fn parallel_matches_sequential() {
        let s = kunz(9, &[28, 29, 30, 31, 32, 24, 25, 17]);
        let seq = oversemigroups(&s, None).unwrap();
        let par = oversemigroups_with(
            &s,
            &EnumerationOptions {
                limit: None,
                parallel: true,
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn multiplicity_one_rejected() {
        let n = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(oversemigroups(&n, None), Err(Error::MultiplicityOne));
    }
}
