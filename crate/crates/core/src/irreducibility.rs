//! Irreducibility with and without a fixed multiplicity.
//!
//! A semigroup `S` of multiplicity `m` and Frobenius number `F` is
//! m-irreducible when it is maximal among the semigroups with the same `m`
//! and `F`. Three equivalent tests are available: at most one special gap
//! above `m`, genus equal to the minimum genus `g(m, F)`, or one of the three
//! shapes `{0} ∪ {x ≥ m}`, `{0} ∪ {x ≥ m, x ≠ F}` with `m < F < 2m`, and the
//! ordinary irreducible semigroups of multiplicity `m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gapsets::special_gaps_above_m;
use crate::oversemigroups::{enumerate_with, EnumerationOptions};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassificationLabel {
    /// m-irreducible with odd Frobenius number.
    MSymmetric,
    /// m-irreducible with even Frobenius number.
    MPseudosymmetric,
    NotMIrreducible,
}

impl ClassificationLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassificationLabel::MSymmetric => "m-symmetric",
            ClassificationLabel::MPseudosymmetric => "m-pseudosymmetric",
            ClassificationLabel::NotMIrreducible => "not-m-irreducible",
        }
    }
}

impl fmt::Display for ClassificationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A multiplicity and Frobenius number realised by at least one semigroup:
/// `F ≥ m - 1` and `F` not a multiple of `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusPair {
    m: u64,
    frobenius: u64,
}

impl FrobeniusPair {
    pub fn new(m: u64, frobenius: u64) -> Result<Self> {
        if m < 2 || frobenius + 1 < m || frobenius % m == 0 {
            return Err(Error::InvalidPair { m, frobenius });
        }
        Ok(Self { m, frobenius })
    }

    pub fn of(s: &NumericalSemigroup) -> Result<Self> {
        Self::new(s.multiplicity(), s.frobenius()?)
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }
}

fn require_gaps(s: &NumericalSemigroup) -> Result<()> {
    if s.multiplicity() < 2 {
        return Err(Error::MultiplicityOne);
    }
    Ok(())
}

fn half_ceil(f: u64) -> u64 {
    (f + 1).div_ceil(2)
}

/// Irreducible in the ordinary sense: `g(S) = ⌈(F(S) + 1) / 2⌉`.
pub fn is_irreducible(s: &NumericalSemigroup) -> Result<bool> {
    require_gaps(s)?;
    Ok(s.genus() == half_ceil(s.frobenius()?))
}

pub fn is_m_irreducible(s: &NumericalSemigroup) -> Result<bool> {
    let irreducible = special_gaps_above_m(s)?.len() <= 1;
    debug_assert_eq!(irreducible, genus_criterion(s)?);
    Ok(irreducible)
}

/// `g(S) ∈ {m - 1, m, ⌈(F + 1) / 2⌉}`.
pub(crate) fn genus_criterion(s: &NumericalSemigroup) -> Result<bool> {
    let m = s.multiplicity();
    let g = s.genus();
    Ok(g == m - 1 || g == m || g == half_ceil(s.frobenius()?))
}

pub fn classify(s: &NumericalSemigroup) -> Result<ClassificationLabel> {
    Ok(if !is_m_irreducible(s)? {
        ClassificationLabel::NotMIrreducible
    } else if s.frobenius()? % 2 == 1 {
        ClassificationLabel::MSymmetric
    } else {
        ClassificationLabel::MPseudosymmetric
    })
}

/// Least genus of a semigroup with multiplicity `m` and Frobenius number `F`.
pub fn min_genus(pair: FrobeniusPair) -> u64 {
    let (m, f) = (pair.m, pair.frobenius);
    if f + 1 == m {
        m - 1
    } else if f < 2 * m {
        m
    } else {
        half_ceil(f)
    }
}

/// The single maximal semigroup of `S(m, F)` when `F < 2m`.
pub fn canonical_maximal(pair: FrobeniusPair) -> Result<NumericalSemigroup> {
    let (m, f) = (pair.m, pair.frobenius);
    if f > 2 * m {
        return Err(Error::NotUnique { m, frobenius: f });
    }
    let base = NumericalSemigroup::maximum(m)?;
    if f + 1 == m {
        return Ok(base);
    }
    let i = (f % m) as usize;
    Ok(NumericalSemigroup::from_coordinates_unchecked(
        m,
        base.with_coord(i, f + m),
    ))
}

/// `{0} ∪ m·ℕ ∪ {x > F}`, the smallest member of `S(m, F)`.
pub fn frobenius_seed(pair: FrobeniusPair) -> NumericalSemigroup {
    let (m, f) = (pair.m, pair.frobenius);
    let coords = (1..m)
        .map(|i| {
            // least x > f with x ≡ i (mod m)
            let r = (f + 1) % m;
            f + 1 + (i + m - r) % m
        })
        .collect();
    NumericalSemigroup::from_coordinates_unchecked(m, coords)
}

/// Every maximal semigroup with multiplicity `m` and Frobenius number `F`,
/// sorted by coordinates.
///
/// Enumerates the oversemigroups of the seed that keep `F` as a gap and
/// retains those of minimum genus.
pub fn enumerate_maximal(
    pair: FrobeniusPair,
    options: &EnumerationOptions,
) -> Result<Vec<NumericalSemigroup>> {
    let seed = frobenius_seed(pair);
    let f = pair.frobenius;
    let all = enumerate_with(&seed, options, |x| x != f)?;
    let target = min_genus(pair);
    Ok(all.into_iter().filter(|t| t.genus() == target).collect())
}
