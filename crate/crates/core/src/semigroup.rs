//! Numerical semigroups of fixed multiplicity, stored by their Kunz coordinates.
//!
//! A numerical semigroup `S` with multiplicity `m` is determined by its Apéry
//! set with respect to `m`, that is by the least element `w(i)` of `S` in each
//! residue class `i` modulo `m`. The tuple `(w(1), ..., w(m-1))` is the
//! canonical value used everywhere in this crate; generator lists and gap
//! lists are accepted only as input formats.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A numerical semigroup given by its multiplicity and Kunz coordinates.
///
/// Values are immutable once built; every constructor validates the
/// residue, multiplicity and closure conditions on the coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    m: u64,
    coords: Vec<u64>,
}

/// Apéry set of a semigroup with respect to its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    modulus: u64,
    by_residue: Vec<u64>,
}

impl AperySet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `w(i)` for every residue `i`, with `w(0) = 0` first.
    pub fn by_residue(&self) -> &[u64] {
        &self.by_residue
    }

    /// The elements in increasing order.
    pub fn elements(&self) -> Vec<u64> {
        let mut v = self.by_residue.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: u64) -> bool {
        self.by_residue[(x % self.modulus) as usize] == x
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Smallest numerical semigroup containing `gens`.
    ///
    /// Zeros in the input are ignored. The Apéry set with respect to the
    /// least generator is found by a shortest-path relaxation over residue
    /// classes, each generator acting as an edge of its own length.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let gens: BTreeSet<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        let m = *gens.first().ok_or(Error::EmptyGenerators)?;
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let modulus = m as usize;
        let mut dist = vec![u64::MAX; modulus];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in gens.iter().filter(|&&g| g % m != 0) {
                let nd = d.checked_add(g).ok_or(Error::Overflow)?;
                let nr = (r + (g % m) as usize) % modulus;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != u64::MAX));
        Ok(Self {
            m,
            coords: dist[1..].to_vec(),
        })
    }

    /// The semigroup whose complement in the naturals is exactly `gaps`.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let gaps: BTreeSet<u64> = gaps.iter().copied().collect();
        if gaps.contains(&0) {
            return Err(Error::ZeroGap);
        }
        for &g in &gaps {
            for x in 1..=g / 2 {
                if !gaps.contains(&x) && !gaps.contains(&(g - x)) {
                    return Err(Error::NotClosed(x, g - x));
                }
            }
        }
        let m = (1..).find(|x| !gaps.contains(x)).expect("gap set is finite");
        let coords = (1..m)
            .map(|i| {
                let mut x = i;
                while gaps.contains(&x) {
                    x += m;
                }
                x
            })
            .collect();
        Ok(Self { m, coords })
    }

    /// Validates a Kunz coordinate tuple `(w(1), ..., w(m-1))`.
    pub fn from_coordinates(m: u64, coords: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let expected = (m - 1) as usize;
        if coords.len() != expected {
            return Err(Error::BadLength {
                m,
                expected,
                found: coords.len(),
            });
        }
        for (k, &w) in coords.iter().enumerate() {
            let i = k + 1;
            if w % m != i as u64 {
                return Err(Error::BadResidue(i));
            }
            if w <= m {
                return Err(Error::BelowMultiplicity(i));
            }
        }
        let s = Self { m, coords };
        s.check_kunz()?;
        Ok(s)
    }

    fn check_kunz(&self) -> Result<()> {
        let m = self.m as usize;
        for i in 1..m {
            for j in i..m {
                let sum = self.w(i).checked_add(self.w(j)).ok_or(Error::Overflow)?;
                if sum < self.w((i + j) % m) {
                    return Err(Error::KunzViolation(i, j));
                }
            }
        }
        Ok(())
    }

    /// `{0} ∪ {x ≥ m}`, the largest semigroup of multiplicity `m`.
    pub fn maximum(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(Self {
            m,
            coords: (1..m).map(|i| m + i).collect(),
        })
    }

    pub(crate) fn from_coordinates_unchecked(m: u64, coords: Vec<u64>) -> Self {
        let s = Self { m, coords };
        debug_assert!(Self::from_coordinates(s.m, s.coords.clone()).is_ok());
        s
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Least element congruent to `i` modulo the multiplicity; `w(0) = 0`.
    pub fn w(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.coords[i - 1]
        }
    }

    pub fn apery_set(&self) -> AperySet {
        let mut by_residue = Vec::with_capacity(self.m as usize);
        by_residue.push(0);
        by_residue.extend_from_slice(&self.coords);
        AperySet {
            modulus: self.m,
            by_residue,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.w((x % self.m) as usize) <= x
    }

    /// Largest integer outside the semigroup.
    pub fn frobenius(&self) -> Result<u64> {
        match self.coords.iter().max() {
            Some(&w) => Ok(w - self.m),
            None => Err(Error::NoGaps),
        }
    }

    /// Number of gaps; residue class `i` contributes `(w(i) - i) / m`.
    pub fn genus(&self) -> u64 {
        self.coords
            .iter()
            .enumerate()
            .map(|(k, &w)| (w - (k as u64 + 1)) / self.m)
            .sum()
    }

    pub fn gaps(&self) -> Vec<u64> {
        let Ok(f) = self.frobenius() else {
            return Vec::new();
        };
        (1..=f).filter(|&x| !self.contains(x)).collect()
    }

    /// `true` when `self ⊆ other`, i.e. the coordinates of `other` are
    /// componentwise below those of `self`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_multiplicity(other)?;
        Ok(other.coords.iter().zip(&self.coords).all(|(b, a)| b <= a))
    }

    pub(crate) fn same_multiplicity(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MultiplicityMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(())
    }

    /// Intersection of a family sharing one multiplicity: the componentwise
    /// maximum of the coordinates.
    pub fn intersect<'a, I>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut it = family.into_iter();
        let first = it.next().ok_or(Error::EmptyList)?;
        let mut coords = first.coords.clone();
        let mut frob = first.frobenius().ok();
        for s in it {
            first.same_multiplicity(s)?;
            for (c, &w) in coords.iter_mut().zip(&s.coords) {
                *c = (*c).max(w);
            }
            frob = frob.max(s.frobenius().ok());
        }
        let out = Self::from_coordinates_unchecked(first.m, coords);
        debug_assert_eq!(out.frobenius().ok(), frob);
        Ok(out)
    }

    /// Coordinates with entry `i` replaced by `value`, unvalidated.
    pub(crate) fn with_coord(&self, i: usize, value: u64) -> Vec<u64> {
        let mut c = self.coords.clone();
        c[i - 1] = value;
        c
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Formats as `kunz:m:w1,...,w(m-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kunz:{}:{}", self.m, join(&self.coords))
    }
}

pub(crate) fn join(v: &[u64]) -> String {
    v.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Accepts `5,7,9` (generators), `gaps:1,2,4` or `kunz:5:16,7,18,9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("gaps:") {
            Self::from_gaps(&parse_list(rest)?)
        } else if let Some(rest) = s.strip_prefix("kunz:") {
            let (m, coords) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected kunz:m:coords, got {s:?}")))?;
            let m = m
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("multiplicity {m:?}: {e}")))?;
            Self::from_coordinates(m, parse_list(coords)?)
        } else {
            Self::from_generators(&parse_list(s)?)
        }
    }
}
