use numsg::{Error, NumericalSemigroup};

/// One of the three textual ways of naming a semigroup on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupSpecifier {
    /// `5,7,9`
    Generators(Vec<u64>),
    /// `gaps:1,2,3,4,6,8,11,13`
    Gaps(Vec<u64>),
    /// `kunz:5:16,7,18,9`
    Kunz { m: u64, coords: Vec<u64> },
}

fn list(s: &str) -> Result<Vec<u64>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl SemigroupSpecifier {
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("gaps:") {
            Ok(Self::Gaps(list(rest)?))
        } else if let Some(rest) = s.strip_prefix("kunz:") {
            let (m, coords) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected kunz:M:W1,...; got {s:?}")))?;
            let m = m
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("multiplicity {m:?}: {e}")))?;
            Ok(Self::Kunz {
                m,
                coords: list(coords)?,
            })
        } else {
            Ok(Self::Generators(list(s)?))
        }
    }

    pub fn build(&self) -> Result<NumericalSemigroup, Error> {
        match self {
            Self::Generators(g) => NumericalSemigroup::from_generators(g),
            Self::Gaps(g) => NumericalSemigroup::from_gaps(g),
            Self::Kunz { m, coords } => NumericalSemigroup::from_coordinates(*m, coords.clone()),
        }
    }
}
