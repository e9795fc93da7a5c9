//! Traces of surfaces on the exceptional quadric and which pairs of
//! surfaces can glue across the double locus.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadric::{intersection_number, sigma_pushforward, QuadricClass};

/// A surface in a twistor space, described by its twistor degree and
/// whether it contains the blown-up line (smoothly, when it does).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceData {
    pub twistor_degree: i64,
    pub contains_line: bool,
}

impl SurfaceData {
    pub fn new(twistor_degree: i64, contains_line: bool) -> Result<Self> {
        let s = SurfaceData {
            twistor_degree,
            contains_line,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.twistor_degree < 1 {
            return Err(Error::InvalidSurface(format!(
                "twistor degree must be at least 1, found {}",
                self.twistor_degree
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SurfaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = if self.contains_line { "in" } else { "out" };
        write!(f, "({}, {pos})", self.twistor_degree)
    }
}

/// `[S̃ ∩ Q]`: `d·b` when the line is not contained, `(d − 1)·b + w` when it is.
pub fn trace_class(s: &SurfaceData) -> Result<QuadricClass> {
    s.validate()?;
    let d = s.twistor_degree;
    Ok(if s.contains_line {
        QuadricClass::divisor(d - 1, 1)
    } else {
        QuadricClass::divisor(d, 0)
    })
}

/// `σ_*[S̃₁ ∩ Q]` next to `[S̃₂ ∩ Q]`; the surfaces glue iff they agree.
pub fn glue_comparison(s1: &SurfaceData, s2: &SurfaceData) -> Result<(QuadricClass, QuadricClass)> {
    Ok((sigma_pushforward(&trace_class(s1)?), trace_class(s2)?))
}

pub fn glue_check(s1: &SurfaceData, s2: &SurfaceData) -> Result<bool> {
    let (a, b) = glue_comparison(s1, s2)?;
    Ok(a == b)
}

/// A gluable pair of surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub first: SurfaceData,
    pub second: SurfaceData,
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.first, self.second)
    }
}

/// Every pair with twistor degrees in `1..=d_max` that passes [`glue_check`].
pub fn classify_all(d_max: i64) -> Result<Vec<Configuration>> {
    if d_max < 1 {
        return Err(Error::InvalidArgument(format!("d_max must be at least 1, found {d_max}")));
    }
    let mut out = Vec::new();
    for d1 in 1..=d_max {
        for in1 in [true, false] {
            let first = SurfaceData::new(d1, in1)?;
            for d2 in 1..=d_max {
                for in2 in [true, false] {
                    let second = SurfaceData::new(d2, in2)?;
                    if glue_check(&first, &second)? {
                        out.push(Configuration { first, second });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Degree over the ruling of the matched curve, `σ_*[S̃ ∩ Q] · b = d − 1`.
pub fn section_degree_over_ruling(s: &SurfaceData) -> Result<BigInt> {
    if !s.contains_line {
        return Err(Error::InvalidSurface(
            "section degree is defined only for surfaces containing the line".into(),
        ));
    }
    intersection_number(&sigma_pushforward(&trace_class(s)?), &QuadricClass::b())
}
