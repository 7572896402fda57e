//! Pretzel link diagrams and their Kauffman states.

mod classify;
mod diagram;
mod state;

pub use classify::{
    classify_state, classify_state_general, classify_state_p11n, StateClassification,
};
pub use diagram::{build_diagram, count_circles, CircleCounter, Crossing, Diagram, Port, Sign};
pub use state::{KauffmanState, Marker, MAX_STATE_CROSSINGS};

use std::fmt;
use std::str::FromStr;

use crate::error::SpecError;

/// The integer tuple `(p_1, ..., p_k)` of a pretzel link. Column `i` holds
/// `|p_i|` crossings of sign `sgn(p_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PretzelSpec {
    tangles: Vec<i64>,
}

impl PretzelSpec {
    pub fn new(tangles: impl Into<Vec<i64>>) -> Result<Self, SpecError> {
        let tangles = tangles.into();
        if tangles.is_empty() {
            return Err(SpecError::Empty);
        }
        if let Some(index) = tangles.iter().position(|&p| p == 0) {
            return Err(SpecError::ZeroTangle { index });
        }
        Ok(Self { tangles })
    }

    /// `P(1, 1, n)`.
    pub fn p11n(n: i64) -> Result<Self, SpecError> {
        Self::new(vec![1, 1, n])
    }

    /// `P(1, ..., 1, n)` with `m` single-crossing tangles in front.
    pub fn ones_then(m: usize, n: i64) -> Result<Self, SpecError> {
        let mut tangles = vec![1; m];
        tangles.push(n);
        Self::new(tangles)
    }

    pub fn tangles(&self) -> &[i64] {
        &self.tangles
    }

    pub fn num_columns(&self) -> usize {
        self.tangles.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.tangles.iter().map(|p| p.unsigned_abs() as usize).sum()
    }

    /// The mirror image: every tangle changes sign.
    pub fn mirror(&self) -> Self {
        Self {
            tangles: self.tangles.iter().map(|p| -p).collect(),
        }
    }

    /// Moves the first column to the end.
    pub fn rotate_left(&self) -> Self {
        let mut tangles = self.tangles.clone();
        tangles.rotate_left(1);
        Self { tangles }
    }

    /// `Some(n)` if this is `P(1, 1, n)`.
    pub fn as_p11n(&self) -> Option<i64> {
        match self.tangles.as_slice() {
            [1, 1, n] => Some(*n),
            _ => None,
        }
    }

    /// `Some((m, n))` if this is `P(1, ..., 1, n)` with `m >= 1` leading ones.
    pub fn as_ones_then_n(&self) -> Option<(usize, i64)> {
        let (&last, ones) = self.tangles.split_last()?;
        if ones.is_empty() || ones.iter().any(|&p| p != 1) {
            return None;
        }
        Some((ones.len(), last))
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.tangles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PretzelSpec {
    type Err = SpecError;

    /// Parses comma-separated integers such as `1,1,-4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(SpecError::Empty);
        }
        let tangles = s
            .split(',')
            .map(|part| {
                part.trim().parse::<i64>().map_err(|e| SpecError::Parse {
                    input: s.to_string(),
                    reason: format!("{:?}: {e}", part.trim()),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(tangles)
    }
}
