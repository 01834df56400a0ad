use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::LatticeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Particles,
    Holes,
}

/// Marked positions on an `M`-site row; the marks are particles (`|1⟩`) or
/// holes (`|0⟩`) depending on `polarity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SiteConfig {
    m: usize,
    positions: Vec<usize>,
    polarity: Polarity,
}

impl SiteConfig {
    pub fn new(m: usize, positions: Vec<usize>, polarity: Polarity) -> Result<Self, LatticeError> {
        if m == 0 || m > 32 {
            return Err(LatticeError::InvalidConfig(format!(
                "site count {m} out of range"
            )));
        }
        if let Some(&p) = positions.iter().find(|&&p| p < 1 || p > m) {
            return Err(LatticeError::InvalidConfig(format!(
                "position {p} outside 1..={m}"
            )));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LatticeError::InvalidConfig(format!(
                "positions {positions:?} are not strictly increasing"
            )));
        }
        Ok(Self {
            m,
            positions,
            polarity,
        })
    }

    pub fn particles(m: usize, positions: Vec<usize>) -> Result<Self, LatticeError> {
        Self::new(m, positions, Polarity::Particles)
    }

    pub fn holes(m: usize, positions: Vec<usize>) -> Result<Self, LatticeError> {
        Self::new(m, positions, Polarity::Holes)
    }

    /// All configurations with `k` marks, in lexicographic order of positions.
    pub fn all(m: usize, k: usize, polarity: Polarity) -> Vec<Self> {
        (1..=m)
            .combinations(k)
            .map(|positions| Self {
                m,
                positions,
                polarity,
            })
            .collect()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Number of occupied sites.
    pub fn particle_count(&self) -> usize {
        match self.polarity {
            Polarity::Particles => self.positions.len(),
            Polarity::Holes => self.m - self.positions.len(),
        }
    }

    /// Occupation bitmask: bit `j-1` set when site `j` holds a particle.
    pub fn mask(&self) -> u32 {
        let marks = self
            .positions
            .iter()
            .fold(0u32, |acc, &p| acc | 1 << (p - 1));
        match self.polarity {
            Polarity::Particles => marks,
            Polarity::Holes => full_mask(self.m) & !marks,
        }
    }

    pub fn from_mask(m: usize, mask: u32, polarity: Polarity) -> Self {
        let positions = (1..=m)
            .filter(|&j| (mask >> (j - 1) & 1 == 1) == (polarity == Polarity::Particles))
            .collect();
        Self {
            m,
            positions,
            polarity,
        }
    }
}

pub(crate) fn full_mask(m: usize) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}
