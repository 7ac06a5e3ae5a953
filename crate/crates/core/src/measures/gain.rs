//! Relevance level to gain mapping.

use crate::error::{Error, Result};

/// Gain per relevance level: non-negative, non-decreasing, zero at L0.
/// The linear setting (`gain(L) = L`) is the default for all collections.
#[derive(Debug, Clone, PartialEq)]
pub struct GainMap {
    gains: Vec<f64>,
}

impl GainMap {
    /// `gain(L) = L` for levels `0..=lmax`.
    pub fn linear(lmax: u8) -> GainMap {
        GainMap {
            gains: (0..=lmax as usize).map(|l| l as f64).collect(),
        }
    }

    /// Custom mapping; `gains[level]` gives the gain.
    pub fn new(gains: Vec<f64>) -> Result<GainMap> {
        if gains.is_empty() || gains[0] != 0.0 {
            return Err(Error::InvalidParameter {
                msg: "gain(0) must exist and be 0".into(),
            });
        }
        if gains.windows(2).any(|w| w[1] < w[0]) || gains.iter().any(|g| !g.is_finite() || *g < 0.0)
        {
            return Err(Error::InvalidParameter {
                msg: "gains must be non-negative and non-decreasing".into(),
            });
        }
        Ok(GainMap { gains })
    }

    /// Gain of a level; levels beyond the table saturate at the maximum.
    pub fn gain(&self, level: u8) -> f64 {
        let idx = (level as usize).min(self.gains.len() - 1);
        self.gains[idx]
    }

    /// The largest gain on the scale.
    pub fn g_max(&self) -> f64 {
        *self.gains.last().unwrap()
    }

    pub fn lmax(&self) -> u8 {
        (self.gains.len() - 1) as u8
    }

    /// All gains multiplied by `c > 0` (used to test scale invariance).
    pub fn scaled(&self, c: f64) -> Result<GainMap> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidParameter {
                msg: format!("scale factor must be positive, got {c}"),
            });
        }
        Ok(GainMap {
            gains: self.gains.iter().map(|g| g * c).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_gains() {
        let g = GainMap::linear(4);
        assert_eq!(g.gain(0), 0.0);
        assert_eq!(g.gain(3), 3.0);
        assert_eq!(g.g_max(), 4.0);
        assert_eq!(g.lmax(), 4);
        assert_eq!(g.gain(9), 4.0); // saturates
    }

    #[test]
    fn validates_shape() {
        assert!(GainMap::new(vec![]).is_err());
        assert!(GainMap::new(vec![1.0, 2.0]).is_err());
        assert!(GainMap::new(vec![0.0, 2.0, 1.0]).is_err());
        assert!(GainMap::new(vec![0.0, 1.0, 3.0]).is_ok());
    }
}
