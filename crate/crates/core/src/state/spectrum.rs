//! Sorted eigenvalue lists, the common currency for entropies and majorization.

use crate::error::{Error, Result};

/// Eigenvalues below this are treated as numerical zeros and dropped, which
/// fixes the rank entering the order-0 entropy.
pub const ZERO_CUTOFF: f64 = 1e-12;

/// How negative an eigenvalue of a nominally PSD operator may be before we
/// refuse to interpret it as rounding noise.
pub const NEGATIVITY_TOL: f64 = 1e-10;

const SUM_TOL: f64 = 1e-9;

/// Nonzero eigenvalues of a unit-trace positive operator, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_cutoff: f64,
}

impl Spectrum {
    /// Builds a spectrum from raw eigenvalues: sorts descending, drops values
    /// at or below the cutoff, and checks the sum is 1.
    pub fn from_eigenvalues(raw: &[f64]) -> Result<Self> {
        Self::with_cutoff(raw, ZERO_CUTOFF)
    }

    pub fn with_cutoff(raw: &[f64], zero_cutoff: f64) -> Result<Self> {
        let mut values: Vec<f64> = Vec::with_capacity(raw.len());
        for &v in raw {
            if v < -NEGATIVITY_TOL {
                return Err(Error::NegativeEigenvalue(v));
            }
            if v > zero_cutoff {
                values.push(v);
            }
        }
        if values.is_empty() {
            return Err(Error::InvalidSpectrum("no nonzero eigenvalues".into()));
        }
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidSpectrum(format!(
                "eigenvalues sum to {sum}, expected 1"
            )));
        }
        Ok(Spectrum {
            values,
            zero_cutoff,
        })
    }

    /// The flat spectrum of the maximally mixed state of rank `n`.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1);
        Spectrum {
            values: vec![1.0 / n as f64; n],
            zero_cutoff: ZERO_CUTOFF,
        }
    }

    /// Spectrum of a tensor product: all pairwise products, re-sorted.
    pub fn tensor(&self, other: &Spectrum) -> Spectrum {
        let mut values = Vec::with_capacity(self.values.len() * other.values.len());
        for &a in &self.values {
            for &b in &other.values {
                values.push(a * b);
            }
        }
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        Spectrum {
            values,
            zero_cutoff: self.zero_cutoff.min(other.zero_cutoff),
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn zero_cutoff(&self) -> f64 {
        self.zero_cutoff
    }

    /// Elementwise equality within `tol`, requiring equal rank.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_drops_zeros() {
        let s = Spectrum::from_eigenvalues(&[0.25, 0.5, 1e-15, 0.25, -1e-12]).unwrap();
        assert_eq!(s.values(), &[0.5, 0.25, 0.25]);
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        assert!(matches!(
            Spectrum::from_eigenvalues(&[1.1, -0.1]),
            Err(Error::NegativeEigenvalue(_))
        ));
    }

    #[test]
    fn rejects_bad_sum() {
        assert!(Spectrum::from_eigenvalues(&[0.5, 0.4]).is_err());
    }

    #[test]
    fn tensor_of_uniforms() {
        let s = Spectrum::uniform(2).tensor(&Spectrum::uniform(3));
        assert_eq!(s.len(), 6);
        assert!((s.values()[0] - 1.0 / 6.0).abs() < 1e-15);
    }
}
