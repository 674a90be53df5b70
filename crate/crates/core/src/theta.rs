//! Theta-vectors split by monodromy class and their correspondence with spectra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::{int, FractionalSpectrum, IntVector, Rational};

/// Per-class theta vectors `θ^α = (θ^α_0, ..., θ^α_n)` for `α ∈ [0, 1)`.
///
/// Classes whose vector is identically zero are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaFamily {
    n: usize,
    classes: BTreeMap<Rational, IntVector>,
}

impl ThetaFamily {
    /// Only structural checks: `α ∈ [0,1)` and vectors of length at most `n + 1`.
    /// Symmetry and housing are verified by the checks in [`crate::hodge`].
    pub fn new(n: usize, classes: BTreeMap<Rational, IntVector>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (alpha, v) in classes {
            if alpha.is_negative() || alpha >= Rational::one() {
                return Err(Error::InvalidTheta(format!(
                    "class {alpha} is outside [0,1)"
                )));
            }
            let v = v.resized(n + 1).ok_or_else(|| {
                Error::InvalidTheta(format!("class {alpha} has degree above {n}"))
            })?;
            if !v.is_zero() {
                out.insert(alpha, v);
            }
        }
        Ok(Self { n, classes: out })
    }

    /// Family concentrated in the class `α = 0`.
    pub fn unipotent(n: usize, theta0: IntVector) -> Result<Self> {
        let mut classes = BTreeMap::new();
        classes.insert(Rational::zero(), theta0);
        Self::new(n, classes)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &BTreeMap<Rational, IntVector> {
        &self.classes
    }

    pub fn class(&self, alpha: &Rational) -> IntVector {
        self.classes
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| IntVector::zeros(self.n + 1))
    }

    pub fn theta0(&self) -> IntVector {
        self.class(&Rational::zero())
    }

    /// `Σ_{α ≠ 0} θ^α`.
    pub fn theta_ne0(&self) -> IntVector {
        self.classes
            .iter()
            .filter(|(a, _)| !a.is_zero())
            .fold(IntVector::zeros(self.n + 1), |acc, (_, v)| acc.add(v))
    }

    /// `θ = Σ_α θ^α`.
    pub fn theta_total(&self) -> IntVector {
        self.classes
            .values()
            .fold(IntVector::zeros(self.n + 1), |acc, v| acc.add(v))
    }

    /// `μ = θ(1)`.
    pub fn mu(&self) -> u64 {
        self.theta_total().sum()
    }

    /// Nonzero and concentrated in the class `α = 0`.
    pub fn is_reflexive(&self) -> bool {
        !self.classes.is_empty() && self.classes.keys().all(Zero::is_zero)
    }

    /// `dim H_0 = θ^0(1)`.
    pub fn dim_h0(&self) -> u64 {
        self.theta0().sum()
    }

    /// `z^{-1} Σ_{α≠0} z^α θ^α(z) + θ^0(z)`.
    pub fn to_spectrum(&self) -> Result<FractionalSpectrum> {
        let mut pairs = Vec::new();
        for (alpha, v) in &self.classes {
            for (p, &m) in v.0.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let beta = if alpha.is_zero() {
                    int(p as i64)
                } else {
                    alpha + int(p as i64 - 1)
                };
                if beta.is_negative() {
                    return Err(Error::ExponentOutOfRange {
                        exponent: format!("{beta}"),
                        dim: self.n,
                    });
                }
                pairs.push((beta, m));
            }
        }
        FractionalSpectrum::from_pairs(self.n, pairs)
    }
}

/// Splits a spectrum into classes: for `α ∈ (0,1)`, `θ^α_p` is the
/// multiplicity of `α + p - 1`; `θ^0_p` is the multiplicity of `p`.
pub fn spectrum_to_theta(spec: &FractionalSpectrum) -> Result<ThetaFamily> {
    let n = spec.dim();
    let mut classes: BTreeMap<Rational, IntVector> = BTreeMap::new();
    for (beta, &mult) in spec.atoms() {
        let floor = beta.floor();
        let alpha = beta - &floor;
        let fl = floor.to_integer().to_i64().unwrap_or(i64::MAX);
        let p = if alpha.is_zero() { fl } else { fl + 1 };
        let lowest = if alpha.is_zero() { 0 } else { 1 };
        if beta.is_negative() || p < lowest || p > n as i64 {
            return Err(Error::ExponentOutOfRange {
                exponent: format!("{beta}"),
                dim: n,
            });
        }
        classes
            .entry(alpha)
            .or_insert_with(|| IntVector::zeros(n + 1))
            .0[p as usize] += mult;
    }
    ThetaFamily::new(n, classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use alloc::vec;

    fn example_mixed() -> FractionalSpectrum {
        FractionalSpectrum::from_pairs(2, [(rat(1, 2), 1), (int(1), 3), (rat(3, 2), 1)]).unwrap()
    }

    #[test]
    fn mixed_example_classes() {
        let tf = spectrum_to_theta(&example_mixed()).unwrap();
        assert_eq!(tf.theta0(), IntVector(vec![0, 3, 0]));
        assert_eq!(tf.class(&rat(1, 2)), IntVector(vec![0, 1, 1]));
        assert_eq!(tf.mu(), 5);
        assert_eq!(tf.dim_h0(), 3);
        assert_eq!(tf.to_spectrum().unwrap(), example_mixed());
    }

    #[test]
    fn integer_spectrum_is_unipotent() {
        let s = FractionalSpectrum::from_pairs(2, [(int(0), 1), (int(1), 2), (int(2), 1)]).unwrap();
        let tf = spectrum_to_theta(&s).unwrap();
        assert_eq!(tf.classes().len(), 1);
        assert_eq!(tf.theta0(), IntVector(vec![1, 2, 1]));
    }

    #[test]
    fn segment_spectrum_classes() {
        let s =
            FractionalSpectrum::from_pairs(1, [(int(0), 1), (rat(1, 2), 1), (int(1), 1)]).unwrap();
        let tf = spectrum_to_theta(&s).unwrap();
        assert_eq!(tf.theta0(), IntVector(vec![1, 1]));
        assert_eq!(tf.class(&rat(1, 2)), IntVector(vec![0, 1]));
        assert_eq!(tf.theta_total(), IntVector(vec![1, 2]));
    }

    #[test]
    fn rejects_bad_classes() {
        let mut c = BTreeMap::new();
        c.insert(int(1), IntVector(vec![1]));
        assert!(ThetaFamily::new(1, c).is_err());
        let mut c = BTreeMap::new();
        c.insert(int(0), IntVector(vec![1, 0, 0, 1]));
        assert!(ThetaFamily::new(1, c).is_err());
        // a theta_0 in a nonzero class cannot be turned back into a spectrum
        let mut c = BTreeMap::new();
        c.insert(rat(1, 3), IntVector(vec![1, 0]));
        let tf = ThetaFamily::new(1, c).unwrap();
        assert!(matches!(
            tf.to_spectrum(),
            Err(Error::ExponentOutOfRange { .. })
        ));
    }
}
