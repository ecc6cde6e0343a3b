//! Phasor hypervector algebra.
//!
//! A hypervector is a dense vector of complex components. Atomic vectors
//! have every component on the unit circle with phase drawn uniformly from
//! `[0, 2*pi)`; binding multiplies component-wise, superposition adds
//! component-wise without normalization, and the similarity of two vectors
//! is derived from the complex inner product `sum x_k * conj(y_k)`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Magnitude slack allowed when deciding whether a component is on the unit
/// circle. Products of unit phasors stay well inside this bound.
pub const ATOMIC_TOL: f64 = 1e-12;

/// Dense complex hypervector.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypervector {
    components: Vec<Complex64>,
}

impl Hypervector {
    /// Draws a fresh atomic vector: `d` unit phasors with phases sampled
    /// uniformly from `[0, 2*pi)` in component order.
    ///
    /// # Errors
    ///
    /// `InvalidDimension` if `d` is zero.
    pub fn atomic<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension);
        }
        let components = (0..d)
            .map(|_| Complex64::from_polar(1.0, rng.gen_range(0.0..TAU)))
            .collect();
        Ok(Self { components })
    }

    /// The multiplicative identity for binding: every component is `1 + 0i`.
    pub fn ones(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(Self {
            components: vec![Complex64::new(1.0, 0.0); d],
        })
    }

    pub fn from_components(components: Vec<Complex64>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// True when every component sits on the unit circle within [`ATOMIC_TOL`].
    pub fn is_atomic(&self) -> bool {
        self.components
            .iter()
            .all(|c| (c.norm() - 1.0).abs() <= ATOMIC_TOL)
    }

    /// Component-wise complex product. Binding two atomic vectors adds their
    /// phase angles and yields another atomic vector.
    pub fn bind(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .collect();
        Ok(Self { components })
    }

    /// Component-wise sum of a nonempty collection. No normalization is
    /// applied, so superposing `n` copies scales the vector by `n`.
    pub fn superpose<'a, I>(vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Hypervector>,
    {
        let mut iter = vectors.into_iter();
        let first = iter.next().ok_or(Error::EmptySuperposition)?;
        let mut acc = first.components.clone();
        for v in iter {
            if v.len() != acc.len() {
                return Err(Error::DimensionMismatch {
                    left: acc.len(),
                    right: v.len(),
                });
            }
            for (a, b) in acc.iter_mut().zip(&v.components) {
                *a += b;
            }
        }
        Ok(Self { components: acc })
    }

    /// Integer power of an atomic vector: each component `e^(i*theta)` maps
    /// to `e^(i*k*theta)`. Negative exponents conjugate, zero gives the
    /// binding identity. Computed by phase exponentiation, which agrees with
    /// repeated complex multiplication to well below 1e-9.
    ///
    /// # Errors
    ///
    /// `NonAtomic` if any component is off the unit circle.
    pub fn power(&self, k: i64) -> Result<Self> {
        if !self.is_atomic() {
            return Err(Error::NonAtomic);
        }
        match k {
            0 => Self::ones(self.len()),
            1 => Ok(self.clone()),
            -1 => Ok(self.conjugate()),
            _ => {
                let kf = k as f64;
                let components = self
                    .components
                    .iter()
                    .map(|c| Complex64::from_polar(1.0, kf * c.arg()))
                    .collect();
                Ok(Self { components })
            }
        }
    }

    /// Complex inner product `sum_k x_k * conj(y_k)`, summed in component
    /// order so results are bit-stable.
    pub fn dot(&self, other: &Self) -> Result<Complex64> {
        self.check_dim(other)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in self.components.iter().zip(&other.components) {
            acc += a * b.conj();
        }
        Ok(acc)
    }

    pub fn conjugate(&self) -> Self {
        Self {
            components: self.components.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Squared Euclidean norm, `Re(dot(x, x))`.
    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|c| c.norm_sqr()).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}
