//! State vectors over the full 2^L Hilbert space.
//!
//! Basis convention: site `i` (1-indexed) occupies bit `L - i` of the basis
//! index, so site 1 is the most significant bit. Spin-up (sigma^z = +1) is bit
//! value 0. Subsystem A (the first `L_A` sites) therefore occupies the top
//! `L_A` bits and a basis index decomposes as `b = a * 2^(L - L_A) + rest`.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A normalized complex amplitude vector over the 2^L computational basis,
/// tagged with the simulation time it belongs to.
#[derive(Debug, Clone)]
pub struct StateVector {
    pub amps: Vec<Complex64>,
    pub time: f64,
}

impl StateVector {
    /// Wrap raw amplitudes without normalizing. Length must be a power of two.
    pub fn new(amps: Vec<Complex64>, time: f64) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::validation(format!(
                "state dimension {} is not a power of two",
                amps.len()
            )));
        }
        Ok(StateVector { amps, time })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    /// Number of sites, log2 of the dimension.
    pub fn sites(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) -> f64 {
        let n = self.norm();
        if n > 0.0 {
            let inv = 1.0 / n;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
        n
    }

    /// Computational basis state |b>.
    pub fn basis_state(l: usize, b: usize, time: f64) -> Self {
        let mut amps = vec![Complex64::ZERO; 1 << l];
        amps[b] = Complex64::ONE;
        StateVector { amps, time }
    }

    /// Neel state |up down up down ...>.
    pub fn neel(l: usize) -> Self {
        // odd sites up (bit 0), even sites down (bit 1); site 1 is the MSB
        let mut b = 0usize;
        for site in 1..=l {
            if site % 2 == 0 {
                b |= 1 << (l - site);
            }
        }
        Self::basis_state(l, b, 0.0)
    }

    /// Domain wall |up^(L/2) down^(L-L/2)>.
    pub fn domain_wall(l: usize) -> Self {
        let mut b = 0usize;
        for site in (l / 2 + 1)..=l {
            b |= 1 << (l - site);
        }
        Self::basis_state(l, b, 0.0)
    }

    /// Product of |+> on every site: uniform positive amplitudes.
    pub fn plus_all(l: usize) -> Self {
        let dim = 1usize << l;
        let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        StateVector { amps: vec![amp; dim], time: 0.0 }
    }

    /// Product state with every site drawn uniformly from the Bloch sphere,
    /// deterministically from `seed`.
    pub fn random_product(l: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut amps = vec![Complex64::ONE];
        for _ in 0..l {
            let cos_theta: f64 = 1.0 - 2.0 * rng.gen::<f64>();
            let phi = std::f64::consts::TAU * rng.gen::<f64>();
            let half = cos_theta.acos() / 2.0;
            let up = Complex64::new(half.cos(), 0.0);
            let down = Complex64::from_polar(half.sin(), phi);
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(a * up);
                next.push(a * down);
            }
            amps = next;
        }
        let mut state = StateVector { amps, time: 0.0 };
        state.normalize();
        state
    }
}

/// <a|b>.
pub fn inner(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Expectation of the global parity P = prod_i sigma^x_i, applied as a full
/// bit-complement permutation.
pub fn global_parity(state: &StateVector) -> f64 {
    let mask = state.dim() - 1;
    state
        .amps
        .iter()
        .enumerate()
        .map(|(b, a)| (a.conj() * state.amps[mask ^ b]).re)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn neel_bit_pattern() {
        // |up down up down>: sites 2 and 4 are down -> bits L-2=2 and L-4=0
        let s = StateVector::neel(4);
        assert_eq!(s.amps[0b0101].re, 1.0);
        assert_eq!(s.norm(), 1.0);
    }

    #[test]
    fn domain_wall_bit_pattern() {
        // L=4: sites 3,4 down -> bits 1 and 0
        let s = StateVector::domain_wall(4);
        assert_eq!(s.amps[0b0011].re, 1.0);
    }

    #[test]
    fn random_product_is_deterministic_and_normalized() {
        let a = StateVector::random_product(8, 1234);
        let b = StateVector::random_product(8, 1234);
        assert_eq!(a.amps, b.amps);
        assert_abs_diff_eq!(a.norm(), 1.0, epsilon = 1e-12);
        let c = StateVector::random_product(8, 1235);
        assert_ne!(a.amps, c.amps);
    }

    #[test]
    fn plus_all_has_unit_global_parity() {
        let s = StateVector::plus_all(6);
        assert_abs_diff_eq!(global_parity(&s), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn inner_rejects_dimension_mismatch() {
        let a = StateVector::plus_all(3);
        let b = StateVector::plus_all(4);
        assert!(inner(&a, &b).is_err());
    }
}
