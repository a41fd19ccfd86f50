//! Chain specification and matrix-free Hamiltonian application.
//!
//! Three Hamiltonians act on the chain:
//!
//! * driven:    H(t) = -J sum_{i=1}^{L-1} sz_i sz_{i+1} - h(t) sum_i sx_i,
//!   with h(t) = (h0/2) cos(omega t);
//! * static:    H(0), i.e. the driven Hamiltonian frozen at t = 0;
//! * effective: the leading high-frequency expansion of the driven evolution,
//!   H_eff = -J (1 + h0^2/(2 w^2)) sum sz sz + (h0^2 J / (2 w^2)) sum sy sy
//!           - (2 h0 J^2 / w^2)(sx_1 + sx_L) - (4 h0 J^2 / w^2) sum_{bulk} sx_i
//!           - (4 h0 J^2 / w^2) sum_{bulk} sz_{i-1} sx_i sz_{i+1},
//!   truncated at order 1/w^2.
//!
//! Application is matrix-free: the ZZ part is a diagonal accumulated with bit
//! tricks, X/Y/ZXZ terms are bit-flip scatters. Cost O(L 2^L), no 2^L x 2^L
//! matrix is ever materialized. All three Hamiltonians are real symmetric in
//! the computational basis (the YY matrix elements are real with the
//! convention sy|up> = i|down>, sy|down> = -i|up>).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::StateVector;

/// Immutable physical and drive parameters of one chain.
///
/// The boundary is always open: the ZZ sum runs over bonds i = 1..L-1 only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    /// Site count, 2..=24.
    pub l: usize,
    /// Subsystem size, 1..=l-1; subsystem A is the first `l_a` sites.
    pub l_a: usize,
    /// Ising coupling, > 0.
    pub j: f64,
    /// Drive amplitude; the instantaneous field is h(t) = (h0/2) cos(omega t).
    pub h0: f64,
    /// Drive angular frequency, >= 0.
    pub omega: f64,
}

impl ChainSpec {
    pub fn new(l: usize, l_a: usize, j: f64, h0: f64, omega: f64) -> Result<Self> {
        let spec = ChainSpec { l, l_a, j, h0, omega };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.l < 2 || self.l > 24 {
            return Err(Error::validation(format!("l = {} outside 2..=24", self.l)));
        }
        if self.l_a < 1 || self.l_a >= self.l {
            return Err(Error::validation(format!(
                "l_a = {} outside 1..={}",
                self.l_a,
                self.l - 1
            )));
        }
        if !(self.j.is_finite() && self.j > 0.0) {
            return Err(Error::validation(format!("j = {} must be finite and > 0", self.j)));
        }
        if !self.h0.is_finite() {
            return Err(Error::validation("h0 must be finite".to_string()));
        }
        if !(self.omega.is_finite() && self.omega >= 0.0) {
            return Err(Error::validation(format!(
                "omega = {} must be finite and >= 0",
                self.omega
            )));
        }
        Ok(())
    }

    /// Hilbert-space dimension 2^L.
    pub fn dim(&self) -> usize {
        1usize << self.l
    }

    /// Dimension of subsystem A, 2^(L_A).
    pub fn dim_a(&self) -> usize {
        1usize << self.l_a
    }
}

/// Which Hamiltonian to apply. `Effective` uses the omega stored in the
/// `ChainSpec` for its 1/w^2 coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianKind {
    Driven,
    Static,
    Effective,
}

/// Instantaneous transverse field h(t) = (h0/2) cos(omega t).
pub fn drive_amplitude(spec: &ChainSpec, t: f64) -> f64 {
    0.5 * spec.h0 * (spec.omega * t).cos()
}

fn check_dims(spec: &ChainSpec, psi: &[Complex64], out: &[Complex64]) -> Result<()> {
    if psi.len() != spec.dim() {
        return Err(Error::DimensionMismatch { expected: spec.dim(), got: psi.len() });
    }
    if out.len() != spec.dim() {
        return Err(Error::DimensionMismatch { expected: spec.dim(), got: out.len() });
    }
    Ok(())
}

/// out = H(t) psi for the requested Hamiltonian, written into the caller's
/// buffer without any internal allocation.
pub fn apply_into(
    spec: &ChainSpec,
    kind: HamiltonianKind,
    t: f64,
    psi: &[Complex64],
    out: &mut [Complex64],
) -> Result<()> {
    check_dims(spec, psi, out)?;
    match kind {
        HamiltonianKind::Driven => {
            apply_zz_field(spec, -spec.j, -drive_amplitude(spec, t), psi, out)
        }
        HamiltonianKind::Static => apply_zz_field(spec, -spec.j, -0.5 * spec.h0, psi, out),
        HamiltonianKind::Effective => {
            if spec.omega <= 0.0 {
                return Err(Error::validation(
                    "effective Hamiltonian requires omega > 0".to_string(),
                ));
            }
            apply_effective_into(spec, psi, out)
        }
    }
    Ok(())
}

/// out = (zz_coeff sum sz sz + x_coeff sum sx) psi.
fn apply_zz_field(
    spec: &ChainSpec,
    zz_coeff: f64,
    x_coeff: f64,
    psi: &[Complex64],
    out: &mut [Complex64],
) {
    let l = spec.l;
    let bond_mask = (1usize << (l - 1)) - 1;
    let bonds = (l - 1) as f64;
    for (b, o) in out.iter_mut().enumerate() {
        // number of unequal adjacent bit pairs -> sum of z_i z_{i+1}
        let unequal = ((b ^ (b >> 1)) & bond_mask).count_ones() as f64;
        *o = psi[b] * (zz_coeff * (bonds - 2.0 * unequal));
    }
    if x_coeff != 0.0 {
        for p in 0..l {
            accumulate_x(x_coeff, p, psi, out);
        }
    }
}

fn apply_effective_into(spec: &ChainSpec, psi: &[Complex64], out: &mut [Complex64]) {
    let l = spec.l;
    let w2 = spec.omega * spec.omega;
    let zz = -spec.j * (1.0 + spec.h0 * spec.h0 / (2.0 * w2));
    let yy = spec.h0 * spec.h0 * spec.j / (2.0 * w2);
    let x_boundary = -2.0 * spec.h0 * spec.j * spec.j / w2;
    let x_bulk = -4.0 * spec.h0 * spec.j * spec.j / w2;
    let zxz = -4.0 * spec.h0 * spec.j * spec.j / w2;

    apply_zz_field(spec, zz, 0.0, psi, out);
    // YY on every bond: bit pairs (p, p+1) for p = 0..L-2
    for p in 0..l - 1 {
        accumulate_yy(yy, p, psi, out);
    }
    // sites 1 and L sit on bits l-1 and 0
    accumulate_x(x_boundary, l - 1, psi, out);
    accumulate_x(x_boundary, 0, psi, out);
    // bulk sites 2..=L-1 on bits l-2..=1
    for p in 1..l - 1 {
        accumulate_x(x_bulk, p, psi, out);
        accumulate_zxz(zxz, p, psi, out);
    }
}

/// out += coeff * sx(bit p) psi.
fn accumulate_x(coeff: f64, p: usize, psi: &[Complex64], out: &mut [Complex64]) {
    let bit = 1usize << p;
    let dim = psi.len();
    let mut base = 0usize;
    while base < dim {
        for b in base..base + bit {
            out[b] += psi[b | bit] * coeff;
            out[b | bit] += psi[b] * coeff;
        }
        base += bit << 1;
    }
}

/// out += coeff * sy(bit p+1) sy(bit p) psi.
///
/// With sy|up> = i|down>, sy|down> = -i|up> the two-site matrix element onto
/// the double-flipped state is -1 when the source bits are equal and +1 when
/// they differ, so the term is real.
fn accumulate_yy(coeff: f64, p: usize, psi: &[Complex64], out: &mut [Complex64]) {
    let b0 = 1usize << p;
    let b1 = 1usize << (p + 1);
    let mask = b0 | b1;
    let dim = psi.len();
    let low_mask = b0 - 1;
    for k in 0..dim >> 2 {
        let b = ((k >> p) << (p + 2)) | (k & low_mask); // bits p, p+1 clear
        out[b] -= psi[b | mask] * coeff;
        out[b | mask] -= psi[b] * coeff;
        out[b | b0] += psi[b | b1] * coeff;
        out[b | b1] += psi[b | b0] * coeff;
    }
}

/// out += coeff * sz(bit p+1) sx(bit p) sz(bit p-1) psi.
fn accumulate_zxz(coeff: f64, p: usize, psi: &[Complex64], out: &mut [Complex64]) {
    let bit = 1usize << p;
    let dim = psi.len();
    let mut base = 0usize;
    while base < dim {
        for b in base..base + bit {
            // neighbor z values are unchanged by the flip on bit p
            let zl = 1.0 - 2.0 * ((b >> (p + 1)) & 1) as f64;
            let zr = 1.0 - 2.0 * ((b >> (p - 1)) & 1) as f64;
            let c = coeff * zl * zr;
            out[b] += psi[b | bit] * c;
            out[b | bit] += psi[b] * c;
        }
        base += bit << 1;
    }
}

/// H(t) |psi>, allocating the output. The result is unnormalized.
pub fn apply_driven(spec: &ChainSpec, state: &StateVector, t: f64) -> Result<StateVector> {
    let mut out = vec![Complex64::ZERO; spec.dim()];
    apply_into(spec, HamiltonianKind::Driven, t, &state.amps, &mut out)?;
    StateVector::new(out, state.time)
}

/// H_static |psi> = H(0) |psi>.
pub fn apply_static(spec: &ChainSpec, state: &StateVector) -> Result<StateVector> {
    let mut out = vec![Complex64::ZERO; spec.dim()];
    apply_into(spec, HamiltonianKind::Static, 0.0, &state.amps, &mut out)?;
    StateVector::new(out, state.time)
}

/// H_eff |psi>. Requires omega > 0.
pub fn apply_effective(spec: &ChainSpec, state: &StateVector) -> Result<StateVector> {
    if spec.omega <= 0.0 {
        return Err(Error::validation(
            "effective Hamiltonian requires omega > 0".to_string(),
        ));
    }
    let mut out = vec![Complex64::ZERO; spec.dim()];
    apply_into(spec, HamiltonianKind::Effective, 0.0, &state.amps, &mut out)?;
    StateVector::new(out, state.time)
}

/// <psi| H |psi> for a normalized state.
pub fn energy_expectation(
    spec: &ChainSpec,
    kind: HamiltonianKind,
    t: f64,
    state: &StateVector,
) -> Result<f64> {
    let h_psi = match kind {
        HamiltonianKind::Driven => apply_driven(spec, state, t)?,
        HamiltonianKind::Static => apply_static(spec, state)?,
        HamiltonianKind::Effective => apply_effective(spec, state)?,
    };
    Ok(crate::state::inner(state, &h_psi)?.re)
}
