//! Pauli strings with exact phase tracking.
//!
//! A string is stored as `i^k * X^x * Z^z` with `x`, `z` bitmasks and `k`
//! the phase exponent mod 4. Composition and adjoints track the
//! anticommutation phases exactly, so products like Y = iXZ never lose
//! their i.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Phase;
use crate::state::SignVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n_qubits: usize,
    x_mask: u32,
    z_mask: u32,
    phase_exponent: u8,
}

impl PauliString {
    pub fn identity(n_qubits: usize) -> Self {
        PauliString {
            n_qubits,
            x_mask: 0,
            z_mask: 0,
            phase_exponent: 0,
        }
    }

    pub fn from_masks(
        n_qubits: usize,
        x_mask: u32,
        z_mask: u32,
        phase_exponent: u8,
    ) -> Result<Self> {
        if x_mask >> n_qubits != 0 || z_mask >> n_qubits != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 32 - (x_mask | z_mask).leading_zeros() as usize,
                n_vertices: n_qubits,
            });
        }
        Ok(PauliString {
            n_qubits,
            x_mask,
            z_mask,
            phase_exponent: phase_exponent % 4,
        })
    }

    pub fn x(n_qubits: usize, qubit: usize) -> Result<Self> {
        Self::single(n_qubits, qubit, true, false, 0)
    }

    pub fn z(n_qubits: usize, qubit: usize) -> Result<Self> {
        Self::single(n_qubits, qubit, false, true, 0)
    }

    /// Y = i X Z.
    pub fn y(n_qubits: usize, qubit: usize) -> Result<Self> {
        Self::single(n_qubits, qubit, true, true, 1)
    }

    fn single(n_qubits: usize, qubit: usize, x: bool, z: bool, k: u8) -> Result<Self> {
        if qubit == 0 || qubit > n_qubits {
            return Err(Error::VertexOutOfRange {
                vertex: qubit,
                n_vertices: n_qubits,
            });
        }
        let bit = 1u32 << (qubit - 1);
        Ok(PauliString {
            n_qubits,
            x_mask: if x { bit } else { 0 },
            z_mask: if z { bit } else { 0 },
            phase_exponent: k,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn x_mask(&self) -> u32 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u32 {
        self.z_mask
    }

    pub fn phase(&self) -> Phase {
        Phase::from_exponent(self.phase_exponent)
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (self.x_mask | self.z_mask).count_ones() as usize
    }

    pub fn is_identity(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0
    }

    /// Non-trivial qubits plus masks, ignoring the phase: the support as
    /// an (x, z) pair. Two strings with equal supports differ by a phase.
    pub fn same_operator_up_to_phase(&self, other: &PauliString) -> bool {
        self.x_mask == other.x_mask && self.z_mask == other.z_mask
    }

    /// self * other, with `other` acting first on kets.
    pub fn compose(&self, other: &PauliString) -> Result<PauliString> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::SizeMismatch(self.n_qubits, other.n_qubits));
        }
        // Commuting other's X block past self's Z block costs a -1 per
        // overlapping qubit.
        let cross = (self.z_mask & other.x_mask).count_ones() as u8;
        Ok(PauliString {
            n_qubits: self.n_qubits,
            x_mask: self.x_mask ^ other.x_mask,
            z_mask: self.z_mask ^ other.z_mask,
            phase_exponent: (self.phase_exponent + other.phase_exponent + 2 * cross) % 4,
        })
    }

    #[must_use]
    pub fn adjoint(&self) -> PauliString {
        let cross = (self.x_mask & self.z_mask).count_ones() as u8;
        PauliString {
            n_qubits: self.n_qubits,
            x_mask: self.x_mask,
            z_mask: self.z_mask,
            phase_exponent: (4 - self.phase_exponent + 2 * cross) % 4,
        }
    }

    /// Exact action on a sign vector: Z flips, X relabels, phase
    /// multiplies.
    pub fn apply(&self, state: &SignVector) -> Result<SignVector> {
        if self.n_qubits != state.n_qubits() {
            return Err(Error::SizeMismatch(self.n_qubits, state.n_qubits()));
        }
        let mut result = state.clone();
        result.apply_z_mask(self.z_mask)?;
        result.apply_x_mask(self.x_mask)?;
        result.multiply_phase(self.phase());
        Ok(result)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Each displayed Y absorbs one i from the stored X-Z form.
        let y_count = (self.x_mask & self.z_mask).count_ones() as i32;
        match (self.phase_exponent as i32 - y_count).rem_euclid(4) {
            0 => {}
            1 => f.write_str("i ")?,
            2 => f.write_str("- ")?,
            _ => f.write_str("-i ")?,
        }
        if self.is_identity() {
            return f.write_str("I");
        }
        let mut first = true;
        for qubit in 1..=self.n_qubits {
            let bit = 1u32 << (qubit - 1);
            let letter = match (self.x_mask & bit != 0, self.z_mask & bit != 0) {
                (false, false) => continue,
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{letter}{qubit}")?;
            first = false;
        }
        Ok(())
    }
}
