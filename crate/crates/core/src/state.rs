//! Dense ±1-signed states, one bit per sign.
//!
//! A state here is always of the form `phase * 2^(-n/2) * sum_s sign[s] |s>`
//! with `sign[s]` in {+1, -1} and `phase` a fourth root of unity. Bit `s`
//! of the packed vector is set iff `sign[s] = -1`, so generalized
//! controlled-Z gates, Pauli actions and scalar products are all XOR and
//! popcount work on `u64` words.
//!
//! Qubit `i` (1-based) is bit `i-1` of the basis-state index; qubit 1 is
//! the least significant bit.

use crate::error::{Error, Result};
use crate::scalar::{Phase, Scalar};

/// Hard cap for dense vectors: 2^24 signs = 2 MiB per state. Larger
/// systems go through the symmetric counting path in [`crate::kl`].
pub const DENSE_CAP: usize = 24;

/// Bits j of a u64 whose bit `b` of the in-word index j is zero.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    n_qubits: usize,
    /// 2^n sign bits; bit s set means sign[s] = -1. High bits of the last
    /// (only) word stay zero when 2^n < 64.
    words: Vec<u64>,
    phase: Phase,
}

impl SignVector {
    /// |+>^n: all signs +1.
    pub fn plus_state(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > DENSE_CAP {
            return Err(Error::DenseCapExceeded {
                requested: n_qubits,
            });
        }
        let len = if n_qubits >= 6 {
            1 << (n_qubits - 6)
        } else {
            1
        };
        Ok(SignVector {
            n_qubits,
            words: vec![0; len],
            phase: Phase::ONE,
        })
    }

    /// State whose sign depends only on the basis-state weight:
    /// `signs[s] = weight_signs[popcount(s)]`.
    pub fn from_weight_signs(n_qubits: usize, weight_signs: &[i8]) -> Result<Self> {
        assert_eq!(weight_signs.len(), n_qubits + 1, "one sign per weight");
        let mut state = SignVector::plus_state(n_qubits)?;
        for s in 0..(1u32 << n_qubits) {
            if weight_signs[s.count_ones() as usize] < 0 {
                state.words[(s >> 6) as usize] ^= 1 << (s & 63);
            }
        }
        Ok(state)
    }

    /// Explicit signs, mostly for tests and small examples.
    pub fn from_signs(n_qubits: usize, signs: &[i8]) -> Result<Self> {
        assert_eq!(signs.len(), 1 << n_qubits);
        let mut state = SignVector::plus_state(n_qubits)?;
        for (s, &sign) in signs.iter().enumerate() {
            if sign < 0 {
                state.words[s >> 6] ^= 1 << (s & 63);
            }
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn sign_at(&self, index: usize) -> i8 {
        debug_assert!(index < 1 << self.n_qubits);
        if self.words[index >> 6] >> (index & 63) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn multiply_phase(&mut self, phase: Phase) {
        self.phase = self.phase * phase;
    }

    fn valid_mask(&self) -> u64 {
        if self.n_qubits >= 6 {
            u64::MAX
        } else {
            (1u64 << (1 << self.n_qubits)) - 1
        }
    }

    fn check_edge(&self, edge: u32) -> Result<()> {
        if edge >> self.n_qubits != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 32 - edge.leading_zeros() as usize,
                n_vertices: self.n_qubits,
            });
        }
        Ok(())
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.n_qubits {
            return Err(Error::VertexOutOfRange {
                vertex: qubit,
                n_vertices: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Generalized controlled-Z on the vertex set `edge` (bitmask): flips
    /// the sign of every |s> with all edge bits set. The empty edge is the
    /// scalar -1 and only flips the global phase.
    pub fn apply_cz(&mut self, edge: u32) -> Result<()> {
        self.check_edge(edge)?;
        if edge == 0 {
            self.phase = self.phase.negated();
            return Ok(());
        }
        let low = (edge & 63) as usize;
        let high = (edge >> 6) as usize;
        let mut pattern = u64::MAX;
        for (b, &half) in LOW_HALF.iter().enumerate() {
            if low >> b & 1 == 1 {
                pattern &= !half;
            }
        }
        pattern &= self.valid_mask();
        for (index, word) in self.words.iter_mut().enumerate() {
            if index & high == high {
                *word ^= pattern;
            }
        }
        Ok(())
    }

    /// Flip signs on every |s> with odd overlap against `z_mask`; the
    /// combined action of Pauli Z on each set bit.
    pub fn apply_z_mask(&mut self, z_mask: u32) -> Result<()> {
        self.check_edge(z_mask)?;
        let low = (z_mask & 63) as usize;
        let high = (z_mask >> 6) as usize;
        let mut pattern = 0u64;
        for (b, &half) in LOW_HALF.iter().enumerate() {
            if low >> b & 1 == 1 {
                pattern ^= !half;
            }
        }
        let valid = self.valid_mask();
        for (index, word) in self.words.iter_mut().enumerate() {
            let flip = if (index & high).count_ones() % 2 == 1 {
                !pattern
            } else {
                pattern
            };
            *word ^= flip & valid;
        }
        Ok(())
    }

    /// Relabel basis states by XOR with `x_mask`; the combined action of
    /// Pauli X on each set bit.
    pub fn apply_x_mask(&mut self, x_mask: u32) -> Result<()> {
        self.check_edge(x_mask)?;
        let high = (x_mask >> 6) as usize;
        if high != 0 {
            for index in 0..self.words.len() {
                let partner = index ^ high;
                if index < partner {
                    self.words.swap(index, partner);
                }
            }
        }
        let low = (x_mask & 63) as usize;
        if low != 0 {
            for word in self.words.iter_mut() {
                let mut w = *word;
                for (b, &half) in LOW_HALF.iter().enumerate() {
                    if low >> b & 1 == 1 {
                        let shift = 1 << b;
                        w = ((w & half) << shift) | ((w >> shift) & half);
                    }
                }
                *word = w;
            }
        }
        Ok(())
    }

    pub fn apply_pauli_z(&mut self, qubit: usize) -> Result<()> {
        self.check_qubit(qubit)?;
        self.apply_z_mask(1 << (qubit - 1))
    }

    pub fn apply_pauli_x(&mut self, qubit: usize) -> Result<()> {
        self.check_qubit(qubit)?;
        self.apply_x_mask(1 << (qubit - 1))
    }

    /// Flip every sign. Physically the same as negating the phase.
    pub(crate) fn flip_all_signs(&mut self) {
        let valid = self.valid_mask();
        for word in self.words.iter_mut() {
            *word ^= valid;
        }
    }

    pub fn negative_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exactly half the signs negative; equivalently orthogonal to |+>^n.
    pub fn is_balanced(&self) -> bool {
        self.negative_count() == 1 << (self.n_qubits - 1)
    }

    /// Exact overlap <self|other>, phases included.
    pub fn inner(&self, other: &SignVector) -> Result<Scalar> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::SizeMismatch(self.n_qubits, other.n_qubits));
        }
        let differing: i128 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as i128)
            .sum();
        let num = (1i128 << self.n_qubits) - 2 * differing;
        let phase = self.phase.conj() * other.phase;
        Ok(Scalar::new(num, self.n_qubits as u32, phase))
    }

    /// Equality as physical states: i^a * signs and i^(a+2) * (-signs)
    /// describe the same vector.
    pub fn same_state(&self, other: &SignVector) -> bool {
        if self.n_qubits != other.n_qubits {
            return false;
        }
        match (4 + other.phase.exponent() - self.phase.exponent()) % 4 {
            0 => self.words == other.words,
            2 => {
                let valid = self.valid_mask();
                self.words
                    .iter()
                    .zip(&other.words)
                    .all(|(a, b)| a ^ b == valid)
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signs_of(state: &SignVector) -> Vec<i8> {
        (0..1 << state.n_qubits())
            .map(|s| state.sign_at(s))
            .collect()
    }

    #[test]
    fn cz_on_plus_pair() {
        let mut state = SignVector::plus_state(2).unwrap();
        state.apply_cz(0b11).unwrap();
        assert_eq!(signs_of(&state), vec![1, 1, 1, -1]);
        assert_eq!(state.phase(), Phase::ONE);
    }

    #[test]
    fn cz_is_self_inverse() {
        let mut state = SignVector::plus_state(3).unwrap();
        state.apply_cz(0b101).unwrap();
        let once = state.clone();
        state.apply_cz(0b101).unwrap();
        state.apply_cz(0b101).unwrap();
        assert_eq!(state, once);
    }

    #[test]
    fn empty_edge_only_flips_phase() {
        let mut state = SignVector::plus_state(1).unwrap();
        state.apply_cz(0).unwrap();
        assert_eq!(signs_of(&state), vec![1, 1]);
        assert_eq!(state.phase(), Phase::MINUS_ONE);
    }

    #[test]
    fn edge_out_of_range_is_rejected() {
        let mut state = SignVector::plus_state(2).unwrap();
        assert!(state.apply_cz(0b100).is_err());
        assert!(state.apply_pauli_z(3).is_err());
        assert!(state.apply_pauli_z(0).is_err());
    }

    #[test]
    fn z_mask_flips_odd_overlaps() {
        let mut state = SignVector::plus_state(2).unwrap();
        state.apply_z_mask(0b11).unwrap();
        assert_eq!(signs_of(&state), vec![1, -1, -1, 1]);
    }

    #[test]
    fn x_mask_permutes_indices() {
        // Indices 0..8 get signs -1 exactly on {1,4,6}; XOR by 0b101 maps
        // these to {4,1,3}.
        let mut state = SignVector::from_signs(3, &[1, -1, 1, 1, -1, 1, -1, 1]).unwrap();
        state.apply_x_mask(0b101).unwrap();
        assert_eq!(signs_of(&state), vec![1, -1, 1, -1, -1, 1, 1, 1]);
    }

    #[test]
    fn x_mask_matches_naive_permutation_across_word_boundary() {
        let n = 8;
        let signs: Vec<i8> = (0..1 << n)
            .map(|s: usize| if s.is_multiple_of(3) { -1 } else { 1 })
            .collect();
        let base = SignVector::from_signs(n, &signs).unwrap();
        for x_mask in [0b1, 0b100000, 0b1000000, 0b10100101, 0b11111111] {
            let mut fast = base.clone();
            fast.apply_x_mask(x_mask).unwrap();
            for s in 0..1usize << n {
                assert_eq!(fast.sign_at(s), base.sign_at(s ^ x_mask as usize));
            }
        }
    }

    #[test]
    fn balance_counts() {
        let plus = SignVector::plus_state(4).unwrap();
        assert!(!plus.is_balanced());
        let mut z1 = plus.clone();
        z1.apply_pauli_z(1).unwrap();
        assert!(z1.is_balanced());
    }

    #[test]
    fn inner_products_are_exact() {
        let plus = SignVector::plus_state(3).unwrap();
        assert_eq!(plus.inner(&plus).unwrap(), Scalar::one());
        let mut z1 = plus.clone();
        z1.apply_pauli_z(1).unwrap();
        assert!(plus.inner(&z1).unwrap().is_zero());
        let mut phased = plus.clone();
        phased.multiply_phase(Phase::I);
        assert_eq!(plus.inner(&phased).unwrap(), Scalar::new(8, 3, Phase::I));
        assert_eq!(
            phased.inner(&plus).unwrap(),
            Scalar::new(8, 3, Phase::MINUS_I)
        );
    }

    #[test]
    fn physical_equality_absorbs_sign_flips() {
        let mut a = SignVector::plus_state(2).unwrap();
        let mut b = a.clone();
        assert!(a.same_state(&b));
        b.flip_all_signs();
        assert!(!a.same_state(&b));
        b.multiply_phase(Phase::MINUS_ONE);
        assert!(a.same_state(&b));
        a.multiply_phase(Phase::I);
        assert!(!a.same_state(&b));
    }
}
