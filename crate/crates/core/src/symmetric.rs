//! Permutation-invariant states and hypergraphs in compressed form.
//!
//! A symmetric hypergraph either contains all edges of a given cardinality
//! or none, so a set of cardinalities describes it completely. Likewise the
//! sign of a symmetric state depends only on the basis-state weight, so a
//! set of "negative" weights describes the state. Both forms stay tiny at
//! 30 qubits where explicit edge lists and sign vectors would not.

use std::collections::BTreeSet;

use crate::binom::binomial_is_odd;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Phase;
use crate::state::SignVector;

/// The symmetric state on `n_qubits` whose computational-basis signs are
/// -1 exactly on the weights in `negative_weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricState {
    n_qubits: usize,
    negative_weights: BTreeSet<usize>,
}

impl SymmetricState {
    pub fn new(n_qubits: usize, negative_weights: BTreeSet<usize>) -> Result<Self> {
        if let Some(&w) = negative_weights.iter().next_back() {
            if w > n_qubits {
                return Err(Error::WeightOutOfRange {
                    weight: w,
                    max: n_qubits,
                });
            }
        }
        Ok(SymmetricState {
            n_qubits,
            negative_weights,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn negative_weights(&self) -> &BTreeSet<usize> {
        &self.negative_weights
    }

    /// One sign per weight 0..=n.
    pub fn weight_signs(&self) -> Vec<i8> {
        (0..=self.n_qubits)
            .map(|w| {
                if self.negative_weights.contains(&w) {
                    -1
                } else {
                    1
                }
            })
            .collect()
    }

    /// Dense expansion, phase +1.
    pub fn expand(&self) -> Result<SignVector> {
        SignVector::from_weight_signs(self.n_qubits, &self.weight_signs())
    }
}

/// A symmetric hypergraph as its set of edge cardinalities. Cardinality 0
/// is the empty edge, contributing only a global -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricHypergraph {
    n_vertices: usize,
    cardinalities: BTreeSet<usize>,
}

impl SymmetricHypergraph {
    pub fn new(n_vertices: usize, cardinalities: BTreeSet<usize>) -> Result<Self> {
        if let Some(&k) = cardinalities.iter().next_back() {
            if k > n_vertices {
                return Err(Error::WeightOutOfRange {
                    weight: k,
                    max: n_vertices,
                });
            }
        }
        Ok(SymmetricHypergraph {
            n_vertices,
            cardinalities,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn cardinalities(&self) -> &BTreeSet<usize> {
        &self.cardinalities
    }

    /// Sign of the state at each basis weight: a weight-w string supports
    /// C(w, k) of the cardinality-k edges, so its sign is the parity of
    /// that count summed over the present cardinalities.
    pub fn weight_signs(&self) -> Vec<i8> {
        (0..=self.n_vertices)
            .map(|w| {
                let flips = self
                    .cardinalities
                    .iter()
                    .filter(|&&k| k >= 1 && binomial_is_odd(w, k))
                    .count();
                if flips % 2 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect()
    }

    pub fn phase(&self) -> Phase {
        if self.cardinalities.contains(&0) {
            Phase::MINUS_ONE
        } else {
            Phase::ONE
        }
    }

    /// The symmetric hypergraph realizing the given weight signs: walk
    /// weights upward and toggle the full cardinality class at each
    /// mismatch, which is invisible to all lower weights. A negative sign
    /// at weight 0 is absorbed into the empty edge.
    pub fn from_weight_signs(n_vertices: usize, weight_signs: &[i8]) -> Self {
        assert_eq!(weight_signs.len(), n_vertices + 1);
        let mut target: Vec<i8> = weight_signs.to_vec();
        let mut cardinalities = BTreeSet::new();
        if target[0] < 0 {
            for sign in target.iter_mut() {
                *sign = -*sign;
            }
            cardinalities.insert(0);
        }
        for (w, &wanted) in target.iter().enumerate().skip(1) {
            let flips = cardinalities
                .iter()
                .filter(|&&k| k >= 1 && binomial_is_odd(w, k))
                .count();
            let current = if flips % 2 == 1 { -1 } else { 1 };
            if current != wanted {
                cardinalities.insert(w);
            }
        }
        SymmetricHypergraph {
            n_vertices,
            cardinalities,
        }
    }

    /// Attach one new vertex (which becomes vertex 1) to every edge and
    /// close under symmetry: cardinality k edges become k+1 edges on n+1
    /// vertices. This is the X-difference construction run backwards.
    pub fn lift(&self) -> SymmetricHypergraph {
        SymmetricHypergraph {
            n_vertices: self.n_vertices + 1,
            cardinalities: self.cardinalities.iter().map(|&k| k + 1).collect(),
        }
    }

    /// The X-difference hypergraph: edges through any one vertex, with
    /// that vertex removed. Cardinality k classes become k-1 classes on
    /// n-1 vertices; the empty edge has no vertex to remove and drops out.
    pub fn x_difference(&self) -> SymmetricHypergraph {
        SymmetricHypergraph {
            n_vertices: self.n_vertices - 1,
            cardinalities: self
                .cardinalities
                .iter()
                .filter(|&&k| k >= 1)
                .map(|&k| k - 1)
                .collect(),
        }
    }

    /// Contains only 2-edges (or nothing): an ordinary graph.
    pub fn is_graph(&self) -> bool {
        self.cardinalities.iter().all(|&k| k == 2)
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::symmetric(self.n_vertices, &self.cardinalities)
    }

    /// Dense state including the empty-edge phase.
    pub fn state(&self) -> Result<SignVector> {
        let mut state = SignVector::from_weight_signs(self.n_vertices, &self.weight_signs())?;
        state.multiply_phase(self.phase());
        Ok(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_examples() {
        let plus = SymmetricState::new(3, BTreeSet::new())
            .unwrap()
            .expand()
            .unwrap();
        assert_eq!(plus, SignVector::plus_state(3).unwrap());

        let spec = SymmetricState::new(2, [1, 2].into_iter().collect()).unwrap();
        let state = spec.expand().unwrap();
        assert_eq!(
            (0..4).map(|s| state.sign_at(s)).collect::<Vec<_>>(),
            vec![1, -1, -1, -1]
        );

        // Negative odd weights is the parity pattern Z_1 Z_2 Z_3 |+++>.
        let parity = SymmetricState::new(3, [1, 3].into_iter().collect()).unwrap();
        let expanded = parity.expand().unwrap();
        let mut reference = SignVector::plus_state(3).unwrap();
        for qubit in 1..=3 {
            reference.apply_pauli_z(qubit).unwrap();
        }
        assert_eq!(expanded, reference);
    }

    #[test]
    fn weight_out_of_range_rejected() {
        assert!(SymmetricState::new(2, [3].into_iter().collect()).is_err());
        assert!(SymmetricHypergraph::new(2, [3].into_iter().collect()).is_err());
    }

    #[test]
    fn weight_signs_match_explicit_expansion() {
        for bits in 0u32..32 {
            let cardinalities: BTreeSet<usize> = (0..5)
                .filter(|k| bits >> k & 1 == 1)
                .map(|k| k as usize)
                .collect();
            let compact = SymmetricHypergraph::new(4, cardinalities).unwrap();
            let dense = compact.to_hypergraph().unwrap().state().unwrap();
            assert_eq!(
                compact.state().unwrap(),
                dense,
                "classes {:?}",
                compact.cardinalities()
            );
        }
    }

    #[test]
    fn greedy_reconstruction_roundtrips() {
        for bits in 0u32..64 {
            let cardinalities: BTreeSet<usize> = (1..6)
                .filter(|k| bits >> k & 1 == 1)
                .map(|k| k as usize)
                .collect();
            let compact = SymmetricHypergraph::new(5, cardinalities.clone()).unwrap();
            let rebuilt = SymmetricHypergraph::from_weight_signs(5, &compact.weight_signs());
            assert_eq!(rebuilt.cardinalities(), &cardinalities);
        }
    }

    #[test]
    fn greedy_handles_negative_weight_zero() {
        // Weight 0 negative forces the empty edge plus the complement signs.
        let signs = vec![-1, 1, -1];
        let graph = SymmetricHypergraph::from_weight_signs(2, &signs);
        assert!(graph.cardinalities().contains(&0));
        let state = graph.state().unwrap();
        let direct = SymmetricState::new(2, [0, 2].into_iter().collect())
            .unwrap()
            .expand()
            .unwrap();
        assert!(state.same_state(&direct));
    }

    #[test]
    fn lift_and_difference_invert() {
        let d = SymmetricHypergraph::new(4, [1, 3].into_iter().collect()).unwrap();
        assert_eq!(d.lift().x_difference(), d);
        assert_eq!(d.lift().cardinalities(), &[2, 4].into_iter().collect());
        assert!(!d.is_graph());
        assert!(SymmetricHypergraph::new(4, [2].into_iter().collect())
            .unwrap()
            .is_graph());
        assert!(SymmetricHypergraph::new(4, BTreeSet::new())
            .unwrap()
            .is_graph());
    }
}
