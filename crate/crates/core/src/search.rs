//! Classification and enumeration of two-word symmetric hypergraph codes.
//!
//! A symmetric hypergraph code is named by a tuple: the set of weights on
//! which its X-difference state carries negative signs, plus the number of
//! Z gates defining the second codeword. Distance at least 2 is decided by
//! three exact binomial identities, which makes an exhaustive search over
//! all tuples feasible far beyond dense-simulation range.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::kl::{symmetric_code_distance, CodeBasis, KlWitness};
use crate::pauli::PauliString;
use crate::scalar::Scalar;
use crate::state::SignVector;
use crate::symmetric::{SymmetricHypergraph, SymmetricState};

/// Names a two-word symmetric hypergraph code: the negative weights of its
/// X-difference state (on one fewer qubit than the code) and the number of
/// Z gates applied for the second codeword.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CodeTuple {
    n_code_qubits: usize,
    weights: BTreeSet<usize>,
    z_count: usize,
}

impl CodeTuple {
    pub fn new(n_code_qubits: usize, weights: BTreeSet<usize>, z_count: usize) -> Result<Self> {
        assert!(n_code_qubits >= 2, "a code needs at least two qubits");
        for &w in &weights {
            // Weight 0 is excluded: a normalized code hypergraph has no
            // empty edge, so its difference state is positive at weight 0.
            if w == 0 || w > n_code_qubits - 1 {
                return Err(Error::WeightOutOfRange {
                    weight: w,
                    max: n_code_qubits - 1,
                });
            }
        }
        if z_count > n_code_qubits {
            return Err(Error::ZCountOutOfRange {
                z_count,
                n_qubits: n_code_qubits,
            });
        }
        Ok(CodeTuple {
            n_code_qubits,
            weights,
            z_count,
        })
    }

    pub fn n_code_qubits(&self) -> usize {
        self.n_code_qubits
    }

    pub fn weights(&self) -> &BTreeSet<usize> {
        &self.weights
    }

    pub fn z_count(&self) -> usize {
        self.z_count
    }

    /// Qubit count of the X-difference state.
    pub fn difference_qubits(&self) -> usize {
        self.n_code_qubits - 1
    }

    /// The X-difference state named by this tuple.
    pub fn difference_state(&self) -> SymmetricState {
        SymmetricState::new(self.difference_qubits(), self.weights.clone())
            .expect("weights validated on construction")
    }

    /// The code hypergraph in compact form: reconstruct the difference
    /// hypergraph from its weight signs, then lift it onto one more
    /// vertex.
    pub fn code_hypergraph(&self) -> SymmetricHypergraph {
        let signs = self.difference_state().weight_signs();
        SymmetricHypergraph::from_weight_signs(self.difference_qubits(), &signs).lift()
    }

    /// Per-weight signs of the code state itself (on the full qubit
    /// count).
    pub fn code_weight_signs(&self) -> Vec<i8> {
        self.code_hypergraph().weight_signs()
    }

    /// The lifted hypergraph consists of 2-edges only.
    pub fn is_graph_code(&self) -> bool {
        self.code_hypergraph().is_graph()
    }

    /// Explicit code: the symmetric hypergraph plus the Z-gate vertex set
    /// {1..l}. Fails above the explicit-construction range.
    pub fn to_code(&self) -> Result<(Hypergraph, Vec<usize>)> {
        let graph = self.code_hypergraph().to_hypergraph()?;
        Ok((graph, (1..=self.z_count).collect()))
    }

    /// Read a tuple back off a symmetric, normalized hypergraph and a
    /// Z-gate vertex set. Only the size of the set matters for a
    /// symmetric code.
    pub fn from_code(graph: &Hypergraph, z_vertices: &[usize]) -> Result<CodeTuple> {
        let classes = graph.cardinality_classes()?;
        if classes.contains(&0) {
            return Err(Error::NotNormalized("the empty edge"));
        }
        if classes.contains(&1) {
            return Err(Error::NotNormalized("1-edges"));
        }
        let mut seen = BTreeSet::new();
        for &v in z_vertices {
            if v == 0 || v > graph.n_vertices() || !seen.insert(v) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n_vertices: graph.n_vertices(),
                });
            }
        }
        // X-difference at vertex 1, computed on edges: toggle the reduced
        // edges through vertex 1, then drop the now-isolated vertex.
        let difference = graph
            .symmetric_difference(&graph.pauli_x(1)?)?
            .delete_vertex(1)?;
        let difference_classes = difference.cardinality_classes()?;
        let signs =
            SymmetricHypergraph::new(difference.n_vertices(), difference_classes)?.weight_signs();
        let weights: BTreeSet<usize> = signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .map(|(w, _)| w)
            .collect();
        CodeTuple::new(graph.n_vertices(), weights, z_vertices.len())
    }

    /// Dense two-word basis span(|H>, Z_1..Z_l |H>).
    pub fn dense_code(&self) -> Result<CodeBasis> {
        if self.z_count == 0 {
            return Err(Error::DegenerateCode);
        }
        let first = SignVector::from_weight_signs(self.n_code_qubits, &self.code_weight_signs())?;
        let mut second = first.clone();
        second.apply_z_mask((1u32 << self.z_count) - 1)?;
        CodeBasis::new(vec![first, second])
    }

    /// Distance-2 classification by the three binomial identities, all in
    /// exact wide integers. Z counts of 0 or 1 never give distance 2.
    ///
    /// When the Z set covers every code qubit, the masks restricted to the
    /// difference state saturate, so the second and third identities
    /// coincide at l = n.
    pub fn distance2_binomial(&self) -> bool {
        let n = self.difference_qubits();
        if self.z_count <= 1 || n < 2 {
            return false;
        }
        let half: u128 = 1 << (n - 1);
        let quarter: u128 = 1 << (n - 2);
        let total: u128 = self.weights.iter().map(|&m| binomial(n, m)).sum();
        if total != half {
            return false;
        }
        let low = self.z_count.min(n);
        let low_less = (self.z_count - 1).min(n);
        self.odd_overlap_count(low) == quarter && self.odd_overlap_count(low_less) == quarter
    }

    /// Number of negative-weight basis states with an odd count of ones
    /// among the first `z_qubits` positions of the difference state.
    fn odd_overlap_count(&self, z_qubits: usize) -> u128 {
        let n = self.difference_qubits();
        let mut count: u128 = 0;
        for &m in &self.weights {
            let mut j = 1;
            while j <= z_qubits && j <= m {
                count += binomial(z_qubits, j) * binomial(n - z_qubits, m - j);
                j += 2;
            }
        }
        count
    }

    /// Distance-2 classification by the three balancedness checks on the
    /// expanded difference state. Independent of the binomial route;
    /// agrees with it everywhere both are defined.
    pub fn distance2_balanced(&self) -> Result<bool> {
        let n = self.difference_qubits();
        if self.z_count <= 1 || n < 2 {
            return Ok(false);
        }
        let mut state = self.difference_state().expand()?;
        let plain = state.is_balanced();
        let low_less = (self.z_count - 1).min(n);
        for qubit in 1..=low_less {
            state.apply_pauli_z(qubit)?;
        }
        let decorated_less = state.is_balanced();
        let low = self.z_count.min(n);
        let decorated = if low > low_less {
            state.apply_pauli_z(low)?;
            state.is_balanced()
        } else {
            decorated_less
        };
        Ok(plain && decorated && decorated_less)
    }

    /// Necessary condition for distance 3: this tuple and both Z-count
    /// neighbours classify as distance 2.
    pub fn distance3_necessary(&self) -> Result<bool> {
        if self.z_count <= 1 || self.z_count >= self.n_code_qubits {
            return Err(Error::ZCountOutOfRange {
                z_count: self.z_count,
                n_qubits: self.n_code_qubits,
            });
        }
        let with = |z| {
            CodeTuple::new(self.n_code_qubits, self.weights.clone(), z)
                .expect("validated range")
                .distance2_binomial()
        };
        Ok(self.distance2_binomial() && with(self.z_count + 1) && with(self.z_count - 1))
    }
}

impl std::fmt::Display for CodeTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("({")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        write!(
            f,
            "}}, l={}) on {} qubits",
            self.z_count, self.n_code_qubits
        )
    }
}

/// A node of the subset-sum walk over difference-state weights.
struct SubsetFrame {
    index: usize,
    sum: u128,
    chosen: Vec<usize>,
}

impl SubsetFrame {
    fn root() -> Self {
        SubsetFrame {
            index: 0,
            sum: 0,
            chosen: Vec::new(),
        }
    }
}

/// One row of search output; the structured external record format.
#[derive(Debug, Clone, Serialize)]
pub struct SearchRecord {
    pub n: usize,
    pub m: Vec<usize>,
    pub l: usize,
    pub distance2: bool,
    pub graph_code: bool,
    pub dist3_candidate: bool,
    pub dist3_confirmed: bool,
}

/// All tuples on `n_code_qubits` qubits with distance at least 2, in
/// canonical order (weight set, then Z count). Graph codes are dropped
/// when `exclude_graph_codes` is set.
///
/// The weight sets are found by depth-first subset-sum over the binomial
/// coefficients (largest first), pruning on overshoot and on the
/// unreachable-target bound; the Z-count conditions are evaluated at the
/// leaves from a precomputed odd-overlap table.
pub fn enumerate_distance2(
    n_code_qubits: usize,
    exclude_graph_codes: bool,
) -> Result<Vec<CodeTuple>> {
    assert!(n_code_qubits >= 3, "search starts at three code qubits");
    if n_code_qubits > 30 {
        return Err(Error::TooManyVertices {
            requested: n_code_qubits,
        });
    }
    let n = n_code_qubits - 1;
    let half: u128 = 1 << (n - 1);
    let quarter: u128 = 1 << (n - 2);

    // overlap_table[z][m]: weight-m strings with odd ones in the first z
    // positions.
    let overlap_table: Vec<Vec<u128>> = (0..=n)
        .map(|z| {
            (0..=n)
                .map(|m| {
                    let mut count = 0u128;
                    let mut j = 1;
                    while j <= z && j <= m {
                        count += binomial(z, j) * binomial(n - z, m - j);
                        j += 2;
                    }
                    count
                })
                .collect()
        })
        .collect();

    // Weights ordered by descending binomial count for aggressive pruning.
    let mut items: Vec<(usize, u128)> = (1..=n).map(|m| (m, binomial(n, m))).collect();
    items.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut suffix = vec![0u128; items.len() + 1];
    for i in (0..items.len()).rev() {
        suffix[i] = suffix[i + 1] + items[i].1;
    }

    let emit = |chosen: &[usize], out: &mut Vec<CodeTuple>| {
        let weights: BTreeSet<usize> = chosen.iter().copied().collect();
        let totals: Vec<u128> = (0..=n)
            .map(|z| weights.iter().map(|&m| overlap_table[z][m]).sum())
            .collect();
        let graph = exclude_graph_codes && {
            let signs = SymmetricState::new(n, weights.clone())
                .expect("weights in range")
                .weight_signs();
            SymmetricHypergraph::from_weight_signs(n, &signs)
                .lift()
                .is_graph()
        };
        if graph {
            return;
        }
        for z_count in 2..=n_code_qubits {
            let low = z_count.min(n);
            let low_less = (z_count - 1).min(n);
            if totals[low] == quarter && totals[low_less] == quarter {
                out.push(CodeTuple {
                    n_code_qubits,
                    weights: weights.clone(),
                    z_count,
                });
            }
        }
    };

    // Walk the include/exclude tree. Exact hits emit immediately (every
    // remaining count is positive, so nothing below can hit again);
    // reaching the split depth parks the frame as a parallel seed.
    fn walk(
        seed: SubsetFrame,
        items: &[(usize, u128)],
        suffix: &[u128],
        target: u128,
        split_depth: Option<usize>,
        seeds: &mut Vec<SubsetFrame>,
        leaf: &mut impl FnMut(&[usize]),
    ) {
        let mut stack = vec![seed];
        while let Some(frame) = stack.pop() {
            if frame.sum == target {
                leaf(&frame.chosen);
                continue;
            }
            if frame.index == items.len() || frame.sum + suffix[frame.index] < target {
                continue;
            }
            if Some(frame.index) == split_depth {
                seeds.push(frame);
                continue;
            }
            let (m, count) = items[frame.index];
            if frame.sum + count <= target {
                let mut chosen = frame.chosen.clone();
                chosen.push(m);
                stack.push(SubsetFrame {
                    index: frame.index + 1,
                    sum: frame.sum + count,
                    chosen,
                });
            }
            stack.push(SubsetFrame {
                index: frame.index + 1,
                sum: frame.sum,
                chosen: frame.chosen,
            });
        }
    }

    let split_depth = items.len().min(12);
    let mut seeds = Vec::new();
    let mut shallow = Vec::new();
    walk(
        SubsetFrame::root(),
        &items,
        &suffix,
        half,
        Some(split_depth),
        &mut seeds,
        &mut |chosen| emit(chosen, &mut shallow),
    );

    let deep: Vec<CodeTuple> = seeds
        .into_par_iter()
        .map(|seed| {
            let mut found = Vec::new();
            walk(
                seed,
                &items,
                &suffix,
                half,
                None,
                &mut Vec::new(),
                &mut |chosen| emit(chosen, &mut found),
            );
            found
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });

    let mut results = shallow;
    results.extend(deep);
    results.sort_by(|a, b| {
        a.weights
            .iter()
            .cmp(b.weights.iter())
            .then(a.z_count.cmp(&b.z_count))
    });
    Ok(results)
}

/// A non-graph tuple passing the necessary distance-3 filter, resolved by
/// the exact symmetric fast-path check.
#[derive(Debug, Clone)]
pub struct Distance3Candidate {
    pub tuple: CodeTuple,
    /// True iff the full check confirms distance at least 3.
    pub confirmed: bool,
    /// A violating weight-<=2 operator when refuted.
    pub witness: Option<KlWitness>,
}

/// Run the distance-3 pipeline up to `n_max` code qubits: enumerate the
/// non-graph distance-2 tuples, keep those whose Z-count neighbours also
/// classify as distance 2, and settle each survivor with the symmetric
/// Knill-Laflamme check over all weight-<=2 Pauli strings.
pub fn verify_distance3_candidates(n_max: usize) -> Result<Vec<Distance3Candidate>> {
    if n_max > 30 {
        return Err(Error::TooManyVertices { requested: n_max });
    }
    let mut candidates = Vec::new();
    for n_code in 3..=n_max {
        for tuple in enumerate_distance2(n_code, true)? {
            if tuple.z_count() <= 1 || tuple.z_count() >= n_code {
                continue;
            }
            if !tuple.distance3_necessary()? {
                continue;
            }
            let (found, witness) =
                symmetric_code_distance(n_code, &tuple.code_weight_signs(), tuple.z_count(), 3)?;
            candidates.push(Distance3Candidate {
                tuple,
                confirmed: found >= 3,
                witness,
            });
        }
    }
    Ok(candidates)
}

/// Per-tuple search records for one qubit count, with the optional
/// distance-3 annotations filled in.
pub fn search_records(
    n_code_qubits: usize,
    exclude_graph_codes: bool,
    dist3_filter: bool,
) -> Result<Vec<SearchRecord>> {
    let tuples = enumerate_distance2(n_code_qubits, exclude_graph_codes)?;
    tuples
        .into_iter()
        .map(|tuple| {
            let graph_code = tuple.is_graph_code();
            let in_range = tuple.z_count() > 1 && tuple.z_count() < n_code_qubits;
            let candidate =
                dist3_filter && !graph_code && in_range && tuple.distance3_necessary()?;
            let confirmed = if candidate {
                let (found, _) = symmetric_code_distance(
                    n_code_qubits,
                    &tuple.code_weight_signs(),
                    tuple.z_count(),
                    3,
                )?;
                found >= 3
            } else {
                false
            };
            Ok(SearchRecord {
                n: n_code_qubits,
                m: tuple.weights().iter().copied().collect(),
                l: tuple.z_count(),
                distance2: true,
                graph_code,
                dist3_candidate: candidate,
                dist3_confirmed: confirmed,
            })
        })
        .collect()
}

/// How a complete-graph code fails distance 3.
#[derive(Debug, Clone)]
pub enum GraphCodeWitness {
    /// No Z gates: the two codewords coincide.
    Degenerate,
    /// Z gates everywhere: a weight-1 operator already maps codeword to
    /// codeword.
    OffDiagonal {
        operator: PauliString,
        overlap: Scalar,
    },
    /// Otherwise the weight-2 operator built from X and Z on the first
    /// and last qubits takes opposite diagonal values on the two words.
    Diagonal {
        operator: PauliString,
        first_word: Scalar,
        second_word: Scalar,
    },
}

/// Exhibit the Knill-Laflamme violation showing the complete-graph code
/// on `n` qubits with `z_count` Z gates has distance below 3.
pub fn graph_no_distance3(n: usize, z_count: usize) -> Result<GraphCodeWitness> {
    assert!(n >= 2);
    if z_count > n {
        return Err(Error::ZCountOutOfRange {
            z_count,
            n_qubits: n,
        });
    }
    if z_count == 0 {
        return Ok(GraphCodeWitness::Degenerate);
    }
    let graph = Hypergraph::symmetric(n, &BTreeSet::from([2]))?;
    let first = graph.state()?;
    let mut second = first.clone();
    second.apply_z_mask((1u32 << z_count) - 1)?;

    if z_count == n {
        // X_1 Z_1 sends |G> straight to the second codeword.
        let operator = PauliString::x(n, 1)?.compose(&PauliString::z(n, 1)?)?;
        let overlap = second.inner(&operator.apply(&first)?)?;
        return Ok(GraphCodeWitness::OffDiagonal { operator, overlap });
    }
    let operator = PauliString::z(n, 1)?
        .compose(&PauliString::x(n, 1)?)?
        .compose(&PauliString::z(n, n)?)?
        .compose(&PauliString::x(n, n)?)?;
    let first_word = first.inner(&operator.apply(&first)?)?;
    let second_word = second.inner(&operator.apply(&second)?)?;
    Ok(GraphCodeWitness::Diagonal {
        operator,
        first_word,
        second_word,
    })
}

/// Exhaustive dense cross-checks backing the classification; these power
/// the oracle-crosscheck mode and the verification suite.
pub mod crosscheck {
    use super::*;
    use crate::kl::distance;

    /// A tuple where the binomial classification and the dense
    /// Knill-Laflamme verdict disagree.
    #[derive(Debug, Clone)]
    pub struct Disagreement {
        pub tuple: CodeTuple,
        pub binomial: bool,
        pub dense_distance: usize,
    }

    fn all_weight_sets(n: usize) -> Vec<BTreeSet<usize>> {
        (0u32..1 << (n - 1))
            .map(|bits| {
                (1..=n.saturating_sub(1))
                    .filter(|&m| bits >> (m - 1) & 1 == 1)
                    .collect()
            })
            .collect()
    }

    /// Compare `distance2_binomial` against dense distance >= 2 for every
    /// tuple on `n_code_qubits` qubits (all weight sets, all Z counts
    /// from 1; zero Z gates spans no two-word code).
    pub fn distance2_agreement(n_code_qubits: usize) -> Result<Option<Disagreement>> {
        let found: Vec<Disagreement> = all_weight_sets(n_code_qubits)
            .into_par_iter()
            .map(|weights| {
                let mut local = Vec::new();
                for z_count in 1..=n_code_qubits {
                    let tuple = CodeTuple::new(n_code_qubits, weights.clone(), z_count)
                        .expect("valid range");
                    let binomial = tuple.distance2_binomial();
                    let dense = distance(&tuple.dense_code()?, 2)?;
                    if binomial != (dense >= 2) {
                        local.push(Disagreement {
                            tuple,
                            binomial,
                            dense_distance: dense,
                        });
                    }
                }
                Ok(local)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(found.into_iter().next())
    }

    /// Compare the balancedness route against the binomial route for
    /// every tuple on `n_code_qubits` qubits.
    pub fn balanced_agreement(n_code_qubits: usize) -> Result<Option<CodeTuple>> {
        let found: Vec<CodeTuple> = all_weight_sets(n_code_qubits)
            .into_par_iter()
            .map(|weights| {
                for z_count in 1..=n_code_qubits {
                    let tuple = CodeTuple::new(n_code_qubits, weights.clone(), z_count)
                        .expect("valid range");
                    if tuple.distance2_balanced()? != tuple.distance2_binomial() {
                        return Ok(Some(tuple));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(found.into_iter().next())
    }

    /// Every enumerated tuple must really have dense distance >= 2.
    pub fn enumeration_is_sound(n_code_qubits: usize) -> Result<Option<Disagreement>> {
        let tuples = enumerate_distance2(n_code_qubits, false)?;
        let found: Vec<Disagreement> = tuples
            .into_par_iter()
            .map(|tuple| {
                let dense = distance(&tuple.dense_code()?, 2)?;
                if dense < 2 {
                    Ok(Some(Disagreement {
                        binomial: true,
                        dense_distance: dense,
                        tuple,
                    }))
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(found.into_iter().next())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(n: usize, weights: &[usize], z: usize) -> CodeTuple {
        CodeTuple::new(n, weights.iter().copied().collect(), z).unwrap()
    }

    #[test]
    fn worked_example_tuple_to_code() {
        let (graph, z_vertices) = tuple(3, &[1, 2], 1).to_code().unwrap();
        let expected =
            Hypergraph::from_vertex_sets(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]).unwrap();
        assert_eq!(graph, expected);
        assert_eq!(z_vertices, vec![1]);
    }

    #[test]
    fn empty_weights_give_the_free_state() {
        let (graph, _) = tuple(4, &[], 2).to_code().unwrap();
        assert_eq!(graph, Hypergraph::empty(4).unwrap());
    }

    #[test]
    fn odd_weights_give_the_complete_graph() {
        for n_code in 3..=8 {
            let odds: Vec<usize> = (1..n_code).step_by(2).collect();
            let t = tuple(n_code, &odds, 2);
            assert!(t.is_graph_code());
            let (graph, _) = t.to_code().unwrap();
            assert_eq!(
                graph,
                Hypergraph::symmetric(n_code, &BTreeSet::from([2])).unwrap()
            );
            assert_eq!(
                CodeTuple::from_code(&graph, &[1, 2]).unwrap(),
                tuple(n_code, &odds, 2)
            );
        }
    }

    #[test]
    fn graph_detection_is_structural_but_matches_the_odd_shortcut() {
        // Detection inspects edge cardinalities; the odd-weight pattern
        // falls out as a consequence rather than an assumption.
        for n_code in 3..=10 {
            let odds: BTreeSet<usize> = (1..n_code).step_by(2).collect();
            for bits in 0u32..1 << (n_code - 1) {
                let weights: BTreeSet<usize> =
                    (1..n_code).filter(|&m| bits >> (m - 1) & 1 == 1).collect();
                let t = CodeTuple::new(n_code, weights.clone(), 2).unwrap();
                let shortcut = weights.is_empty() || weights == odds;
                assert_eq!(t.is_graph_code(), shortcut, "weights {weights:?}");
            }
        }
    }

    #[test]
    fn worked_example_code_to_tuple() {
        let graph =
            Hypergraph::from_vertex_sets(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]).unwrap();
        assert_eq!(
            CodeTuple::from_code(&graph, &[1]).unwrap(),
            tuple(3, &[1, 2], 1)
        );
        assert_eq!(
            CodeTuple::from_code(&Hypergraph::empty(5).unwrap(), &[2, 4]).unwrap(),
            tuple(5, &[], 2)
        );
    }

    #[test]
    fn from_code_rejects_unnormalized_or_lopsided_graphs() {
        let lopsided = Hypergraph::from_vertex_sets(3, &[&[1, 2]]).unwrap();
        assert!(matches!(
            CodeTuple::from_code(&lopsided, &[1]),
            Err(Error::NotSymmetric { .. })
        ));
        let with_singletons = Hypergraph::symmetric(3, &BTreeSet::from([1, 2])).unwrap();
        assert_eq!(
            CodeTuple::from_code(&with_singletons, &[1]),
            Err(Error::NotNormalized("1-edges"))
        );
    }

    #[test]
    fn binomial_conditions_on_small_tuples() {
        // Condition (i) fails: C(2,1) + C(2,2) = 3 is not 2.
        assert!(!tuple(3, &[1, 2], 2).distance2_binomial());
        // Graph tuples pass exactly for z counts 2..difference_qubits-1.
        for n_code in 5..=9 {
            let odds: Vec<usize> = (1..n_code).step_by(2).collect();
            for z in 0..=n_code {
                let expect = (2..n_code - 1).contains(&z);
                assert_eq!(
                    tuple(n_code, &odds, z).distance2_binomial(),
                    expect,
                    "odd tuple n={n_code} z={z}"
                );
            }
        }
        // Condition (i) is necessary regardless of the z count.
        for z in 0..=6 {
            assert!(!tuple(6, &[1, 2], z).distance2_binomial());
        }
    }

    #[test]
    fn balanced_route_agrees_on_a_sample() {
        for n_code in 3..=8 {
            let disagreement = crosscheck::balanced_agreement(n_code).unwrap();
            assert!(disagreement.is_none(), "disagrees at {disagreement:?}");
        }
    }

    #[test]
    fn necessary_filter_needs_neighbours() {
        // Graph tuples keep distance 2 under z +- 1, so the filter passes.
        assert!(tuple(8, &[1, 3, 5, 7], 4).distance3_necessary().unwrap());
        // A tuple failing distance 2 itself fails the filter.
        assert!(!tuple(8, &[1, 2], 4).distance3_necessary().unwrap());
        assert!(tuple(8, &[1, 3, 5, 7], 8).distance3_necessary().is_err());
        assert!(tuple(8, &[1, 3, 5, 7], 1).distance3_necessary().is_err());
    }

    #[test]
    fn enumeration_matches_hand_analysis_on_four_qubits() {
        let all = enumerate_distance2(4, false).unwrap();
        assert_eq!(all, vec![tuple(4, &[1, 3], 2)]);
        assert!(enumerate_distance2(4, true).unwrap().is_empty());
    }

    #[test]
    fn enumeration_is_complete_against_brute_force() {
        for n_code in 3..=10 {
            let mut expected = Vec::new();
            for bits in 0u32..1 << (n_code - 1) {
                let weights: BTreeSet<usize> =
                    (1..n_code).filter(|&m| bits >> (m - 1) & 1 == 1).collect();
                for z_count in 0..=n_code {
                    let t = CodeTuple::new(n_code, weights.clone(), z_count).unwrap();
                    if t.distance2_binomial() {
                        expected.push(t);
                    }
                }
            }
            expected.sort_by(|a, b| {
                a.weights
                    .iter()
                    .cmp(b.weights.iter())
                    .then(a.z_count.cmp(&b.z_count))
            });
            assert_eq!(enumerate_distance2(n_code, false).unwrap(), expected);
        }
    }

    #[test]
    fn enumeration_is_canonically_ordered_and_deduplicated() {
        let all = enumerate_distance2(9, false).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all.len(), sorted.len());
        for window in all.windows(2) {
            let key =
                |t: &CodeTuple| (t.weights().iter().copied().collect::<Vec<_>>(), t.z_count());
            assert!(key(&window[0]) < key(&window[1]));
        }
    }

    #[test]
    fn complete_graph_witnesses() {
        match graph_no_distance3(5, 3).unwrap() {
            GraphCodeWitness::Diagonal {
                first_word,
                second_word,
                ..
            } => {
                assert_eq!(first_word, Scalar::integer(-1));
                assert_eq!(second_word, Scalar::integer(1));
            }
            other => panic!("expected a diagonal witness, got {other:?}"),
        }
        match graph_no_distance3(4, 4).unwrap() {
            GraphCodeWitness::OffDiagonal { overlap, .. } => {
                assert_eq!(overlap.numerator().abs(), 1 << 4);
            }
            other => panic!("expected an off-diagonal witness, got {other:?}"),
        }
        assert!(matches!(
            graph_no_distance3(3, 0).unwrap(),
            GraphCodeWitness::Degenerate
        ));
    }

    #[test]
    fn dense_distance_of_named_examples() {
        use crate::kl::distance;
        // One Z gate cannot protect against single Z errors.
        assert_eq!(
            distance(&tuple(3, &[1, 2], 1).dense_code().unwrap(), 2).unwrap(),
            1
        );
        // The complete-graph code reaches exactly distance 2.
        let code = tuple(6, &[1, 3, 5], 3).dense_code().unwrap();
        assert_eq!(distance(&code, 3).unwrap(), 2);
    }
}
