//! Codes for error models with protected qubits.
//!
//! Start from an inner hypergraph on protected vertices whose state is
//! balanced, attach outer vertices by replacing every inner edge e with
//! the edges e+{i} for each outer vertex i, and index codewords by a
//! family of protected-vertex subsets whose pairwise differences all have
//! vanishing coefficient in the inner state's expansion over the
//! hypergraph basis. The resulting code corrects every error pair on the
//! outer vertices whose product weight stays below the outer count; when
//! no codeword carries Z gates on outer vertices it corrects arbitrary
//! outer errors.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{mask_to_vertices, Cursor, Hypergraph};
use crate::kl::{kl_check, kl_check_pairs, paulis_on_support, CodeBasis, KlVerdict};

/// Subsets of the protected vertices whose hypergraph-basis coefficient
/// in the inner state vanishes, as ascending bitmasks.
///
/// These are exactly the Z-decorations under which the inner state stays
/// balanced, computed here by a Walsh transform of the sign vector.
pub fn vanishing_sets(inner: &Hypergraph) -> Result<Vec<u32>> {
    let state = inner.state()?;
    let size = 1usize << inner.n_vertices();
    let mut coefficients: Vec<i32> = (0..size).map(|s| state.sign_at(s) as i32).collect();
    let mut h = 1;
    while h < size {
        for block in (0..size).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (coefficients[i], coefficients[i + h]);
                coefficients[i] = a + b;
                coefficients[i + h] = a - b;
            }
        }
        h *= 2;
    }
    Ok((0..size as u32)
        .filter(|&mask| coefficients[mask as usize] == 0)
        .collect())
}

/// A pair in the family whose symmetric difference escapes the vanishing
/// sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyViolation {
    pub first: u32,
    pub second: u32,
    pub delta: u32,
}

/// Check the closure condition on a codeword-index family: every pairwise
/// symmetric difference must be a vanishing set. A non-empty family
/// forces the empty set in (each member against itself).
pub fn validate_family(
    family: &[u32],
    vanishing: &[u32],
) -> std::result::Result<(), FamilyViolation> {
    for (i, &first) in family.iter().enumerate() {
        for &second in &family[i..] {
            let delta = first ^ second;
            if !vanishing.contains(&delta) {
                return Err(FamilyViolation {
                    first,
                    second,
                    delta,
                });
            }
        }
    }
    Ok(())
}

/// A validated recipe for a protected-qubit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtectedCodeSpec {
    inner: Hypergraph,
    n_outer: usize,
    index_sets: Vec<u32>,
    extra_protected_edges: BTreeSet<u32>,
    include_primed: bool,
}

impl ProtectedCodeSpec {
    /// Validates everything up front: the inner state must be balanced,
    /// the index family closed into the vanishing sets, and extra edges
    /// confined to the protected vertices.
    pub fn new(
        inner: Hypergraph,
        n_outer: usize,
        index_sets: Vec<u32>,
        extra_protected_edges: Vec<u32>,
        include_primed: bool,
    ) -> Result<Self> {
        if n_outer == 0 {
            return Err(Error::NoOuterVertices);
        }
        if !inner.state()?.is_balanced() {
            return Err(Error::NotBalanced);
        }
        let protected_mask = (1u32 << inner.n_vertices()) - 1;
        let mut sets = index_sets;
        sets.sort_unstable();
        sets.dedup();
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for &mask in &sets {
            if mask & !protected_mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 32 - mask.leading_zeros() as usize,
                    n_vertices: inner.n_vertices(),
                });
            }
        }
        let vanishing = vanishing_sets(&inner)?;
        if let Err(violation) = validate_family(&sets, &vanishing) {
            return Err(Error::FamilyNotClosed {
                first: mask_to_vertices(violation.first),
                second: mask_to_vertices(violation.second),
                delta: mask_to_vertices(violation.delta),
            });
        }
        for &edge in &extra_protected_edges {
            if edge & !protected_mask != 0 {
                return Err(Error::ExtraEdgeOnOuter);
            }
        }
        Ok(ProtectedCodeSpec {
            inner,
            n_outer,
            index_sets: sets,
            extra_protected_edges: extra_protected_edges.into_iter().collect(),
            include_primed,
        })
    }

    pub fn inner(&self) -> &Hypergraph {
        &self.inner
    }

    pub fn n_protected(&self) -> usize {
        self.inner.n_vertices()
    }

    pub fn n_outer(&self) -> usize {
        self.n_outer
    }

    pub fn n_total(&self) -> usize {
        self.n_protected() + self.n_outer
    }

    pub fn index_sets(&self) -> &[u32] {
        &self.index_sets
    }

    pub fn include_primed(&self) -> bool {
        self.include_primed
    }

    /// 1-based qubit numbers of the outer vertices.
    pub fn outer_qubits(&self) -> Vec<usize> {
        (self.n_protected() + 1..=self.n_total()).collect()
    }

    fn outer_mask(&self) -> u32 {
        ((1u32 << self.n_outer) - 1) << self.n_protected()
    }

    /// The code hypergraph: every inner edge e is replaced by e+{i} for
    /// each outer vertex i, plus the extra protected edges. By
    /// construction X on any outer vertex acts as the product of the
    /// inner edges' gates, which this asserts.
    pub fn build(&self) -> Result<Hypergraph> {
        let total = self.n_total();
        let mut masks: Vec<u32> = self.extra_protected_edges.iter().copied().collect();
        for outer in 0..self.n_outer {
            let outer_bit = 1u32 << (self.n_protected() + outer);
            for edge in self.inner.edge_masks() {
                masks.push(edge | outer_bit);
            }
        }
        let graph = Hypergraph::new(total, masks)?;
        let inner_lifted: BTreeSet<u32> = self.inner.edge_masks().collect();
        for outer_qubit in self.outer_qubits() {
            let delta = graph.symmetric_difference(&graph.pauli_x(outer_qubit)?)?;
            let delta_edges: BTreeSet<u32> = delta.edge_masks().collect();
            assert_eq!(
                delta_edges, inner_lifted,
                "outer X action must toggle exactly the inner edges"
            );
        }
        Ok(graph)
    }

    /// The ordered codeword basis: for each index set I, Z_I applied to
    /// the code state; primed words (Z on every outer vertex as well)
    /// follow the unprimed ones when enabled.
    pub fn codewords(&self) -> Result<CodeBasis> {
        let base = self.build()?.state()?;
        let mut words = Vec::new();
        for &mask in &self.index_sets {
            let mut word = base.clone();
            word.apply_z_mask(mask)?;
            words.push(word);
        }
        if self.include_primed {
            let outer = self.outer_mask();
            for index in 0..self.index_sets.len() {
                let mut word = words[index].clone();
                word.apply_z_mask(outer)?;
                words.push(word);
            }
        }
        CodeBasis::new(words)
    }

    /// Check the guaranteed error set (all outer Pauli pairs with product
    /// weight below the outer count), and, for codes without primed
    /// words, the stronger claim that every outer error is correctable.
    pub fn verify(&self) -> Result<ProtectedReport> {
        let code = self.codewords()?;
        let outer_paulis = paulis_on_support(self.n_total(), &self.outer_qubits())?;
        let mut bounded_pairs = Vec::new();
        for left in &outer_paulis {
            for right in &outer_paulis {
                let product = left.compose(&right.adjoint())?;
                if product.weight() < self.n_outer {
                    bounded_pairs.push((left, right));
                }
            }
        }
        let guaranteed = kl_check_pairs(&code, bounded_pairs)?;
        let full_outer = if self.include_primed {
            None
        } else {
            Some(kl_check(&code, &outer_paulis)?)
        };
        Ok(ProtectedReport {
            guaranteed,
            full_outer,
        })
    }

    /// One `hypergraph + z set` descriptor line per codeword, in basis
    /// order.
    pub fn codeword_descriptors(&self) -> Result<Vec<String>> {
        let graph = self.build()?;
        let mut lines = Vec::new();
        let mut push = |z_mask: u32| {
            let vertices = mask_to_vertices(z_mask);
            let list = vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            lines.push(format!("{graph}; z={{{list}}}"));
        };
        for &mask in &self.index_sets {
            push(mask);
        }
        if self.include_primed {
            for &mask in &self.index_sets {
                push(mask | self.outer_mask());
            }
        }
        Ok(lines)
    }

    /// Parse the two-line spec format: the inner hypergraph line, then
    /// `outer=<n>; S={},{1}`, with optional `extra=` and `primed=` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut inner = None;
        let mut outer = None;
        let mut family: Option<Vec<u32>> = None;
        let mut extra = Vec::new();
        let mut primed = true;
        for (line_index, raw) in text.lines().enumerate() {
            let line_number = line_index + 1;
            let line = raw.trim_end();
            if line.trim().is_empty() {
                continue;
            }
            let body = line.trim_start();
            if body.starts_with("n=") {
                inner = Some(Hypergraph::parse_at_line(line, line_number)?);
            } else if body.starts_with("outer=") {
                let mut cursor = Cursor::new(line, line_number);
                cursor.expect_keyword("outer")?;
                cursor.expect_char('=')?;
                outer = Some(cursor.number()?);
                cursor.expect_char(';')?;
                cursor.expect_keyword("S")?;
                cursor.expect_char('=')?;
                let sets = cursor.vertex_set_list()?;
                cursor.expect_end()?;
                family = Some(
                    sets.iter()
                        .map(|set| set.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
                        .collect(),
                );
            } else if body.starts_with("extra=") {
                let mut cursor = Cursor::new(line, line_number);
                cursor.expect_keyword("extra")?;
                cursor.expect_char('=')?;
                let sets = cursor.vertex_set_list()?;
                cursor.expect_end()?;
                extra = sets
                    .iter()
                    .map(|set| set.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
                    .collect();
            } else if body.starts_with("primed=") {
                let value = body.trim_start_matches("primed=").trim();
                primed = match value {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(Error::parse(
                            line_number,
                            line.find('=').unwrap_or(0) + 2,
                            format!("expected true or false, found `{other}`"),
                        ))
                    }
                };
            } else {
                return Err(Error::parse(line_number, 1, "unrecognized line"));
            }
        }
        let inner = inner.ok_or_else(|| Error::parse(1, 1, "missing inner hypergraph line"))?;
        let outer = outer.ok_or_else(|| Error::parse(2, 1, "missing `outer=...; S=...` line"))?;
        let family = family.unwrap_or_default();
        ProtectedCodeSpec::new(inner, outer, family, extra, primed)
    }
}

impl fmt::Display for ProtectedCodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.inner)?;
        write!(f, "outer={}; S=", self.n_outer)?;
        for (i, &mask) in self.index_sets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let list = mask_to_vertices(mask)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{{{list}}}")?;
        }
        if !self.extra_protected_edges.is_empty() {
            f.write_str("\nextra=")?;
            for (i, &mask) in self.extra_protected_edges.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                let list = mask_to_vertices(mask)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "{{{list}}}")?;
            }
        }
        if !self.include_primed {
            f.write_str("\nprimed=false")?;
        }
        Ok(())
    }
}

/// Verification outcome for a protected-code spec.
#[derive(Debug, Clone)]
pub struct ProtectedReport {
    /// The error set promised by the construction: outer pairs with
    /// product weight below the outer count.
    pub guaranteed: KlVerdict,
    /// All outer errors, checked only when no primed codewords are used.
    pub full_outer: Option<KlVerdict>,
}

/// The two-protected, two-outer worked example: inner state Z_1 Z_2 |++>.
pub fn two_by_two_example(include_primed: bool) -> Result<ProtectedCodeSpec> {
    let inner = Hypergraph::from_vertex_sets(2, &[&[1], &[2]])?;
    ProtectedCodeSpec::new(inner, 2, vec![0b00, 0b01], Vec::new(), include_primed)
}
