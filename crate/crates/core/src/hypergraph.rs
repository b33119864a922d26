//! Hypergraphs over 1-based vertices, stored as edge bitmasks.
//!
//! Vertex `v` is bit `v-1` of an edge mask, matching the basis-index
//! convention of [`crate::state`]. The empty edge (mask 0) is allowed; its
//! gate is the scalar -1.

use std::collections::BTreeSet;
use std::fmt;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::scalar::{Phase, Scalar};
use crate::state::SignVector;

/// Edge masks are u32, and nothing in the search domain goes past 30
/// vertices.
pub const MAX_VERTICES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n_vertices: usize,
    edges: BTreeSet<u32>,
}

impl Hypergraph {
    pub fn empty(n_vertices: usize) -> Result<Self> {
        if n_vertices == 0 || n_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: n_vertices,
            });
        }
        Ok(Hypergraph {
            n_vertices,
            edges: BTreeSet::new(),
        })
    }

    pub fn new(n_vertices: usize, edge_masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut graph = Hypergraph::empty(n_vertices)?;
        for mask in edge_masks {
            graph.check_mask(mask)?;
            graph.edges.insert(mask);
        }
        Ok(graph)
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_vertex_sets(n_vertices: usize, sets: &[&[usize]]) -> Result<Self> {
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u32;
            for &v in *set {
                if v == 0 || v > n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n_vertices,
                    });
                }
                mask |= 1 << (v - 1);
            }
            masks.push(mask);
        }
        Hypergraph::new(n_vertices, masks)
    }

    /// The complete symmetric hypergraph with the given edge cardinalities:
    /// for each listed cardinality, every possible edge of that size.
    pub fn symmetric(n_vertices: usize, cardinalities: &BTreeSet<usize>) -> Result<Self> {
        let mut graph = Hypergraph::empty(n_vertices)?;
        for &k in cardinalities {
            if k > n_vertices {
                return Err(Error::WeightOutOfRange {
                    weight: k,
                    max: n_vertices,
                });
            }
            if k == 0 {
                graph.edges.insert(0);
                continue;
            }
            // Gosper's hack over all k-subsets of the n vertices.
            let limit = 1u32 << n_vertices;
            let mut mask = (1u32 << k) - 1;
            while mask < limit {
                graph.edges.insert(mask);
                let lowest = mask & mask.wrapping_neg();
                let ripple = mask + lowest;
                mask = ripple | (((mask ^ ripple) >> 2) / lowest);
            }
        }
        Ok(graph)
    }

    fn check_mask(&self, mask: u32) -> Result<()> {
        if mask >> self.n_vertices != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 32 - mask.leading_zeros() as usize,
                n_vertices: self.n_vertices,
            });
        }
        Ok(())
    }

    fn check_vertex(&self, vertex: usize) -> Result<u32> {
        if vertex == 0 || vertex > self.n_vertices {
            return Err(Error::VertexOutOfRange {
                vertex,
                n_vertices: self.n_vertices,
            });
        }
        Ok(1 << (vertex - 1))
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, mask: u32) -> bool {
        self.edges.contains(&mask)
    }

    pub fn toggle_edge(&mut self, mask: u32) -> Result<()> {
        self.check_mask(mask)?;
        if !self.edges.remove(&mask) {
            self.edges.insert(mask);
        }
        Ok(())
    }

    /// Edge-level Pauli X on `vertex`: for every edge containing it, toggle
    /// that edge with the vertex removed. Edges reduced to the empty edge
    /// stay and carry the global -1.
    pub fn pauli_x(&self, vertex: usize) -> Result<Hypergraph> {
        let bit = self.check_vertex(vertex)?;
        let mut result = self.clone();
        for &edge in &self.edges {
            if edge & bit != 0 {
                let reduced = edge & !bit;
                if !result.edges.remove(&reduced) {
                    result.edges.insert(reduced);
                }
            }
        }
        Ok(result)
    }

    /// Edge-level Pauli Z on `vertex`: toggle the singleton edge.
    pub fn pauli_z(&self, vertex: usize) -> Result<Hypergraph> {
        let bit = self.check_vertex(vertex)?;
        let mut result = self.clone();
        result.toggle_edge(bit)?;
        Ok(result)
    }

    pub fn symmetric_difference(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.n_vertices != other.n_vertices {
            return Err(Error::SizeMismatch(self.n_vertices, other.n_vertices));
        }
        Ok(Hypergraph {
            n_vertices: self.n_vertices,
            edges: self
                .edges
                .symmetric_difference(&other.edges)
                .copied()
                .collect(),
        })
    }

    /// The sign vector of this hypergraph's state: every edge applied as a
    /// generalized controlled-Z to |+>^n.
    pub fn state(&self) -> Result<SignVector> {
        let mut state = SignVector::plus_state(self.n_vertices)?;
        for &edge in &self.edges {
            state.apply_cz(edge)?;
        }
        Ok(state)
    }

    /// Exact overlap of two hypergraph states, computed from the symmetric
    /// difference of their edge sets alone.
    pub fn inner_product(&self, other: &Hypergraph) -> Result<Scalar> {
        let delta = self.symmetric_difference(other)?;
        let state = delta.state()?;
        let n = self.n_vertices;
        let num = (1i128 << n) - 2 * state.negative_count() as i128;
        Ok(Scalar::new(num, n as u32, state.phase()))
    }

    /// Recover the unique hypergraph whose state equals `state`.
    ///
    /// Walks subsets in order of increasing cardinality; a sign mismatch at
    /// a subset's indicator string is fixed by toggling that subset as an
    /// edge, which only disturbs strictly larger subsets. A leftover -1
    /// global phase becomes the empty edge.
    pub fn from_state(state: &SignVector) -> Result<Hypergraph> {
        if !state.phase().is_real() {
            return Err(Error::ImaginaryPhase);
        }
        let n = state.n_qubits();
        let mut target = state.clone();
        if target.sign_at(0) < 0 {
            target.flip_all_signs();
            target.multiply_phase(Phase::MINUS_ONE);
        }
        let mut graph = Hypergraph::empty(n)?;
        let mut current = SignVector::plus_state(n)?;
        for_each_subset_by_cardinality(n, |mask| {
            if current.sign_at(mask as usize) != target.sign_at(mask as usize) {
                current.apply_cz(mask).expect("mask within range");
                graph.edges.insert(mask);
            }
        });
        if current.phase() != target.phase() {
            graph.edges.insert(0);
        }
        Ok(graph)
    }

    /// Remove a vertex that no edge uses, relabelling higher vertices down.
    pub fn delete_vertex(&self, vertex: usize) -> Result<Hypergraph> {
        let bit = self.check_vertex(vertex)?;
        let low_mask = bit - 1;
        let mut edges = BTreeSet::new();
        for &edge in &self.edges {
            if edge & bit != 0 {
                return Err(Error::VertexInUse(vertex));
            }
            edges.insert((edge & low_mask) | ((edge >> 1) & !low_mask));
        }
        Ok(Hypergraph {
            n_vertices: self.n_vertices - 1,
            edges,
        })
    }

    /// Edges grouped by cardinality, requiring all-or-none per cardinality.
    /// This is the defining property of a symmetric hypergraph.
    pub fn cardinality_classes(&self) -> Result<BTreeSet<usize>> {
        let mut counts = vec![0usize; self.n_vertices + 1];
        for &edge in &self.edges {
            counts[edge.count_ones() as usize] += 1;
        }
        let mut classes = BTreeSet::new();
        for (k, &present) in counts.iter().enumerate() {
            if present == 0 {
                continue;
            }
            let total = binomial(self.n_vertices, k) as usize;
            if present != total {
                return Err(Error::NotSymmetric {
                    cardinality: k,
                    present,
                    total,
                });
            }
            classes.insert(k);
        }
        Ok(classes)
    }

    /// Parse the one-line text form `n=<int>; edges={a,b},{c},{}`.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        Self::parse_at_line(text, 1)
    }

    pub(crate) fn parse_at_line(text: &str, line: usize) -> Result<Hypergraph> {
        let mut cursor = Cursor::new(text, line);
        cursor.expect_keyword("n")?;
        cursor.expect_char('=')?;
        let n_vertices = cursor.number()?;
        cursor.expect_char(';')?;
        cursor.skip_spaces();
        cursor.expect_keyword("edges")?;
        cursor.expect_char('=')?;
        let sets = cursor.vertex_set_list()?;
        cursor.expect_end()?;
        let borrowed: Vec<&[usize]> = sets.iter().map(|s| s.as_slice()).collect();
        Hypergraph::from_vertex_sets(n_vertices, &borrowed)
    }
}

impl fmt::Display for Hypergraph {
    /// Canonical text form: edges ordered by cardinality then by vertex
    /// list; vertices ascending within an edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; edges=", self.n_vertices)?;
        let mut sorted: Vec<Vec<usize>> = self.edges.iter().map(|&m| mask_to_vertices(m)).collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        for (i, edge) in sorted.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, v) in edge.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

pub(crate) fn mask_to_vertices(mask: u32) -> Vec<usize> {
    (1..=32).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// Visit every k-subset mask of {1..n} in lexicographic order of the
/// sorted vertex list.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        visit(0);
        return;
    }
    // Current combination as 0-based ascending bit positions.
    let mut combo: Vec<usize> = (0..k).collect();
    'combos: loop {
        let mask = combo.iter().fold(0u32, |m, &p| m | 1 << p);
        visit(mask);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if combo[i] < i + n - k {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                continue 'combos;
            }
        }
        break;
    }
}

/// Visit every non-empty subset mask of {1..n} ordered by cardinality,
/// lexicographic within each cardinality.
pub(crate) fn for_each_subset_by_cardinality(n: usize, mut visit: impl FnMut(u32)) {
    for k in 1..=n {
        for_each_combination(n, k, &mut visit);
    }
}

/// Simple cursor for the `n=..; edges=..` grammar with positional errors.
pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            text,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, message)
    }

    pub(crate) fn skip_spaces(&mut self) {
        while self.chars.get(self.pos) == Some(&' ') {
            self.pos += 1;
        }
    }

    pub(crate) fn expect_keyword(&mut self, keyword: &str) -> Result<()> {
        self.skip_spaces();
        if self.text[char_offset(&self.chars, self.pos)..].starts_with(keyword) {
            self.pos += keyword.chars().count();
            Ok(())
        } else {
            Err(self.error(format!("expected `{keyword}`")))
        }
    }

    pub(crate) fn expect_char(&mut self, expected: char) -> Result<()> {
        self.skip_spaces();
        match self.chars.get(self.pos) {
            Some(&c) if c == expected => {
                self.pos += 1;
                Ok(())
            }
            Some(&c) => Err(self.error(format!("expected `{expected}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{expected}`, found end of line"))),
        }
    }

    pub(crate) fn number(&mut self) -> Result<usize> {
        self.skip_spaces();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error(format!("number `{digits}` out of range")))
    }

    /// Parses `{a,b},{c},{}` (possibly nothing at all) into vertex lists.
    pub(crate) fn vertex_set_list(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut sets = Vec::new();
        self.skip_spaces();
        if self.chars.get(self.pos) != Some(&'{') {
            return Ok(sets);
        }
        loop {
            self.expect_char('{')?;
            let mut set = Vec::new();
            self.skip_spaces();
            if self.chars.get(self.pos) != Some(&'}') {
                loop {
                    set.push(self.number()?);
                    self.skip_spaces();
                    if self.chars.get(self.pos) == Some(&',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            self.expect_char('}')?;
            sets.push(set);
            self.skip_spaces();
            if self.chars.get(self.pos) == Some(&',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(sets)
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        self.skip_spaces();
        if self.pos < self.chars.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }
}

fn char_offset(chars: &[char], pos: usize) -> usize {
    chars[..pos].iter().map(|c| c.len_utf8()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked three-vertex example: triangle plus the full 3-edge.
    pub(crate) fn triangle_with_face() -> Hypergraph {
        Hypergraph::from_vertex_sets(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]).unwrap()
    }

    #[test]
    fn empty_graph_state_is_plus() {
        let state = Hypergraph::empty(2).unwrap().state().unwrap();
        assert_eq!(
            (0..4).map(|s| state.sign_at(s)).collect::<Vec<_>>(),
            vec![1; 4]
        );
        assert_eq!(state.phase(), Phase::ONE);
    }

    #[test]
    fn lone_empty_edge_is_a_global_minus() {
        let graph = Hypergraph::new(1, [0]).unwrap();
        let state = graph.state().unwrap();
        assert_eq!(state.sign_at(0), 1);
        assert_eq!(state.sign_at(1), 1);
        assert_eq!(state.phase(), Phase::MINUS_ONE);
    }

    #[test]
    fn pauli_x_on_triangle_with_face() {
        let flipped = triangle_with_face().pauli_x(1).unwrap();
        let expected =
            Hypergraph::from_vertex_sets(3, &[&[1, 2], &[1, 3], &[1, 2, 3], &[2], &[3]]).unwrap();
        assert_eq!(flipped, expected);
    }

    #[test]
    fn pauli_x_fixes_the_free_state_and_is_an_involution() {
        let empty = Hypergraph::empty(4).unwrap();
        assert_eq!(empty.pauli_x(2).unwrap(), empty);
        let graph = triangle_with_face();
        for v in 1..=3 {
            assert_eq!(graph.pauli_x(v).unwrap().pauli_x(v).unwrap(), graph);
        }
        assert!(graph.pauli_x(4).is_err());
    }

    #[test]
    fn pauli_z_toggles_singletons() {
        let empty = Hypergraph::empty(3).unwrap();
        let z1 = empty.pauli_z(1).unwrap();
        assert_eq!(z1, Hypergraph::from_vertex_sets(3, &[&[1]]).unwrap());
        assert_eq!(z1.pauli_z(1).unwrap(), empty);
    }

    #[test]
    fn symmetric_difference_of_x_images() {
        let graph = triangle_with_face();
        let delta = graph
            .symmetric_difference(&graph.pauli_x(1).unwrap())
            .unwrap();
        let expected = Hypergraph::from_vertex_sets(3, &[&[2, 3], &[2], &[3]]).unwrap();
        assert_eq!(delta, expected);
        assert_eq!(
            graph.symmetric_difference(&graph).unwrap(),
            Hypergraph::empty(3).unwrap()
        );
        assert_eq!(
            graph
                .symmetric_difference(&Hypergraph::empty(3).unwrap())
                .unwrap(),
            graph
        );
    }

    #[test]
    fn overlap_with_own_x_image() {
        // <H|X_1|H> for the triangle-with-face state comes out to -1/2.
        let graph = triangle_with_face();
        let product = graph.inner_product(&graph.pauli_x(1).unwrap()).unwrap();
        assert_eq!(product, Scalar::new(-1, 1, Phase::ONE));
        assert_eq!(graph.inner_product(&graph).unwrap(), Scalar::one());
    }

    #[test]
    fn odd_weight_state_is_orthogonal_to_plus() {
        for n in 1..=6 {
            let odd: BTreeSet<usize> = (1..=n).step_by(2).collect();
            let graph = Hypergraph::symmetric(n, &[1].into_iter().collect()).unwrap();
            let state = graph.state().unwrap();
            for s in 0..1usize << n {
                let weight = s.count_ones() as usize;
                assert_eq!(state.sign_at(s) < 0, odd.contains(&weight));
            }
            assert!(state.is_balanced());
            assert!(graph
                .inner_product(&Hypergraph::empty(n).unwrap())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn edges_from_signs_examples() {
        let all_plus = SignVector::plus_state(3).unwrap();
        assert_eq!(
            Hypergraph::from_state(&all_plus).unwrap(),
            Hypergraph::empty(3).unwrap()
        );

        let full = SignVector::from_signs(2, &[1, -1, -1, -1]).unwrap();
        assert_eq!(
            Hypergraph::from_state(&full).unwrap(),
            Hypergraph::from_vertex_sets(2, &[&[1], &[2], &[1, 2]]).unwrap()
        );

        let cz = SignVector::from_signs(2, &[1, 1, 1, -1]).unwrap();
        assert_eq!(
            Hypergraph::from_state(&cz).unwrap(),
            Hypergraph::from_vertex_sets(2, &[&[1, 2]]).unwrap()
        );
    }

    #[test]
    fn edges_from_signs_recovers_phase() {
        let mut state = Hypergraph::new(2, [0b01, 0b10]).unwrap().state().unwrap();
        state.multiply_phase(Phase::MINUS_ONE);
        let graph = Hypergraph::from_state(&state).unwrap();
        assert!(graph.contains_edge(0));
        assert_eq!(graph.state().unwrap(), state);

        let mut imag = SignVector::plus_state(1).unwrap();
        imag.multiply_phase(Phase::I);
        assert_eq!(Hypergraph::from_state(&imag), Err(Error::ImaginaryPhase));
    }

    #[test]
    fn vertex_deletion_relabels() {
        let graph = Hypergraph::from_vertex_sets(3, &[&[2, 3], &[2], &[3]]).unwrap();
        let reduced = graph.delete_vertex(1).unwrap();
        assert_eq!(
            reduced,
            Hypergraph::from_vertex_sets(2, &[&[1, 2], &[1], &[2]]).unwrap()
        );
        assert_eq!(graph.delete_vertex(2), Err(Error::VertexInUse(2)));
    }

    #[test]
    fn symmetry_detection() {
        let graph = triangle_with_face();
        let classes = graph.cardinality_classes().unwrap();
        assert_eq!(classes, [2, 3].into_iter().collect());
        let partial = Hypergraph::from_vertex_sets(3, &[&[1, 2]]).unwrap();
        assert!(matches!(
            partial.cardinality_classes(),
            Err(Error::NotSymmetric {
                cardinality: 2,
                present: 1,
                total: 3
            })
        ));
    }

    #[test]
    fn symmetric_constructor_counts() {
        let graph = Hypergraph::symmetric(5, &[2].into_iter().collect()).unwrap();
        assert_eq!(graph.n_edges(), 10);
        assert_eq!(
            graph.cardinality_classes().unwrap(),
            [2].into_iter().collect()
        );
    }

    #[test]
    fn subset_order_is_by_cardinality_then_lex() {
        let mut seen = Vec::new();
        for_each_subset_by_cardinality(3, |mask| seen.push(mask));
        assert_eq!(seen, vec![0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn text_roundtrip() {
        let graph = triangle_with_face();
        let text = graph.to_string();
        assert_eq!(text, "n=3; edges={1,2},{1,3},{2,3},{1,2,3}");
        assert_eq!(Hypergraph::parse(&text).unwrap(), graph);

        let with_empty = Hypergraph::new(2, [0, 0b11]).unwrap();
        assert_eq!(with_empty.to_string(), "n=2; edges={},{1,2}");
        assert_eq!(
            Hypergraph::parse("n=2; edges={},{1,2}").unwrap(),
            with_empty
        );

        assert_eq!(Hypergraph::empty(4).unwrap().to_string(), "n=4; edges=");
        assert_eq!(
            Hypergraph::parse("n=4; edges=").unwrap(),
            Hypergraph::empty(4).unwrap()
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Hypergraph::parse("n=2; edges={1,5}").unwrap_err();
        assert_eq!(
            err,
            Error::VertexOutOfRange {
                vertex: 5,
                n_vertices: 2
            }
        );
        match Hypergraph::parse("n=x; edges=") {
            Err(Error::Parse {
                line: 1, column, ..
            }) => assert_eq!(column, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Hypergraph::parse("n=2 edges=") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
