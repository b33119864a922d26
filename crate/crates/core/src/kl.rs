//! The Knill-Laflamme recovery condition, checked exactly.
//!
//! A code corrects an error set iff every product of two errors has
//! vanishing off-diagonal matrix elements between codewords and a
//! diagonal element independent of the codeword. All elements here are
//! exact [`Scalar`] values, so "vanishing" and "independent" are integer
//! equalities.
//!
//! Two evaluation routes are provided. The dense route applies Pauli
//! strings to packed sign vectors and works for any code up to the
//! [`crate::state::DENSE_CAP`]. The symmetric route evaluates the same
//! matrix elements for two-word symmetric codes by counting basis states
//! per weight class, which costs O(n^2) per element and reaches 30 qubits
//! without ever expanding a state.

use crate::binom::signed_split;
use crate::error::{Error, Result};
use crate::hypergraph::for_each_combination;
use crate::pauli::PauliString;
use crate::scalar::{Phase, Scalar};
use crate::state::SignVector;
use crate::symmetric::SymmetricState;

/// An orthonormal list of ±1-signed codewords.
#[derive(Debug, Clone)]
pub struct CodeBasis {
    n_qubits: usize,
    states: Vec<SignVector>,
}

impl CodeBasis {
    /// Checks pairwise orthogonality on construction; sign vectors are
    /// normalized by construction.
    pub fn new(states: Vec<SignVector>) -> Result<Self> {
        assert!(!states.is_empty(), "a code needs at least one codeword");
        let n_qubits = states[0].n_qubits();
        for state in &states {
            if state.n_qubits() != n_qubits {
                return Err(Error::SizeMismatch(n_qubits, state.n_qubits()));
            }
        }
        for i in 0..states.len() {
            for j in i + 1..states.len() {
                if !states[i].inner(&states[j])?.is_zero() {
                    return Err(Error::NotOrthogonal(i, j));
                }
            }
        }
        Ok(CodeBasis { n_qubits, states })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[SignVector] {
        &self.states
    }
}

/// The first violating matrix element found, with both exact values.
#[derive(Debug, Clone, PartialEq)]
pub struct KlWitness {
    /// Codeword index on the bra side.
    pub bra: usize,
    /// Codeword index on the ket side.
    pub ket: usize,
    /// Left error of the violating pair (identity when checking a single
    /// operator).
    pub error_left: PauliString,
    /// Right error of the violating pair.
    pub error_right: PauliString,
    /// The offending matrix element <bra| E_left† E_right |ket>.
    pub lhs: Scalar,
    /// What it should have been: zero off the diagonal, the reference
    /// diagonal value on it.
    pub rhs: Scalar,
}

impl std::fmt::Display for KlWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "<b{}| ({})† ({}) |b{}> = {} (expected {})",
            self.bra, self.error_left, self.error_right, self.ket, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum KlVerdict {
    Pass,
    Fail(KlWitness),
}

impl KlVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, KlVerdict::Pass)
    }

    pub fn witness(&self) -> Option<&KlWitness> {
        match self {
            KlVerdict::Pass => None,
            KlVerdict::Fail(witness) => Some(witness),
        }
    }
}

/// Scan the matrix elements of one operator for a KL violation:
/// off-diagonal entries must vanish, diagonal entries must all equal the
/// first one. Returns (bra, ket, lhs, rhs) of the first mismatch.
fn scan_entries(
    dimension: usize,
    entry: impl Fn(usize, usize) -> Scalar,
) -> Option<(usize, usize, Scalar, Scalar)> {
    let reference = entry(0, 0);
    for bra in 0..dimension {
        for ket in 0..dimension {
            let value = entry(bra, ket);
            if bra == ket {
                if value != reference {
                    return Some((bra, ket, value, reference));
                }
            } else if !value.is_zero() {
                return Some((bra, ket, value, Scalar::zero()));
            }
        }
    }
    None
}

/// KL pattern for a single operator against a dense code basis.
pub fn check_operator(code: &CodeBasis, operator: &PauliString) -> Result<Option<KlWitness>> {
    if operator.n_qubits() != code.n_qubits() {
        return Err(Error::SizeMismatch(operator.n_qubits(), code.n_qubits()));
    }
    let images: Vec<SignVector> = code
        .states
        .iter()
        .map(|state| operator.apply(state))
        .collect::<Result<_>>()?;
    let entries: Vec<Vec<Scalar>> = code
        .states
        .iter()
        .map(|bra| {
            images
                .iter()
                .map(|ket| bra.inner(ket).expect("sizes match"))
                .collect()
        })
        .collect();
    Ok(
        scan_entries(code.dimension(), |bra, ket| entries[bra][ket]).map(|(bra, ket, lhs, rhs)| {
            KlWitness {
                bra,
                ket,
                error_left: PauliString::identity(code.n_qubits()),
                error_right: *operator,
                lhs,
                rhs,
            }
        }),
    )
}

/// KL condition over an explicit list of error-pair combinations.
pub fn kl_check_pairs<'a>(
    code: &CodeBasis,
    pairs: impl IntoIterator<Item = (&'a PauliString, &'a PauliString)>,
) -> Result<KlVerdict> {
    for (left, right) in pairs {
        let product = left.adjoint().compose(right)?;
        if let Some(mut witness) = check_operator(code, &product)? {
            witness.error_left = *left;
            witness.error_right = *right;
            return Ok(KlVerdict::Fail(witness));
        }
    }
    Ok(KlVerdict::Pass)
}

/// KL condition for an error set: every ordered pair E_i† E_j is checked.
pub fn kl_check(code: &CodeBasis, errors: &[PauliString]) -> Result<KlVerdict> {
    kl_check_pairs(
        code,
        errors
            .iter()
            .flat_map(|left| errors.iter().map(move |right| (left, right))),
    )
}

/// All 4^k Pauli strings supported on the given qubits, identity first,
/// in a fixed order.
pub fn paulis_on_support(n_qubits: usize, support: &[usize]) -> Result<Vec<PauliString>> {
    let mut all = Vec::with_capacity(1 << (2 * support.len()));
    for code in 0u64..1 << (2 * support.len()) {
        let mut op = PauliString::identity(n_qubits);
        for (slot, &qubit) in support.iter().enumerate() {
            let letter = code >> (2 * (support.len() - 1 - slot)) & 3;
            let single = match letter {
                0 => continue,
                1 => PauliString::x(n_qubits, qubit)?,
                2 => PauliString::y(n_qubits, qubit)?,
                _ => PauliString::z(n_qubits, qubit)?,
            };
            op = op.compose(&single)?;
        }
        all.push(op);
    }
    Ok(all)
}

/// Visit weight-w Pauli strings in lexicographic order (supports
/// ascending, then letters X < Y < Z with the lowest qubit changing
/// slowest). Stops at the first Some.
fn first_over_weight<T>(
    n_qubits: usize,
    weight: usize,
    mut probe: impl FnMut(&PauliString) -> Result<Option<T>>,
) -> Result<Option<T>> {
    let mut supports = Vec::new();
    for_each_combination(n_qubits, weight, |mask| supports.push(mask));
    for support in supports {
        let qubits: Vec<usize> = (1..=n_qubits)
            .filter(|q| support >> (q - 1) & 1 == 1)
            .collect();
        for letters in 0u64..3u64.pow(weight as u32) {
            let mut op = PauliString::identity(n_qubits);
            let mut digits = letters;
            for &qubit in qubits.iter().rev() {
                let single = match digits % 3 {
                    0 => PauliString::x(n_qubits, qubit)?,
                    1 => PauliString::y(n_qubits, qubit)?,
                    _ => PauliString::z(n_qubits, qubit)?,
                };
                digits /= 3;
                op = op.compose(&single)?;
            }
            if let Some(found) = probe(&op)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// Largest d <= d_max such that the KL condition holds for every Pauli
/// string acting on fewer than d qubits. Checking single strings of
/// weight < d is equivalent to checking all products E_i† E_j of that
/// weight.
pub fn distance(code: &CodeBasis, d_max: usize) -> Result<usize> {
    distance_with_witness(code, d_max).map(|(d, _)| d)
}

pub fn distance_with_witness(code: &CodeBasis, d_max: usize) -> Result<(usize, Option<KlWitness>)> {
    check_distance_bound(code.n_qubits(), d_max)?;
    for weight in 1..d_max {
        if let Some(witness) =
            first_over_weight(code.n_qubits(), weight, |op| check_operator(code, op))?
        {
            return Ok((weight, Some(witness)));
        }
    }
    Ok((d_max, None))
}

fn check_distance_bound(n_qubits: usize, d_max: usize) -> Result<()> {
    if d_max == 0 || d_max > n_qubits + 1 {
        return Err(Error::WeightOutOfRange {
            weight: d_max,
            max: n_qubits + 1,
        });
    }
    Ok(())
}

/// Sum over all n-bit strings t of
/// `f_bra(|t|) * f_ket(|t xor x|) * (-1)^(c . t)`.
///
/// Split the qubits into four classes by membership in x and c; the
/// summand depends only on the weight of t inside x and outside it, so
/// the 2^n sum collapses to a double sum with signed binomial counts.
fn weight_pair_sum(n: usize, f_bra: &[i8], f_ket: &[i8], x_mask: u32, c_mask: u32) -> i128 {
    let in_both = (x_mask & c_mask).count_ones() as usize;
    let in_x_only = x_mask.count_ones() as usize - in_both;
    let in_c_only = (c_mask & !x_mask).count_ones() as usize;
    let outside = n - in_both - in_x_only - in_c_only;
    let x_weight = in_both + in_x_only;

    let inside: Vec<i128> = (0..=x_weight)
        .map(|g| signed_split(in_both, in_x_only, g))
        .collect();
    let rest: Vec<i128> = (0..=in_c_only + outside)
        .map(|h| signed_split(in_c_only, outside, h))
        .collect();

    let mut total = 0i128;
    for (g, &count_in) in inside.iter().enumerate() {
        if count_in == 0 {
            continue;
        }
        for (h, &count_out) in rest.iter().enumerate() {
            if count_out == 0 {
                continue;
            }
            let bra = f_bra[g + h] as i128;
            let ket = f_ket[x_weight - g + h] as i128;
            total += count_in * count_out * bra * ket;
        }
    }
    total
}

/// Exact matrix element `<Z^bra_z H| P |Z^ket_z H>` for a symmetric state
/// H given by its per-weight signs, without expanding anything.
pub fn symmetric_element(
    n_qubits: usize,
    weight_signs: &[i8],
    bra_z: u32,
    ket_z: u32,
    operator: &PauliString,
) -> Scalar {
    debug_assert_eq!(weight_signs.len(), n_qubits + 1);
    let x = operator.x_mask();
    let c = bra_z ^ ket_z ^ operator.z_mask();
    // Moving X^x through the ket-side Z gates costs one sign per overlap.
    let flip = ((ket_z ^ operator.z_mask()) & x).count_ones() % 2 == 1;
    let sum = weight_pair_sum(n_qubits, weight_signs, weight_signs, x, c);
    Scalar::new(
        if flip { -sum } else { sum },
        n_qubits as u32,
        operator.phase(),
    )
}

/// `<+|^n Z^special_z X^special_x |spec>` (the X mask acting first),
/// evaluated by weight-class counting in time polynomial in n. Matches
/// the dense evaluation exactly.
pub fn symmetric_inner(spec: &SymmetricState, special_z: u32, special_x: u32) -> Result<Scalar> {
    let n = spec.n_qubits();
    if (special_z | special_x) >> n != 0 {
        return Err(Error::VertexOutOfRange {
            vertex: 32 - (special_z | special_x).leading_zeros() as usize,
            n_vertices: n,
        });
    }
    let plus = vec![1i8; n + 1];
    let sum = weight_pair_sum(n, &plus, &spec.weight_signs(), special_x, special_z);
    Ok(Scalar::new(sum, n as u32, Phase::ONE))
}

/// Distance of the two-word code span(|H>, Z_1..Z_l |H>) for a symmetric
/// state H, via the counting path. Scales to 30 qubits.
pub fn symmetric_code_distance(
    n_qubits: usize,
    weight_signs: &[i8],
    z_count: usize,
    d_max: usize,
) -> Result<(usize, Option<KlWitness>)> {
    check_distance_bound(n_qubits, d_max)?;
    if z_count == 0 {
        return Err(Error::DegenerateCode);
    }
    if z_count > n_qubits {
        return Err(Error::ZCountOutOfRange { z_count, n_qubits });
    }
    let word_masks = [0u32, (1u32 << z_count) - 1];
    for weight in 1..d_max {
        let violation = first_over_weight(n_qubits, weight, |op| {
            let found = scan_entries(2, |bra, ket| {
                symmetric_element(n_qubits, weight_signs, word_masks[bra], word_masks[ket], op)
            });
            Ok(found.map(|(bra, ket, lhs, rhs)| KlWitness {
                bra,
                ket,
                error_left: PauliString::identity(n_qubits),
                error_right: *op,
                lhs,
                rhs,
            }))
        })?;
        if let Some(witness) = violation {
            return Ok((weight, Some(witness)));
        }
    }
    Ok((d_max, None))
}
