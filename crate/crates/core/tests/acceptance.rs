//! Acceptance gate: one test per verification criterion, each printing a
//! single pass/fail line. Everything is exact integer arithmetic with
//! zero tolerance.

use std::collections::BTreeSet;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use hypercode::hypergraph::Hypergraph;
use hypercode::kl::{distance, kl_check, paulis_on_support, symmetric_inner};
use hypercode::pauli::PauliString;
use hypercode::protected::{two_by_two_example, validate_family, vanishing_sets};
use hypercode::scalar::Scalar;
use hypercode::search::{
    crosscheck, enumerate_distance2, graph_no_distance3, verify_distance3_candidates,
    GraphCodeWitness,
};
use hypercode::state::SignVector;
use hypercode::symmetric::SymmetricState;

fn report(number: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("ACCEPTANCE {number} ({name}): PASS"),
        Err(message) => {
            println!("ACCEPTANCE {number} ({name}): FAIL - {message}");
            panic!("acceptance criterion {number} ({name}) failed: {message}");
        }
    }
}

macro_rules! expect {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

#[test]
fn acceptance_1_classification_soundness() {
    report(1, "binomial classification matches dense KL", || {
        for n_code in 3..=12 {
            if let Some(disagreement) =
                crosscheck::distance2_agreement(n_code).map_err(|e| e.to_string())?
            {
                return Err(format!(
                    "{} classifies {} but dense distance is {}",
                    disagreement.tuple, disagreement.binomial, disagreement.dense_distance
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_2_smallest_hypergraph_code() {
    report(2, "first non-graph distance-2 code on 8 qubits", || {
        for n_code in 3..8 {
            let found = enumerate_distance2(n_code, true).map_err(|e| e.to_string())?;
            expect!(
                found.is_empty(),
                "unexpected non-graph code below 8 qubits: {}",
                found[0]
            );
        }
        let at_eight = enumerate_distance2(8, true).map_err(|e| e.to_string())?;
        expect!(!at_eight.is_empty(), "no non-graph code found on 8 qubits");
        Ok(())
    });
}

#[test]
fn acceptance_3_no_distance3_below_30() {
    report(
        3,
        "distance-3 filter: none below 30, four refuted at 30",
        || {
            let desk = verify_distance3_candidates(20).map_err(|e| e.to_string())?;
            expect!(
                desk.is_empty(),
                "unexpected candidate at desk scale: {}",
                desk[0].tuple
            );
            let below = verify_distance3_candidates(29).map_err(|e| e.to_string())?;
            expect!(
                below.is_empty(),
                "unexpected candidate below 30: {}",
                below[0].tuple
            );

            let full = verify_distance3_candidates(30).map_err(|e| e.to_string())?;
            expect!(
                full.len() == 4,
                "expected 4 candidates at 30 qubits, found {}",
                full.len()
            );
            for candidate in &full {
                expect!(
                    candidate.tuple.n_code_qubits() == 30,
                    "candidate off 30 qubits: {}",
                    candidate.tuple
                );
                expect!(
                    !candidate.confirmed,
                    "candidate unexpectedly reached distance 3: {}",
                    candidate.tuple
                );
                expect!(
                    candidate.witness.is_some(),
                    "refuted candidate without witness: {}",
                    candidate.tuple
                );
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_4_graph_codes_have_no_distance_3() {
    report(4, "complete-graph codes stop at distance 2", || {
        for n in 2..=12 {
            let graph =
                Hypergraph::symmetric(n, &BTreeSet::from([2])).map_err(|e| e.to_string())?;
            let base = graph.state().map_err(|e| e.to_string())?;
            for z_count in 0..=n {
                match graph_no_distance3(n, z_count).map_err(|e| e.to_string())? {
                    GraphCodeWitness::Degenerate => {
                        expect!(z_count == 0, "degenerate witness at n={n} l={z_count}");
                        continue;
                    }
                    GraphCodeWitness::OffDiagonal { overlap, .. } => {
                        expect!(z_count == n, "off-diagonal witness at n={n} l={z_count}");
                        expect!(
                            overlap.numerator().abs() == 1 << n,
                            "weight-1 operator does not map between codewords at n={n}"
                        );
                    }
                    GraphCodeWitness::Diagonal {
                        first_word,
                        second_word,
                        ..
                    } => {
                        expect!(
                            first_word == Scalar::integer(-1),
                            "first diagonal at n={n} l={z_count}: {first_word}"
                        );
                        expect!(
                            second_word == Scalar::integer(1),
                            "second diagonal at n={n} l={z_count}: {second_word}"
                        );
                    }
                }
                let mut second = base.clone();
                second
                    .apply_z_mask((1u32 << z_count) - 1)
                    .map_err(|e| e.to_string())?;
                let code = hypercode::kl::CodeBasis::new(vec![base.clone(), second])
                    .map_err(|e| e.to_string())?;
                let d = distance(&code, 3).map_err(|e| e.to_string())?;
                expect!(d <= 2, "graph code n={n} l={z_count} reached distance {d}");
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_5_protected_two_word_code() {
    report(
        5,
        "two-word protected code corrects all outer errors",
        || {
            let spec = two_by_two_example(false).map_err(|e| e.to_string())?;
            let code = spec.codewords().map_err(|e| e.to_string())?;
            expect!(code.dimension() == 2, "expected two codewords");
            let outer_paulis = paulis_on_support(4, &[3, 4]).map_err(|e| e.to_string())?;
            expect!(
                outer_paulis.len() == 16,
                "expected 16 outer Paulis (256 pairs)"
            );
            let verdict = kl_check(&code, &outer_paulis).map_err(|e| e.to_string())?;
            expect!(
                verdict.is_pass(),
                "outer pair failed: {}",
                verdict.witness().unwrap()
            );
            Ok(())
        },
    );
}

#[test]
fn acceptance_6_protected_four_word_code() {
    report(
        6,
        "four-word protected code corrects single outer errors only",
        || {
            let spec = two_by_two_example(true).map_err(|e| e.to_string())?;
            let code = spec.codewords().map_err(|e| e.to_string())?;
            expect!(code.dimension() == 4, "expected four codewords");

            // Single-qubit outer errors under the guaranteed pairing: error
            // pairs whose product weight stays below the outer count.
            let single: Vec<PauliString> = paulis_on_support(4, &[3, 4])
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|op| op.weight() <= 1)
                .collect();
            let mut bounded = Vec::new();
            for left in &single {
                for right in &single {
                    let product = left.adjoint().compose(right).map_err(|e| e.to_string())?;
                    if product.weight() < 2 {
                        bounded.push((left, right));
                    }
                }
            }
            let verdict =
                hypercode::kl::kl_check_pairs(&code, bounded).map_err(|e| e.to_string())?;
            expect!(
                verdict.is_pass(),
                "guaranteed single-error pairing failed: {}",
                verdict.witness().unwrap()
            );
            let report = spec.verify().map_err(|e| e.to_string())?;
            expect!(report.guaranteed.is_pass(), "construction guarantee failed");
            expect!(
                report.full_outer.is_none(),
                "primed code claims full outer protection"
            );

            // Unfiltered pairing of the same single-qubit errors already
            // breaks on an outer pair acting like Z on both outer qubits.
            let unfiltered = kl_check(&code, &single).map_err(|e| e.to_string())?;
            match unfiltered.witness() {
                None => return Err("unfiltered single-error pairs unexpectedly pass".into()),
                Some(witness) => {
                    let product = witness
                        .error_left
                        .adjoint()
                        .compose(&witness.error_right)
                        .map_err(|e| e.to_string())?;
                    expect!(
                        (product.x_mask() | product.z_mask()) == 0b1100
                            && (product.z_mask() & 0b1100) == 0b1100,
                        "expected an outer double-Z structure, got {witness}"
                    );
                }
            }

            let weight_two: Vec<PauliString> = paulis_on_support(4, &[3, 4])
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            let verdict = kl_check(&code, &weight_two).map_err(|e| e.to_string())?;
            expect!(
                !verdict.is_pass(),
                "weight-2 outer errors unexpectedly pass"
            );

            // The failure structure is the outer Z pair mapping codewords to
            // codewords.
            let outer_zz = PauliString::from_masks(4, 0, 0b1100, 0).map_err(|e| e.to_string())?;
            let targeted = kl_check(&code, &[PauliString::identity(4), outer_zz])
                .map_err(|e| e.to_string())?;
            match targeted.witness() {
                Some(witness) => {
                    let product = witness
                        .error_left
                        .adjoint()
                        .compose(&witness.error_right)
                        .map_err(|e| e.to_string())?;
                    expect!(
                        product.same_operator_up_to_phase(&outer_zz),
                        "violation not driven by the outer Z pair: {witness}"
                    );
                    expect!(
                        witness.lhs.numerator().abs() == 1 << 4,
                        "outer Z pair should map codeword to codeword, got {}",
                        witness.lhs
                    );
                }
                None => return Err("outer Z pair unexpectedly passes".into()),
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_7_vanishing_set_machinery() {
    report(
        7,
        "vanishing sets and family validation on the worked example",
        || {
            let inner =
                Hypergraph::from_vertex_sets(2, &[&[1], &[2]]).map_err(|e| e.to_string())?;
            let sets = vanishing_sets(&inner).map_err(|e| e.to_string())?;
            expect!(
                sets == vec![0b00, 0b01, 0b10],
                "vanishing sets came out as {sets:?}"
            );
            expect!(
                validate_family(&[0b00, 0b01], &sets).is_ok(),
                "the valid family was rejected"
            );
            match validate_family(&[0b00, 0b01, 0b10], &sets) {
                Ok(()) => Err("the invalid family was accepted".into()),
                Err(violation) => {
                    expect!(
                        violation.delta == 0b11,
                        "expected delta {{1,2}}, got {:#b}",
                        violation.delta
                    );
                    Ok(())
                }
            }
        },
    );
}

#[test]
fn acceptance_8_property_suites() {
    report(8, "property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(80);

        // Sign-vector round trip on 1000 random hypergraphs up to 10
        // qubits.
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let full = (1u32 << n) - 1;
            let masks: Vec<u32> = (0..rng.gen_range(0..=2 * n))
                .map(|_| rng.gen::<u32>() & full)
                .collect();
            let graph = Hypergraph::new(n, masks).map_err(|e| e.to_string())?;
            let state = graph.state().map_err(|e| e.to_string())?;
            let back = Hypergraph::from_state(&state).map_err(|e| e.to_string())?;
            expect!(back == graph, "roundtrip failed for {graph}");
        }

        // Scalar products from edge differences equal dense products.
        for _ in 0..500 {
            let n = rng.gen_range(1..=8);
            let full = (1u32 << n) - 1;
            let random_graph = |rng: &mut ChaCha8Rng| {
                let masks: Vec<u32> = (0..rng.gen_range(0..=10))
                    .map(|_| rng.gen::<u32>() & full)
                    .collect();
                Hypergraph::new(n, masks).unwrap()
            };
            let a = random_graph(&mut rng);
            let b = random_graph(&mut rng);
            let via_edges = a.inner_product(&b).map_err(|e| e.to_string())?;
            let dense = a
                .state()
                .map_err(|e| e.to_string())?
                .inner(&b.state().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            expect!(via_edges == dense, "scalar product mismatch for {a} vs {b}");
        }

        // Edge-level X action equals the dense index permutation.
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let full = (1u32 << n) - 1;
            let masks: Vec<u32> = (0..rng.gen_range(0..=2 * n))
                .map(|_| rng.gen::<u32>() & full)
                .collect();
            let graph = Hypergraph::new(n, masks).map_err(|e| e.to_string())?;
            let vertex = rng.gen_range(1..=n);
            let via_edges = graph
                .pauli_x(vertex)
                .map_err(|e| e.to_string())?
                .state()
                .map_err(|e| e.to_string())?;
            let mut dense = graph.state().map_err(|e| e.to_string())?;
            dense.apply_pauli_x(vertex).map_err(|e| e.to_string())?;
            expect!(via_edges.same_state(&dense), "X action mismatch on {graph}");
        }

        // Counting-based symmetric products equal dense products, 10^4
        // cases up to 12 qubits.
        for _ in 0..10_000 {
            let n = rng.gen_range(1..=12);
            let full = (1u32 << n) - 1;
            let weights: BTreeSet<usize> = (0..=n).filter(|_| rng.gen_bool(0.5)).collect();
            let spec = SymmetricState::new(n, weights).map_err(|e| e.to_string())?;
            let z_mask = rng.gen::<u32>() & full;
            let x_mask = rng.gen::<u32>() & full;
            let fast = symmetric_inner(&spec, z_mask, x_mask).map_err(|e| e.to_string())?;
            let mut dense = spec.expand().map_err(|e| e.to_string())?;
            dense.apply_x_mask(x_mask).map_err(|e| e.to_string())?;
            dense.apply_z_mask(z_mask).map_err(|e| e.to_string())?;
            let slow = SignVector::plus_state(n)
                .map_err(|e| e.to_string())?
                .inner(&dense)
                .map_err(|e| e.to_string())?;
            expect!(fast == slow, "symmetric product mismatch at n={n}");
        }

        // The balancedness route and the binomial route agree everywhere
        // up to 14 code qubits.
        for n_code in 3..=14 {
            if let Some(tuple) =
                crosscheck::balanced_agreement(n_code).map_err(|e| e.to_string())?
            {
                return Err(format!("balanced and binomial routes disagree at {tuple}"));
            }
        }

        // Search output is identical for any worker count.
        let run = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| enumerate_distance2(16, false).unwrap())
        };
        let single = run(1);
        for threads in [2, 5, 8] {
            expect!(
                run(threads) == single,
                "search differs with {threads} workers"
            );
        }
        Ok(())
    });
}
