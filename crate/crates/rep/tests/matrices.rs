use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use wt_laurent::{parse_rational, quantum_int, LaurentPoly};
use wt_rep::{
    all_indices, exact_rank, hecke_action_matrix, matrix_of_element, matrix_of_word, procedure_entry, procedure_entry_in_order, procedure_value, psi_matrix,
    psi_prime_matrix, slice_matrix, OperatorMatrix, RepError,
};
use wt_skein::{normalize, Normalizer, TangleElement};
use wt_tangle::dsl::parse_word;
use wt_tangle::random::{random_boundary, random_word, rng};
use wt_tangle::{
    enumerate_connectors, MaxTag,
    Orientation::{self, Down as D, Up as U},
    Slice, TangleType, TangleWord, Vertex,
};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn w(spec: &str, body: &str) -> TangleWord {
    parse_word(spec, body).unwrap()
}

fn e_word(top: [Orientation; 2], bottom: [Orientation; 2]) -> TangleWord {
    TangleWord::from_top(
        top.to_vec(),
        vec![Slice::Min { pos: 1 }, Slice::Max { pos: 1, tag: MaxTag::with_left(bottom[0]) }],
    )
    .unwrap()
}

fn worked_example() -> TangleWord {
    w("v^^ | ^v^", "X+(2) X+(1)")
}

#[test]
fn identity_matrices() {
    let id = matrix_of_word(&TangleWord::identity(vec![D]), 2);
    assert_eq!(id, OperatorMatrix::identity(vec![D], 2));
    assert_eq!(id.dims(), (2, 2));
    assert_eq!(id.nnz(), 2);
    let id3 = matrix_of_word(&TangleWord::identity(vec![D, U, U]), 3);
    assert_eq!(id3.nnz(), 27);
    let el = TangleElement::identity(TangleType::walled(1, 2), 2).unwrap();
    assert_eq!(matrix_of_element(&el), OperatorMatrix::identity(vec![D, U, U], 2));
}

#[test]
fn cup_cap_slices() {
    let n = 2;
    let e = matrix_of_word(&e_word([D, U], [U, D]), n);
    for i in 1..=n {
        for k in 1..=n {
            assert_eq!(e.get(&[i, i], &[k, k]), LaurentPoly::q_pow(2 * (i as i64 - k as i64)));
        }
    }
    assert_eq!(e.nnz(), 4);

    // only the upper strand runs left to right
    let e = matrix_of_word(&e_word([D, U], [D, U]), 3);
    for i in 1..=3u32 {
        for k in 1..=3u32 {
            assert_eq!(e.get(&[i, i], &[k, k]), LaurentPoly::q_pow(2 * i as i64 - 4));
        }
    }

    let err = slice_matrix(&Slice::Min { pos: 1 }, &[D, D], 2).unwrap_err();
    assert!(matches!(err, RepError::InvalidSlice(_)));
}

#[test]
fn hecke_matrix_examples() {
    let t = hecke_action_matrix(1, 2, 1).unwrap();
    assert_eq!(t.nnz(), 1);
    assert_eq!(t.get(&[1, 1], &[1, 1]), p("q^-1"));
    let t = hecke_action_matrix(1, 2, 2).unwrap();
    assert_eq!(t.get(&[1, 2], &[2, 1]), LaurentPoly::one());
    assert!(t.get(&[1, 2], &[1, 2]).is_zero());
    assert_eq!(t.get(&[2, 1], &[1, 2]), LaurentPoly::one());
    assert_eq!(t.get(&[2, 1], &[2, 1]), p("q^-1 - q"));
    assert!(hecke_action_matrix(2, 2, 2).is_err());
    assert!(hecke_action_matrix(0, 3, 2).is_err());
}

#[test]
fn positive_crossing_is_hecke_generator() {
    for m in 2..=3 {
        for n in 1..=3 {
            for k in 1..m {
                let word = TangleWord::validate(TangleType::square(vec![D; m]), vec![Slice::over(k)]).unwrap();
                assert_eq!(matrix_of_word(&word, n), hecke_action_matrix(k, m, n).unwrap(), "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn worked_example_entries() {
    let t = worked_example();
    for n in 2..=4 {
        let m = matrix_of_word(&t, n);
        assert_eq!(m.get(&[2, 1, 1], &[1, 2, 1]), p("q^-1"), "n={n}");
        assert_eq!(m.get(&[2, 1, 2], &[1, 1, 1]), p("q^3 - q"), "n={n}");
    }
    // not descending for these labels: expand first
    assert!(matches!(procedure_value(&t, &[2, 1, 1], &[1, 2, 1], 2), Err(RepError::NotDescending(_))));
    let norm = Normalizer::new(3);
    assert_eq!(procedure_entry(&norm, &t, &[2, 1, 1], &[1, 2, 1]).unwrap(), p("q^-1"));
    assert_eq!(procedure_entry(&norm, &t, &[2, 1, 2], &[1, 1, 1]).unwrap(), p("q^3 - q"));
    // the expansion by hand: T = T' + (q - q^-1) T0
    let switched = t.switch_crossing(1);
    let smoothed = t.smooth_crossing(1);
    assert_eq!(procedure_value(&switched, &[2, 1, 1], &[1, 2, 1], 3).unwrap(), p("q^-1"));
    assert!(procedure_value(&switched, &[2, 1, 2], &[1, 1, 1], 3).unwrap().is_zero());
    assert_eq!(procedure_value(&smoothed, &[2, 1, 2], &[1, 1, 1], 3).unwrap(), p("q^2"));
    let el = normalize(&t, 3);
    assert_eq!(matrix_of_element(&el).get(&[2, 1, 2], &[1, 1, 1]), p("q^3 - q"));
}

#[test]
fn procedure_examples() {
    let id = TangleWord::identity(vec![D, U]);
    assert!(procedure_value(&id, &[1, 2], &[1, 2], 2).unwrap().is_one());
    assert!(procedure_value(&id, &[1, 2], &[2, 2], 2).unwrap().is_zero());
    assert!(procedure_value(&id, &[1, 3], &[1, 2], 2).is_err());
    let curl = w("v", "N<(2) X+(1) U(2)");
    assert!(matches!(procedure_value(&curl, &[1], &[1], 2), Err(RepError::NotDescending(_))));
}

#[test]
fn loop_product_scales() {
    for n in 1..=3 {
        let prod = e_word([D, U], [U, D]).concat(&e_word([U, D], [U, D])).unwrap();
        let expected = matrix_of_word(&e_word([D, U], [U, D]), n).scale(&quantum_int(n));
        assert_eq!(matrix_of_word(&prod, n), expected);
    }
}

#[test]
fn e_connector_element_matrix() {
    for n in 1..=3u32 {
        let ty = TangleType::walled(1, 1);
        let e = enumerate_connectors(&ty).into_iter().find(|c| !c.is_totally_propagating()).unwrap();
        let m = matrix_of_element(&TangleElement::basis(e, n));
        assert_eq!(m.nnz(), (n * n) as usize);
        for i in 1..=n {
            for k in 1..=n {
                assert_eq!(m.get(&[i, i], &[k, k]), LaurentPoly::q_pow(2 * i as i64 - n as i64 - 1));
            }
        }
    }
}

#[test]
fn psi_examples() {
    for n in 1..=4u32 {
        let psi = psi_matrix(n);
        let psi_p = psi_prime_matrix(n);
        for i in 1..=n {
            for k in 1..=n {
                if k != i {
                    assert!(psi.get(&[i, k], &[k, i]).is_one());
                    assert_eq!(psi_p.get(&[i, k], &[k, i]), LaurentPoly::q_pow(n as i64 + 1 - 2 * i as i64));
                }
            }
            assert_eq!(psi.get(&[i, i], &[i, i]), p("q^-1"));
        }
        let q0 = parse_rational("5/3").unwrap();
        let full = (n * n) as usize;
        assert_eq!(exact_rank(&psi.eval_dense(&q0).unwrap()), full);
        assert_eq!(exact_rank(&psi_p.eval_dense(&q0).unwrap()), full);
        // classically both are the flip of the two factors
        let flip: BTreeMap<_, _> = all_indices(n, 2)
            .into_iter()
            .map(|i| ((i.clone(), vec![i[1], i[0]]), BigInt::from(1)))
            .collect();
        assert_eq!(psi.at_one(), flip);
        assert_eq!(psi_p.at_one(), flip);
    }
}

#[test]
fn psi_is_the_corrected_crossing() {
    let z = p("q^-1 - q");
    for n in 1..=3 {
        for left in [vec![], vec![D], vec![U]] {
            for right in [vec![], vec![U]] {
                let top: Vec<_> = [left.as_slice(), &[U, D], right.as_slice()].concat();
                let k = left.len() + 1;
                let s = TangleWord::from_top(top.clone(), vec![Slice::over(k)]).unwrap();
                let e = TangleWord::from_top(
                    top.clone(),
                    vec![Slice::Min { pos: k }, Slice::Max { pos: k, tag: MaxTag::RightToLeft }],
                )
                .unwrap();
                let hat = matrix_of_word(&s, n).add(&matrix_of_word(&e, n).scale(&z)).unwrap();
                assert_eq!(hat, psi_matrix(n).embedded(&left, &right), "n={n} top={top:?}");
            }
        }
    }
}

#[test]
fn matrix_json_shape() {
    let m = hecke_action_matrix(1, 2, 2).unwrap();
    let v = serde_json::to_value(&m).unwrap();
    assert_eq!(v["n"], 2);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), m.nnz());
    assert_eq!(entries[0], serde_json::json!({"row": [1, 1], "col": [1, 1], "coeff": {"-1": "1"}}));
}

#[test]
fn exact_rank_examples() {
    let r = |s: &str| parse_rational(s).unwrap();
    assert_eq!(exact_rank(&[]), 0);
    assert_eq!(exact_rank(&[vec![r("0"), r("0")]]), 0);
    assert_eq!(exact_rank(&[vec![r("1/2"), r("1")], vec![r("1"), r("2")]]), 1);
    assert_eq!(exact_rank(&[vec![r("1/2"), r("1")], vec![r("1"), r("3")], vec![r("0"), r("7/5")]]), 2);
}

fn arb_word(max_m: usize, max_cross: usize) -> impl Strategy<Value = TangleWord> {
    (any::<u64>(), 1..=max_m, 1..10usize).prop_map(move |(seed, m, steps)| {
        let mut r = rng(seed);
        let top = random_boundary(&mut r, m);
        random_word(&mut r, &top, max_cross, steps)
    })
}

/// At `q = 1`: permutation/contraction pattern of the connector, `n` per loop.
fn classical(word: &TangleWord, n: u32) -> BTreeMap<(Vec<u32>, Vec<u32>), BigInt> {
    let (c, loops) = word.connector();
    let weight = BigInt::from(n).pow(loops as u32);
    let m = word.m();
    let edges = c.edges();
    all_indices(n, edges.len())
        .into_iter()
        .map(|s| {
            let (mut i, mut j) = (vec![0; m], vec![0; m]);
            for (a, (x, y)) in edges.iter().enumerate() {
                for v in [x, y] {
                    match *v {
                        Vertex::Top(k) => i[k - 1] = s[a],
                        Vertex::Bottom(k) => j[k - 1] = s[a],
                    }
                }
            }
            ((i, j), weight.clone())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn functoriality(a in arb_word(3, 3), seed in any::<u64>(), n in 1..=3u32) {
        let mut r = rng(seed);
        let b = random_word(&mut r, a.bottom(), 2, 6);
        let whole = matrix_of_word(&a.concat(&b).unwrap(), n);
        prop_assert_eq!(whole, matrix_of_word(&a, n).then(&matrix_of_word(&b, n)).unwrap());
    }

    #[test]
    fn element_matrix_matches_word_matrix(word in arb_word(3, 5), n in 1..=3u32) {
        prop_assert_eq!(matrix_of_element(&normalize(&word, n)), matrix_of_word(&word, n));
    }

    #[test]
    fn procedure_agrees_where_defined(word in arb_word(3, 3), n in 2..=3u32, seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = word.m();
        let mat = matrix_of_word(&word, n);
        let norm = Normalizer::new(n);
        let idx = all_indices(n, m);
        use rand::seq::SliceRandom;
        for _ in 0..8 {
            let i = idx.choose(&mut r).unwrap();
            let j = idx.choose(&mut r).unwrap();
            if let Ok(v) = procedure_value(&word, i, j, n) {
                prop_assert_eq!(v, mat.get(i, j));
            }
            prop_assert_eq!(procedure_entry(&norm, &word, i, j).unwrap(), mat.get(i, j));
        }
    }

    #[test]
    fn procedure_is_independent_of_refinement(word in arb_word(4, 4), n in 1..=3u32, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let idx = all_indices(n, word.m());
        let i = idx.choose(&mut r).unwrap().clone();
        let j = idx.choose(&mut r).unwrap().clone();
        let starts = word.ty().start_vertices();
        let labels: Vec<u32> = starts.iter().map(|v| match *v {
            Vertex::Top(k) => i[k - 1],
            Vertex::Bottom(k) => j[k - 1],
        }).collect();
        // a random tie-break
        let keys: Vec<u32> = (0..labels.len()).map(|_| rand::Rng::gen(&mut r)).collect();
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&a| (labels[a], keys[a]));
        let norm = Normalizer::new(n);
        prop_assert_eq!(
            procedure_entry_in_order(&norm, &word, &i, &j, &order).unwrap(),
            procedure_entry(&norm, &word, &i, &j).unwrap()
        );
        order.reverse();
        if labels.iter().any(|&l| l != labels[0]) {
            prop_assert!(procedure_entry_in_order(&norm, &word, &i, &j, &order).is_err());
        }
    }

    #[test]
    fn classical_pattern(word in arb_word(3, 4), n in 1..=3u32) {
        prop_assert_eq!(matrix_of_word(&word, n).at_one(), classical(&word, n));
    }
}
