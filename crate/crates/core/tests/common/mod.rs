#![allow(dead_code)]

use catzeta_core::category::{AdjacencyMatrix, Digraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn m(rows: &[&[i64]]) -> AdjacencyMatrix {
    AdjacencyMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// Square matrix with entries in `0..=max` and a nonzero diagonal.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, max: u64) -> AdjacencyMatrix {
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        rng.gen_range(1..=max)
                    } else {
                        rng.gen_range(0..=max)
                    }
                })
                .collect()
        })
        .collect();
    AdjacencyMatrix::from_entries(entries).unwrap()
}

/// DAG on `v` vertices: arcs only go forward in a random vertex order.
pub fn random_dag(rng: &mut ChaCha8Rng, v: usize) -> Digraph {
    let mut order: Vec<usize> = (0..v).collect();
    order.shuffle(rng);
    let mut arcs = vec![vec![0u64; v]; v];
    for a in 0..v {
        for b in (a + 1)..v {
            if rng.gen_bool(0.45) {
                arcs[order[a]][order[b]] = rng.gen_range(1..=2);
            }
        }
    }
    Digraph::new(arcs).unwrap()
}

pub const GOLDEN: &[&[&[i64]]] = &[
    &[&[1]],
    &[&[1, 1], &[0, 1]],
    &[&[1, 1], &[1, 2]],
    &[&[3, 3], &[3, 3]],
    &[&[2, 0, 0], &[0, 1, 1], &[0, 1, 1]],
    &[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]],
    &[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]],
    &[&[2, 3, 2], &[1, 2, 6], &[1, 1, 2]],
    &[&[4, 7, 8], &[1, 4, 5], &[1, 1, 3]],
];
