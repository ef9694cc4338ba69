#![allow(dead_code)]

use num_rational::BigRational;
use orient_count::generators::random_multigraph;
use orient_count::{AdmissibleSet, ConstraintProfile, GaugePair, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Loopless multigraphs with `2..=max_n` vertices and `0..=max_m` edges.
pub fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 1..n), 0..=max_m).prop_map(move |pairs| {
            let edges = pairs.into_iter().map(|(u, off)| (u, (u + off) % n)).collect();
            Graph::new(n, edges).expect("no loops by construction")
        })
    })
}

/// A random finite set inside `[0, d]`, possibly empty.
pub fn random_finite<R: Rng>(rng: &mut R, d: usize) -> AdmissibleSet {
    AdmissibleSet::finite((0..=d as i64).filter(|_| rng.gen_bool(0.5)))
}

pub fn random_finite_profile<R: Rng>(rng: &mut R, g: &Graph) -> ConstraintProfile {
    ConstraintProfile::new((0..g.vertex_count()).map(|v| random_finite(rng, g.degree(v))).collect())
}

/// A mix of every set form, chosen per vertex.
pub fn random_mixed_profile<R: Rng>(rng: &mut R, g: &Graph) -> ConstraintProfile {
    ConstraintProfile::new(
        (0..g.vertex_count())
            .map(|v| {
                let d = g.degree(v);
                match rng.gen_range(0..5) {
                    0 => AdmissibleSet::all(),
                    1 => {
                        let n = rng.gen_range(1..=4u64);
                        AdmissibleSet::residue(rng.gen_range(0..n), n).unwrap()
                    }
                    2 => AdmissibleSet::singleton(rng.gen_range(0..=d as i64)),
                    _ => random_finite(rng, d),
                }
            })
            .collect(),
    )
}

/// The profiles every sweep runs: all, even, multiples of 3, half where
/// every degree is even, and two random finite profiles.
pub fn sweep_profiles<R: Rng>(rng: &mut R, g: &Graph) -> Vec<(String, ConstraintProfile)> {
    let n = g.vertex_count();
    let mut out = vec![
        ("all".to_string(), ConstraintProfile::uniform(n, AdmissibleSet::all())),
        ("0 mod 2".to_string(), ConstraintProfile::divisible(n, 2).unwrap()),
        ("0 mod 3".to_string(), ConstraintProfile::divisible(n, 3).unwrap()),
    ];
    if g.degrees().iter().all(|d| d % 2 == 0) {
        out.push(("half".to_string(), ConstraintProfile::eulerian(g)));
    }
    for i in 0..2 {
        out.push((format!("finite #{i}"), random_finite_profile(rng, g)));
    }
    out
}

pub fn seeded_multigraphs(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_n);
            let m = r.gen_range(1..=max_m);
            random_multigraph(&mut r, n, m)
        })
        .collect()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The unique three-point gauge with the given distinct `beta`.
pub fn three_point_gauge(beta: [BigRational; 3]) -> GaugePair {
    let alpha = (0..3)
        .map(|j| {
            let (k, l) = ((j + 1) % 3, (j + 2) % 3);
            -(&beta[k] + &beta[l]) / ((&beta[j] - &beta[k]) * (&beta[j] - &beta[l]))
        })
        .collect();
    GaugePair::new(alpha, beta.to_vec()).expect("valid by construction")
}
