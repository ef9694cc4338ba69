//! The subset-sum duality count and its generalisations.

mod gauge;
mod montecarlo;
mod walk;

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::constraints::ConstraintProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::vertex_table;
use crate::Limits;

pub use gauge::{coloring_term, generalized_duality_count, GaugePair};
pub use montecarlo::{mc_estimate, mc_exhaustive, McEstimate, McMode};
pub use walk::{signed_subset_sum_naive, Arithmetic};

/// How the subset space was split across workers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShardLayout {
    pub workers: usize,
    /// Half-open index ranges `[start, end)`, one per block.
    pub blocks: Vec<(u64, u64)>,
}

/// Result of an exact counting run.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub algorithm: String,
    pub count: BigInt,
    pub terms: u64,
    /// `(numerator, modulus)` with `count * modulus == numerator`.
    pub divisibility: Option<(BigInt, BigInt)>,
    pub shards: Option<ShardLayout>,
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct DualityOptions {
    pub workers: usize,
    pub limits: Limits,
    /// Use arbitrary precision even when 128-bit accumulation would fit.
    pub force_big: bool,
}

impl Default for DualityOptions {
    fn default() -> Self {
        DualityOptions {
            workers: 1,
            limits: Limits::default(),
            force_big: false,
        }
    }
}

impl DualityOptions {
    pub fn with_workers(workers: usize) -> Self {
        DualityOptions {
            workers,
            ..Self::default()
        }
    }
}

/// Vertex tables `T_v[k]` for every vertex of `g`.
pub fn vertex_tables(g: &Graph, prof: &ConstraintProfile) -> Vec<Vec<BigInt>> {
    (0..g.vertex_count())
        .map(|v| vertex_table(g.degree(v), prof.get(v)))
        .collect()
}

/// The pre-division numerator `S = sum_F (-1)^|F| prod_v T_v[d_F(v)]`
/// and the accumulator that produced it.
pub fn duality_numerator(
    g: &Graph,
    prof: &ConstraintProfile,
    opts: &DualityOptions,
) -> Result<(BigInt, Arithmetic)> {
    prof.check_graph(g)?;
    opts.limits.check_edges("duality subset sum", g.edge_count())?;
    let tables = vertex_tables(g, prof);
    walk::signed_subset_sum(g, &tables, opts.workers, opts.force_big)
}

/// Exact `N(G; prod P_v)` as `S / 2^|E|`.
pub fn duality_count(
    g: &Graph,
    prof: &ConstraintProfile,
    opts: &DualityOptions,
) -> Result<CountReport> {
    let started = Instant::now();
    let m = g.edge_count();
    let (numerator, _) = duality_numerator(g, prof, opts)?;
    let modulus = BigInt::one() << m;
    let count = crate::rational::exact_div(&numerator, &modulus).ok_or_else(|| {
        Error::internal(format!(
            "duality numerator {numerator} is not divisible by 2^{m}"
        ))
    })?;
    if count < BigInt::zero() {
        return Err(Error::internal(format!("negative duality count {count}")));
    }
    Ok(CountReport {
        algorithm: "duality".to_string(),
        count,
        terms: 1u64 << m,
        divisibility: Some((numerator, modulus)),
        shards: Some(ShardLayout {
            workers: opts.workers.max(1),
            blocks: walk::block_bounds(opts.workers, m),
        }),
        seconds: started.elapsed().as_secs_f64(),
    })
}
