//! Gray-code walk over edge subsets with an incrementally maintained
//! vertex-table product.

use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact ring used to accumulate the signed subset sum.
pub(crate) trait Exact:
    Clone
    + Send
    + Sync
    + Zero
    + One
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn into_big(self) -> BigInt {
        self
    }
}

/// Which accumulator the walk used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    /// Native 128-bit integers, chosen when every partial sum provably fits.
    Wide,
    /// Arbitrary precision.
    Big,
}

/// The product of nonzero factors together with the number of zero factors.
/// A factor can be swapped for another in O(1) ring operations because the
/// outgoing factor divides the product exactly.
struct RunningProduct<A> {
    zeros: usize,
    nonzero: A,
}

impl<A: Exact> RunningProduct<A> {
    fn new<'a>(factors: impl Iterator<Item = &'a A>) -> Self
    where
        A: 'a,
    {
        let mut p = RunningProduct {
            zeros: 0,
            nonzero: A::one(),
        };
        for f in factors {
            if f.is_zero() {
                p.zeros += 1;
            } else {
                p.nonzero *= f;
            }
        }
        p
    }

    fn swap(&mut self, old: &A, new: &A) {
        if old.is_zero() {
            self.zeros -= 1;
        } else {
            self.nonzero /= old;
        }
        if new.is_zero() {
            self.zeros += 1;
        } else {
            self.nonzero *= new;
        }
    }

    fn value(&self) -> Option<&A> {
        (self.zeros == 0).then_some(&self.nonzero)
    }
}

/// Signed sum over the subsets whose high edge bits equal `high`; the low
/// `low_bits` edges are walked in reflected Gray-code order.
fn block_sum<A: Exact>(g: &Graph, tables: &[Vec<A>], high: u64, low_bits: usize) -> A {
    let m = g.edge_count();
    let mut deg = vec![0usize; g.vertex_count()];
    let mut odd = false;
    for e in low_bits..m {
        if high >> (e - low_bits) & 1 == 1 {
            let (u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
            odd = !odd;
        }
    }
    let mut product = RunningProduct::new(deg.iter().zip(tables).map(|(&k, t)| &t[k]));
    let mut sum = A::zero();
    let mut accumulate = |product: &RunningProduct<A>, odd: bool| {
        if let Some(p) = product.value() {
            if odd {
                sum -= p;
            } else {
                sum += p;
            }
        }
    };
    accumulate(&product, odd);

    let mut code: u64 = 0;
    for i in 1..(1u64 << low_bits) {
        let e = i.trailing_zeros() as usize;
        code ^= 1 << e;
        let entering = code >> e & 1 == 1;
        let (u, v) = g.edge(e);
        for w in [u, v] {
            let old = deg[w];
            deg[w] = if entering { old + 1 } else { old - 1 };
            product.swap(&tables[w][old], &tables[w][deg[w]]);
        }
        odd = !odd;
        accumulate(&product, odd);
    }
    sum
}

/// Fixed high-bit sharding: `2^b` blocks with `2^b >= workers`.
pub(crate) fn block_bits(workers: usize, m: usize) -> usize {
    let workers = workers.max(1);
    let bits = usize::BITS as usize - (workers - 1).leading_zeros() as usize;
    bits.min(m)
}

fn run<A: Exact>(g: &Graph, tables: &[Vec<A>], workers: usize) -> Result<BigInt> {
    let m = g.edge_count();
    let high_bits = block_bits(workers, m);
    let low_bits = m - high_bits;
    let blocks = 1u64 << high_bits;
    if workers <= 1 {
        let mut total = A::zero();
        for b in 0..blocks {
            total += &block_sum(g, tables, b, low_bits);
        }
        return Ok(total.into_big());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::internal(format!("cannot start worker pool: {e}")))?;
    let partials: Vec<A> = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| block_sum(g, tables, b, low_bits))
            .collect()
    });
    let mut total = A::zero();
    for p in &partials {
        total += p;
    }
    Ok(total.into_big())
}

/// `S = sum_F (-1)^|F| prod_v tables[v][d_F(v)]` over all `F` subset of `E`.
pub(crate) fn signed_subset_sum(
    g: &Graph,
    tables: &[Vec<BigInt>],
    workers: usize,
    force_big: bool,
) -> Result<(BigInt, Arithmetic)> {
    let m = g.edge_count();
    if m >= 63 {
        return Err(Error::argument("subset walks support at most 62 edges"));
    }
    // Every partial sum is bounded by 2^m * prod_v max_k |T_v[k]|.
    let bound: BigInt = tables
        .iter()
        .map(|t| t.iter().map(Signed::abs).max().unwrap_or_default())
        .product::<BigInt>()
        << m;
    let fits = bound.bits() <= 126;
    if fits && !force_big {
        let narrow: Vec<Vec<i128>> = tables
            .iter()
            .map(|t| t.iter().map(|x| x.to_i128().expect("bounded above")).collect())
            .collect();
        Ok((run(g, &narrow, workers)?, Arithmetic::Wide))
    } else {
        Ok((run(g, tables, workers)?, Arithmetic::Big))
    }
}

/// The same sum with every subset's degree vector and product recomputed
/// from scratch. Reference route for tests and benchmarks.
pub fn signed_subset_sum_naive(g: &Graph, tables: &[Vec<BigInt>]) -> BigInt {
    let m = g.edge_count();
    let mut total = BigInt::zero();
    let mut deg = vec![0usize; g.vertex_count()];
    for mask in 0u64..(1u64 << m) {
        deg.iter_mut().for_each(|d| *d = 0);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let term: BigInt = deg.iter().zip(tables).map(|(&k, t)| &t[k]).product();
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Contiguous index ranges `[start, end)` covered by each block.
pub(crate) fn block_bounds(workers: usize, m: usize) -> Vec<(u64, u64)> {
    let high = block_bits(workers, m);
    let width = 1u64 << (m - high);
    (0..1u64 << high).map(|b| (b * width, (b + 1) * width)).collect()
}
