//! Mixed Eulerian-even orientations: out-degree `d_v / 2` on the first
//! part of a vertex partition, even out-degree on the second.
//!
//! Only subsets `F` with `d_F(v)` even on the first part and
//! `d_F(v) in {0, d_v}` on the second part contribute to the subset sum.
//! Within a connected component of the graph induced on the second part
//! the latter forces one of two choices, all incident edges in or all
//! out, so the walk enumerates those choices and then only the edges
//! joining two first-part vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::rational::{binomial, pow2, to_integer};
use crate::Limits;

fn check_partition(g: &Graph, part: &VertexPartition) -> Result<()> {
    if part.vertex_count() != g.vertex_count() {
        return Err(Error::argument(format!(
            "partition covers {} vertices but the graph has {}",
            part.vertex_count(),
            g.vertex_count()
        )));
    }
    if let Some(&v) = part.part1().iter().find(|&&v| g.degree(v) % 2 == 1) {
        return Err(Error::argument(format!(
            "vertex {v} in the Eulerian part has odd degree {}",
            g.degree(v)
        )));
    }
    Ok(())
}

/// Components of the graph induced on the second part, in original ids.
fn second_part_components(g: &Graph, part: &VertexPartition) -> Result<Vec<Vec<usize>>> {
    let (sub, back) = g.induced_subgraph(part.part2())?;
    Ok(sub
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| back[v]).collect())
        .collect())
}

/// `prod_{part1} C(d, d/2) / 2^(d/2) * 2^(sum_{part2} d / 2 - |part2'|)`,
/// where `part2'` drops isolated vertices: their two choices coincide and
/// the walk takes it once.
fn prefactor(g: &Graph, part: &VertexPartition) -> BigRational {
    let mut acc = BigRational::one();
    for &v in part.part1() {
        let d = g.degree(v);
        acc *= BigRational::from_integer(binomial(d, d / 2)) * pow2(-(d as i64 / 2));
    }
    let second_degree: usize = part.part2().iter().map(|&v| g.degree(v)).sum();
    let non_isolated = part.part2().iter().filter(|&&v| g.degree(v) > 0).count();
    acc * pow2(second_degree as i64 / 2 - non_isolated as i64)
}

/// Every edge subset in the support of the mixed sum, as edge bitmasks.
pub fn mixed_subsets(g: &Graph, part: &VertexPartition, limits: &Limits) -> Result<Vec<u64>> {
    check_partition(g, part)?;
    limits.check_edges("mixed subset enumeration", g.edge_count())?;
    let components = second_part_components(g, part)?;
    let mut component_of = vec![usize::MAX; g.vertex_count()];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    // A component whose vertices all have degree zero has a single choice.
    let switchable: Vec<usize> = (0..components.len())
        .filter(|&c| components[c].iter().any(|&v| g.degree(v) > 0))
        .collect();

    let mut forced_by: Vec<Vec<usize>> = vec![Vec::new(); components.len()];
    let mut free = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match (component_of[u], component_of[v]) {
            (usize::MAX, usize::MAX) => free.push(e),
            (c, usize::MAX) | (usize::MAX, c) => forced_by[c].push(e),
            (c, d) => {
                debug_assert_eq!(c, d);
                forced_by[c].push(e);
            }
        }
    }

    let mut out = Vec::new();
    let mut deg = vec![0usize; g.vertex_count()];
    for choice in 0u64..(1 << switchable.len()) {
        let mut forced: u64 = 0;
        for (bit, &c) in switchable.iter().enumerate() {
            if choice >> bit & 1 == 1 {
                for &e in &forced_by[c] {
                    forced |= 1 << e;
                }
            }
        }
        for rest in 0u64..(1 << free.len()) {
            let mut mask = forced;
            for (bit, &e) in free.iter().enumerate() {
                if rest >> bit & 1 == 1 {
                    mask |= 1 << e;
                }
            }
            deg.iter_mut().for_each(|d| *d = 0);
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if mask >> e & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            if part.part1().iter().all(|&v| deg[v] % 2 == 0) {
                out.push(mask);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact number of mixed Eulerian-even orientations.
pub fn mixed_count(g: &Graph, part: &VertexPartition, limits: &Limits) -> Result<BigInt> {
    let subsets = mixed_subsets(g, part, limits)?;
    let mut sum = BigRational::zero();
    let mut deg = vec![0usize; g.vertex_count()];
    for mask in subsets {
        deg.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let mut term = BigRational::one();
        for &v in part.part1() {
            let (d, k) = (g.degree(v), deg[v]);
            term *= BigRational::new(binomial(d / 2, k / 2), binomial(d, k));
        }
        // The sign is i^(sum of d_F over the second part); that exponent is even.
        let second: usize = part.part2().iter().map(|&v| deg[v]).sum();
        debug_assert_eq!(second % 2, 0);
        if second / 2 % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let value = prefactor(g, part) * sum;
    let count = to_integer(&value)
        .ok_or_else(|| Error::internal(format!("mixed count {value} is not an integer")))?;
    if count.is_negative() {
        return Err(Error::internal(format!("mixed count {count} is negative")));
    }
    Ok(count)
}

/// The lower bound and whether the divisibility hypothesis behind it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedBound {
    pub bound: BigRational,
    /// Every component of the graph induced on the second part has a
    /// degree sum (in the whole graph) divisible by 4.
    pub hypothesis: bool,
}

pub fn mixed_lower_bound(g: &Graph, part: &VertexPartition) -> Result<MixedBound> {
    check_partition(g, part)?;
    let hypothesis = second_part_components(g, part)?
        .iter()
        .all(|c| c.iter().map(|&v| g.degree(v)).sum::<usize>() % 4 == 0);
    Ok(MixedBound {
        bound: prefactor(g, part),
        hypothesis,
    })
}
