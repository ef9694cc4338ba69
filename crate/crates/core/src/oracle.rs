//! Brute-force ground truth.
//!
//! Two independent routes to `N(G; prod P_v)`: walking every orientation
//! bitmask, and expanding `prod_{uv in E} (z_u + z_v)` into its out-degree
//! monomials. Both are deliberately naive.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::constraints::ConstraintProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Limits;

/// Out-degree of every vertex under one orientation, or the exponent
/// vector of a monomial of the orientation polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<u32>);

/// Monomial exponent vector to number of orientations realising it.
pub type Expansion = HashMap<DegreeVector, BigInt>;

const BLOCK_BITS: u32 = 12;

/// Counts orientations by checking all `2^|E|` bitmasks. Bit `i` clear
/// orients edge `i` away from its first stored endpoint.
pub fn brute_force_count(g: &Graph, prof: &ConstraintProfile, limits: &Limits) -> Result<BigInt> {
    prof.check_graph(g)?;
    let m = g.edge_count();
    limits.check_edges("brute-force enumeration", m)?;
    let masks = prof.masks(g);
    let total: u64 = 1 << m;
    let block = 1u64 << BLOCK_BITS.min(m as u32);
    let blocks = total / block;
    let hits: u64 = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut out = vec![0usize; g.vertex_count()];
            let mut hits = 0u64;
            for mask in b * block..(b + 1) * block {
                out.iter_mut().for_each(|d| *d = 0);
                for (i, &(u, v)) in g.edges().iter().enumerate() {
                    if mask >> i & 1 == 0 {
                        out[u] += 1;
                    } else {
                        out[v] += 1;
                    }
                }
                if out.iter().zip(&masks).all(|(&d, ok)| ok[d]) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    Ok(BigInt::from(hits))
}

/// Expands the orientation polynomial edge by edge.
pub fn expand_orientation_polynomial(g: &Graph, limits: &Limits) -> Result<Expansion> {
    limits.check_edges("orientation polynomial expansion", g.edge_count())?;
    let mut terms: Expansion = HashMap::new();
    terms.insert(DegreeVector(vec![0; g.vertex_count()]), BigInt::one());
    for &(u, v) in g.edges() {
        let mut next: Expansion = HashMap::with_capacity(terms.len() * 2);
        for (exp, coeff) in terms {
            for w in [u, v] {
                let mut e = exp.clone();
                e.0[w] += 1;
                *next.entry(e).or_insert_with(BigInt::zero) += &coeff;
            }
        }
        terms = next;
    }
    Ok(terms)
}

/// Sums the expansion over exponent vectors lying in `prof`.
pub fn count_from_expansion(expansion: &Expansion, prof: &ConstraintProfile) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (exp, coeff) in expansion {
        if exp.0.len() != prof.len() {
            return Err(Error::argument(format!(
                "expansion has {} variables but the profile has {} vertices",
                exp.0.len(),
                prof.len()
            )));
        }
        if exp
            .0
            .iter()
            .zip(prof.sets())
            .all(|(&d, set)| set.contains(d as i64))
        {
            total += coeff;
        }
    }
    Ok(total)
}
