use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;

/// Even orientations: per connected component, `2^(|E|-|V|+1)` when the
/// component has an even number of edges and `0` otherwise.
pub fn even_orientation_count(g: &Graph) -> BigInt {
    let mut component_of = vec![0usize; g.vertex_count()];
    let components = g.connected_components();
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    let mut edges = vec![0usize; components.len()];
    for &(u, _) in g.edges() {
        edges[component_of[u]] += 1;
    }
    let mut total = BigInt::one();
    for (members, &m) in components.iter().zip(&edges) {
        if m % 2 == 1 {
            return BigInt::zero();
        }
        // Connected, so m + 1 >= |V|.
        total <<= m + 1 - members.len();
    }
    total
}
