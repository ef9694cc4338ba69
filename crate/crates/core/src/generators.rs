//! Small graph families and seeded random multigraphs for tests and demos.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 2, "a cycle needs at least two vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, edges).expect("valid complete graph")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|u| (0..b).map(move |v| (u, a + v)))
        .collect();
    Graph::new(a + b, edges).expect("valid complete bipartite graph")
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::new(shift + h.vertex_count(), edges).expect("valid union")
}

/// Every connected simple graph on vertices `0..n` (labelled, so
/// isomorphic copies appear separately).
pub fn connected_simple_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, edges).expect("valid subgraph")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// `m` edges with endpoints drawn uniformly among distinct pairs of `0..n`;
/// parallel edges are allowed.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    assert!(n >= 2 || m == 0);
    let edges = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Graph::new(n, edges).expect("loopless by construction")
}

/// A `d`-regular loopless multigraph on `n` vertices from the pairing
/// model, retrying until no self-loop appears.
pub fn random_regular_multigraph<R: Rng>(rng: &mut R, n: usize, d: usize) -> Graph {
    assert!(n * d % 2 == 0, "n * d must be even");
    assert!(n >= 2 || d == 0);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        stubs.shuffle(rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        if edges.iter().all(|&(u, v)| u != v) {
            return Graph::new(n, edges).expect("loopless");
        }
    }
}
