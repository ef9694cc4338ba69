//! Eulerian orientations of regular graphs of even degree via the
//! subgraph degree-profile enumerator
//! `F_G(x_0..x_d) = sum_{A subset E} prod_v x_{d_A(v)}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{binomial, to_integer};
use crate::Limits;

/// The weights `s_0..s_d` at which `F_G` counts Eulerian orientations of a
/// `d`-regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularWeights {
    d: usize,
    s: Vec<BigRational>,
}

impl RegularWeights {
    /// `s_k = C(d, d/2) C(d/2, k/2) / (2^(d/2) C(d, k))` for even `k`, zero for odd `k`.
    pub fn new(d: usize) -> Result<Self> {
        if d % 2 == 1 {
            return Err(Error::argument(format!("degree {d} is odd")));
        }
        let half = d / 2;
        let scale = binomial(d, half);
        let two_half: BigInt = Pow::pow(BigInt::from(2), half);
        let s = (0..=d)
            .map(|k| {
                if k % 2 == 1 {
                    BigRational::zero()
                } else {
                    BigRational::new(&scale * binomial(half, k / 2), &two_half * binomial(d, k))
                }
            })
            .collect();
        Ok(RegularWeights { d, s })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.s
    }
}

/// Evaluates `F_G` at `x`, visiting only subsets with every subset-degree
/// even (odd entries of `x` are assumed zero).
fn even_profile_enumerator(g: &Graph, x: &[BigRational]) -> BigRational {
    let m = g.edge_count();
    // Vertices whose last incident edge is `e`; their parity is final once
    // `e` has been decided.
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut total = BigRational::zero();
    for v in 0..g.vertex_count() {
        if let Some(&e) = g.incident(v).last() {
            closes[e].push(v);
        }
    }

    struct Walk<'a> {
        g: &'a Graph,
        x: &'a [BigRational],
        closes: &'a [Vec<usize>],
        deg: Vec<usize>,
    }

    impl Walk<'_> {
        fn visit(&mut self, e: usize, total: &mut BigRational) {
            if e == self.g.edge_count() {
                let term: BigRational = self.deg.iter().map(|&k| self.x[k].clone()).product();
                *total += term;
                return;
            }
            let (u, v) = self.g.edge(e);
            for take in [false, true] {
                if take {
                    self.deg[u] += 1;
                    self.deg[v] += 1;
                }
                if self.closes[e].iter().all(|&w| self.deg[w] % 2 == 0) {
                    self.visit(e + 1, total);
                }
                if take {
                    self.deg[u] -= 1;
                    self.deg[v] -= 1;
                }
            }
        }
    }

    let mut walk = Walk {
        g,
        x,
        closes: &closes,
        deg: vec![0; g.vertex_count()],
    };
    walk.visit(0, &mut total);
    total
}

/// Eulerian orientations of a regular graph of even degree.
pub fn eulerian_regular_count(g: &Graph, limits: &Limits) -> Result<BigInt> {
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::argument("graph is not regular"))?;
    let weights = RegularWeights::new(d)?;
    limits.check_edges("Eulerian subgraph enumeration", g.edge_count())?;
    let value = even_profile_enumerator(g, weights.weights());
    to_integer(&value)
        .ok_or_else(|| Error::internal(format!("F_G at the Eulerian weights is {value}, not an integer")))
}
