//! Exact counting of graph orientations whose out-degrees satisfy
//! per-vertex admissible sets.
//!
//! The central engine evaluates a signed sum over edge subsets: each
//! subset `F` contributes `(-1)^|F| * prod_v T_v[d_F(v)]`, where the
//! vertex table `T_v[k]` is the admissible-coefficient sum of
//! `(1 - z)^k (1 + z)^(d_v - k)`. The sum is divisible by `2^|E|` and the
//! quotient is the orientation count. Around it sit two brute-force
//! oracles, a rational gauge generalisation, an unbiased sign-vector
//! Monte Carlo estimator, and closed forms for even, `N`-divisible,
//! mixed Eulerian-even and regular Eulerian orientations.

pub mod admissible;
pub mod constraints;
pub mod duality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod special;

pub use admissible::AdmissibleSet;
pub use constraints::{ConstraintProfile, ConstraintSpec};
pub use duality::{
    duality_count, generalized_duality_count, mc_estimate, CountReport, GaugePair, McEstimate,
    McMode, ShardLayout,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
pub use poly::IntPoly;

/// Size guards for the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum edge count for any `2^|E|` enumeration.
    pub enumeration_cap: u32,
    /// Maximum number of colourings `N^|E|` for the colouring sums.
    pub coloring_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 24,
            coloring_cap: 10_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_edges(&self, what: &'static str, edges: usize) -> Result<()> {
        if edges > self.enumeration_cap as usize {
            return Err(Error::CapExceeded {
                what,
                requested: format!("{edges} edges"),
                cap: format!("{} edges", self.enumeration_cap),
            });
        }
        Ok(())
    }

    /// Refuses unless `base^edges <= coloring_cap`.
    pub(crate) fn check_colorings(&self, what: &'static str, base: usize, edges: usize) -> Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..edges {
            total = match total.checked_mul(base as u64) {
                Some(t) if t <= self.coloring_cap => t,
                _ => {
                    return Err(Error::CapExceeded {
                        what,
                        requested: format!("{base}^{edges} colourings"),
                        cap: format!("{} colourings", self.coloring_cap),
                    })
                }
            };
        }
        if total > self.coloring_cap {
            return Err(Error::CapExceeded {
                what,
                requested: format!("{base}^{edges} colourings"),
                cap: format!("{} colourings", self.coloring_cap),
            });
        }
        Ok(total)
    }
}
