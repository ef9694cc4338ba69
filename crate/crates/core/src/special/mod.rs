//! Closed forms and specialised sums for particular constraint families.

mod cyclic;
mod eulerian;
mod even;
mod mixed;
mod ndiv;

pub use cyclic::{cyclotomic, CyclicPoly};
pub use eulerian::{eulerian_regular_count, RegularWeights};
pub use even::even_orientation_count;
pub use mixed::{mixed_count, mixed_lower_bound, mixed_subsets, MixedBound};
pub use ndiv::{n_divisible_count, n_divisible_count_unfiltered, ColoringFilter};
