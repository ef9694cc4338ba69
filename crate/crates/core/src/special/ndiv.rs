//! `N`-divisible orientations through the edge-colouring sum.
//!
//! With `w = exp(2 pi i / N)` and colours `0..N` standing for `w^c`,
//!
//! `(-1)^|E| N^(|E|+|V|) * count = sum_f w^(sum_e f(e)) *
//!     prod_v sum_j prod_{e at v} (1 - w^(j - f(e)))`.
//!
//! A vertex whose incident edges use all `N` colours makes its bracket
//! vanish, so only colourings where every vertex sees at most `N - 1`
//! colours contribute, and for those only the unused `j` do. Every
//! quantity lives in `Z[z]/(z^N - 1)`; the total is reduced to an integer
//! at the end.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::exact_div;
use crate::special::cyclic::CyclicPoly;
use crate::Limits;

/// Tracks, per vertex, how many incident edges carry each colour.
#[derive(Debug, Clone)]
pub struct ColoringFilter {
    modulus: usize,
    counts: Vec<Vec<u16>>,
    distinct: Vec<usize>,
    saturated: usize,
}

impl ColoringFilter {
    /// Starts from the all-zero colouring.
    pub fn new(g: &Graph, modulus: usize) -> Self {
        let counts: Vec<Vec<u16>> = (0..g.vertex_count())
            .map(|v| {
                let mut c = vec![0u16; modulus];
                c[0] = g.degree(v) as u16;
                c
            })
            .collect();
        let distinct: Vec<usize> = counts
            .iter()
            .map(|c| c.iter().filter(|&&k| k > 0).count())
            .collect();
        let saturated = distinct.iter().filter(|&&d| d >= modulus).count();
        ColoringFilter {
            modulus,
            counts,
            distinct,
            saturated,
        }
    }

    /// Recolours one incidence at `v` from `old` to `new`.
    pub fn recolor(&mut self, v: usize, old: usize, new: usize) {
        let was_saturated = self.distinct[v] >= self.modulus;
        let c = &mut self.counts[v];
        c[old] -= 1;
        if c[old] == 0 {
            self.distinct[v] -= 1;
        }
        if c[new] == 0 {
            self.distinct[v] += 1;
        }
        c[new] += 1;
        let now_saturated = self.distinct[v] >= self.modulus;
        match (was_saturated, now_saturated) {
            (false, true) => self.saturated += 1,
            (true, false) => self.saturated -= 1,
            _ => {}
        }
    }

    /// Every vertex sees at most `N - 1` distinct colours.
    pub fn passes(&self) -> bool {
        self.saturated == 0
    }

    pub fn counts(&self, v: usize) -> &[u16] {
        &self.counts[v]
    }
}

/// `sum_{j in J} prod_c (1 - z^(j - c))^(counts[c])`, with `J` the colours
/// absent at the vertex when `only_unused`, otherwise every colour.
fn vertex_bracket(counts: &[u16], only_unused: bool) -> CyclicPoly {
    let n = counts.len();
    let mut total = CyclicPoly::zero(n);
    for j in 0..n {
        if only_unused && counts[j] > 0 {
            continue;
        }
        let mut prod = CyclicPoly::one(n);
        for (c, &k) in counts.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let mut factor = CyclicPoly::one(n);
            factor += &-&CyclicPoly::monomial(n, j as i64 - c as i64);
            for _ in 0..k {
                prod = &prod * &factor;
            }
        }
        total += &prod;
    }
    total
}

fn coloring_sum(g: &Graph, modulus: usize, limits: &Limits, filtered: bool) -> Result<BigInt> {
    if modulus < 2 {
        return Err(Error::argument(format!("modulus must be at least 2, got {modulus}")));
    }
    let m = g.edge_count();
    limits.check_colorings("N-divisible colouring sum", modulus, m)?;

    let mut colors = vec![0usize; m];
    let mut color_sum: i64 = 0;
    let mut filter = ColoringFilter::new(g, modulus);
    let mut caches: Vec<HashMap<Vec<u16>, CyclicPoly>> = vec![HashMap::new(); g.vertex_count()];
    let mut total = CyclicPoly::zero(modulus);

    'colorings: loop {
        if !filtered || filter.passes() {
            let mut term = CyclicPoly::monomial(modulus, color_sum);
            for v in 0..g.vertex_count() {
                let key = filter.counts(v);
                let bracket = caches[v]
                    .entry(key.to_vec())
                    .or_insert_with(|| vertex_bracket(key, filtered));
                if bracket.is_zero() {
                    term = CyclicPoly::zero(modulus);
                    break;
                }
                term = &term * bracket;
            }
            total += &term;
        }

        let mut e = 0;
        loop {
            if e == m {
                break 'colorings;
            }
            let old = colors[e];
            let new = (old + 1) % modulus;
            colors[e] = new;
            color_sum += new as i64 - old as i64;
            let (u, v) = g.edge(e);
            filter.recolor(u, old, new);
            filter.recolor(v, old, new);
            if new != 0 {
                break;
            }
            e += 1;
        }
    }

    let value = total.to_integer()?;
    let scale = Pow::pow(BigInt::from(modulus), m + g.vertex_count());
    let count = exact_div(&value, &scale).ok_or_else(|| {
        Error::internal(format!("colouring sum {value} is not divisible by {modulus}^(|E|+|V|)"))
    })?;
    let count = if m % 2 == 1 { -count } else { count };
    if count < BigInt::zero() {
        return Err(Error::internal(format!("negative N-divisible count {count}")));
    }
    Ok(count)
}

/// Orientations whose out-degrees are all multiples of `modulus`, summed
/// over colourings that pass the [`ColoringFilter`].
pub fn n_divisible_count(g: &Graph, modulus: usize, limits: &Limits) -> Result<BigInt> {
    coloring_sum(g, modulus, limits, true)
}

/// The same count summed over every colouring and every root.
pub fn n_divisible_count_unfiltered(g: &Graph, modulus: usize, limits: &Limits) -> Result<BigInt> {
    coloring_sum(g, modulus, limits, false)
}
