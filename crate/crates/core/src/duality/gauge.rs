//! Duality with a general pair of rational weight sequences.
//!
//! For `alpha`, `beta` of length `N` with `sum alpha = sum alpha*beta^2 = 0`
//! and `sum alpha*beta = 1`,
//!
//! `N(G; prod P_v) = sum_{f: E -> [N]} prod_e alpha(f(e)) *
//!     prod_v C(prod_{e at v} (1 + beta(f(e)) z); P_v)`.
//!
//! The sum is carried out over the integers after clearing the
//! denominators of `alpha` and `beta`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::constraints::ConstraintProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::rational::{exact_div, parse_rational};
use crate::Limits;

/// Weight sequences satisfying the three moment conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugePair {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl GaugePair {
    pub fn new(alpha: Vec<BigRational>, beta: Vec<BigRational>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::argument(format!(
                "gauge sequences differ in length: {} vs {}",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.len() < 2 {
            return Err(Error::argument("gauge sequences need at least two entries"));
        }
        let moment = |power: u32| -> BigRational {
            alpha
                .iter()
                .zip(&beta)
                .map(|(a, b)| a * Pow::pow(b, power))
                .sum()
        };
        let (m0, m1, m2) = (moment(0), moment(1), moment(2));
        if !m0.is_zero() {
            return Err(Error::argument(format!("sum of alpha is {m0}, expected 0")));
        }
        if !m1.is_one() {
            return Err(Error::argument(format!("sum of alpha*beta is {m1}, expected 1")));
        }
        if !m2.is_zero() {
            return Err(Error::argument(format!("sum of alpha*beta^2 is {m2}, expected 0")));
        }
        Ok(GaugePair { alpha, beta })
    }

    /// `alpha = (1/2, -1/2)`, `beta = (1, -1)`: uniform random signs.
    pub fn bernoulli() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let one = BigRational::one();
        GaugePair::new(vec![half.clone(), -half], vec![one.clone(), -one])
            .expect("moment conditions hold")
    }

    /// Two whitespace-separated lines of rationals: alpha, then beta.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let mut row = |name: &str| -> Result<Vec<BigRational>> {
            let line = rows
                .next()
                .ok_or_else(|| Error::parse(1, format!("gauge file is missing the {name} line")))?;
            line.split_whitespace().map(parse_rational).collect()
        };
        let alpha = row("alpha")?;
        let beta = row("beta")?;
        if rows.next().is_some() {
            return Err(Error::parse(3, "gauge file has more than two lines"));
        }
        GaugePair::new(alpha, beta)
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }
}

impl fmt::Display for GaugePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |xs: &[BigRational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "alpha=({}) beta=({})", show(&self.alpha), show(&self.beta))
    }
}

fn common_denominator(xs: &[BigRational]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer form of the pair: `alpha = a / da`, `beta = b / db`.
struct Scaled {
    a: Vec<BigInt>,
    da: BigInt,
    b: Vec<BigInt>,
    db: BigInt,
}

impl Scaled {
    fn new(gauge: &GaugePair) -> Self {
        let da = common_denominator(&gauge.alpha);
        let db = common_denominator(&gauge.beta);
        let scale = |xs: &[BigRational], d: &BigInt| {
            xs.iter().map(|x| (x * d).to_integer()).collect::<Vec<_>>()
        };
        Scaled {
            a: scale(&gauge.alpha, &da),
            b: scale(&gauge.beta, &db),
            da,
            db,
        }
    }

    /// `db^d * C(prod_j (1 + beta_j z)^{c_j}; P)` for colour multiplicities `c`.
    fn vertex_value(&self, counts: &[u16], set: &crate::AdmissibleSet) -> BigInt {
        let mut poly = IntPoly::one();
        for (j, &c) in counts.iter().enumerate() {
            let factor = IntPoly::new(vec![self.db.clone(), self.b[j].clone()]);
            for _ in 0..c {
                poly = &poly * &factor;
            }
        }
        poly.coeff_sum(set)
    }
}

/// One colouring's contribution as an exact rational. Slow; meant as a
/// reference for the scaled integer sum.
pub fn coloring_term(
    g: &Graph,
    prof: &ConstraintProfile,
    gauge: &GaugePair,
    colors: &[usize],
) -> BigRational {
    let alpha: BigRational = colors.iter().map(|&c| gauge.alpha[c].clone()).product();
    let mut total = alpha;
    for v in 0..g.vertex_count() {
        let mut coeffs = vec![BigRational::one()];
        for &e in g.incident(v) {
            let beta = &gauge.beta[colors[e]];
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (l, c) in coeffs.iter().enumerate() {
                next[l] += c;
                next[l + 1] += c * beta;
            }
            coeffs = next;
        }
        let value: BigRational = coeffs
            .iter()
            .enumerate()
            .filter(|(l, _)| prof.get(v).contains(*l as i64))
            .map(|(_, c)| c.clone())
            .sum();
        total *= value;
    }
    total
}

/// Exact count via the colouring sum; refuses when `N^|E|` exceeds the cap.
pub fn generalized_duality_count(
    g: &Graph,
    prof: &ConstraintProfile,
    gauge: &GaugePair,
    limits: &Limits,
) -> Result<BigInt> {
    prof.check_graph(g)?;
    let n_colors = gauge.len();
    let m = g.edge_count();
    limits.check_colorings("gauge colouring sum", n_colors, m)?;
    let scaled = Scaled::new(gauge);

    let mut colors = vec![0usize; m];
    let mut counts: Vec<Vec<u16>> = (0..g.vertex_count())
        .map(|v| {
            let mut c = vec![0u16; n_colors];
            c[0] = g.degree(v) as u16;
            c
        })
        .collect();
    let mut caches: Vec<HashMap<Vec<u16>, BigInt>> = vec![HashMap::new(); g.vertex_count()];
    let mut total = BigInt::zero();

    loop {
        let mut term = BigInt::one();
        for v in 0..g.vertex_count() {
            let value = caches[v]
                .entry(counts[v].clone())
                .or_insert_with(|| scaled.vertex_value(&counts[v], prof.get(v)));
            if value.is_zero() {
                term = BigInt::zero();
                break;
            }
            term *= &*value;
        }
        if !term.is_zero() {
            for &c in &colors {
                term *= &scaled.a[c];
            }
            total += term;
        }

        // Odometer step over [N]^E.
        let mut e = 0;
        loop {
            if e == m {
                let denominator = Pow::pow(&scaled.da, m) * Pow::pow(&scaled.db, 2 * m);
                return exact_div(&total, &denominator).ok_or_else(|| {
                    Error::internal(format!(
                        "gauge sum {total} is not an integer multiple of {denominator}"
                    ))
                });
            }
            let old = colors[e];
            let new = (old + 1) % n_colors;
            colors[e] = new;
            let (u, v) = g.edge(e);
            for w in [u, v] {
                counts[w][old] -= 1;
                counts[w][new] += 1;
            }
            if new != 0 {
                break;
            }
            e += 1;
        }
    }
}
