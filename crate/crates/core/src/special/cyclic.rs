//! Arithmetic in `Z[z] / (z^N - 1)`, where `z` stands for a primitive
//! `N`-th root of unity, and reduction to a rational integer.

use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// An element of `Z[z] / (z^N - 1)` stored as `N` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPoly {
    coeffs: Vec<BigInt>,
}

impl CyclicPoly {
    pub fn zero(n: usize) -> Self {
        CyclicPoly {
            coeffs: vec![BigInt::zero(); n],
        }
    }

    /// `z^k`, with `k` taken modulo `n`.
    pub fn monomial(n: usize, k: i64) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[k.rem_euclid(n as i64) as usize] = BigInt::one();
        p
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0)
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplication by `z^k`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.modulus();
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % n] = c.clone();
        }
        CyclicPoly { coeffs }
    }

    /// The value at `z = exp(2 pi i / N)` when it is a rational integer.
    ///
    /// Reduces modulo the cyclotomic polynomial and requires a constant
    /// remainder.
    pub fn to_integer(&self) -> Result<BigInt> {
        let n = self.modulus();
        let phi = cyclotomic(n);
        let rem = remainder(IntPoly::new(self.coeffs.clone()), &phi);
        match rem.degree() {
            None => Ok(BigInt::zero()),
            Some(0) => Ok(rem.coeffs()[0].clone()),
            Some(_) => Err(Error::internal(format!(
                "value in Z[z]/(z^{n} - 1) is not a rational integer: remainder {rem:?}"
            ))),
        }
    }
}

impl Mul for &CyclicPoly {
    type Output = CyclicPoly;

    fn mul(self, rhs: &CyclicPoly) -> CyclicPoly {
        let n = self.modulus();
        assert_eq!(n, rhs.modulus(), "mismatched cyclic moduli");
        let mut out = CyclicPoly::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % n] += a * b;
                }
            }
        }
        out
    }
}

impl AddAssign<&CyclicPoly> for CyclicPoly {
    fn add_assign(&mut self, rhs: &CyclicPoly) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Add for &CyclicPoly {
    type Output = CyclicPoly;

    fn add(self, rhs: &CyclicPoly) -> CyclicPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &CyclicPoly {
    type Output = CyclicPoly;

    fn neg(self) -> CyclicPoly {
        CyclicPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn remainder(a: IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("divisor is nonzero");
    debug_assert!(b.coeffs()[db].is_one());
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    while r.len() > db {
        let lead = r.pop().expect("non-empty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - db;
        for (i, c) in b.coeffs()[..db].iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
    }
    IntPoly::new(r)
}

/// Exact quotient of `a` by the monic polynomial `b`.
fn quotient(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("divisor is nonzero");
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let Some(da) = a.degree() else {
        return IntPoly::zero();
    };
    if da < db {
        return IntPoly::zero();
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let lead = r[k + db].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, c) in b.coeffs().iter().enumerate() {
            r[k + i] -= &lead * c;
        }
        q[k] = lead;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    IntPoly::new(q)
}

/// The `n`-th cyclotomic polynomial, from `z^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut p = IntPoly::monomial(n);
    p = &p - &IntPoly::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = quotient(&p, &cyclotomic(d));
    }
    p
}
