//! Dense univariate integer polynomials and the admissible coefficient sum.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::admissible::AdmissibleSet;

/// `coeffs[l]` is the coefficient of `z^l`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `z^j`.
    pub fn monomial(j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^l`; zero outside the stored range, including negative `l`.
    pub fn coeff(&self, l: i64) -> BigInt {
        usize::try_from(l)
            .ok()
            .and_then(|l| self.coeffs.get(l).cloned())
            .unwrap_or_default()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `z^j * self`.
    pub fn shift_up(&self, j: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `(1 - z)^minus * (1 + z)^plus`.
    pub fn binom_expand(minus: usize, plus: usize) -> Self {
        let one_minus = IntPoly::from_i64(&[1, -1]);
        let one_plus = IntPoly::from_i64(&[1, 1]);
        let mut out = IntPoly::one();
        for _ in 0..minus {
            out = &out * &one_minus;
        }
        for _ in 0..plus {
            out = &out * &one_plus;
        }
        out
    }

    /// Sum of the coefficients of `z^l` over `l` in `p`.
    pub fn coeff_sum(&self, p: &AdmissibleSet) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(l, _)| p.contains(*l as i64))
            .map(|(_, c)| c)
            .sum()
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..len)
                .map(|l| self.coeff(l as i64) + rhs.coeff(l as i64))
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

/// `T[k] = C((1 - z)^k (1 + z)^(d - k); p)` for `k = 0..=d`.
pub fn vertex_table(d: usize, p: &AdmissibleSet) -> Vec<BigInt> {
    (0..=d)
        .map(|k| IntPoly::binom_expand(k, d - k).coeff_sum(p))
        .collect()
}
