//! Small helpers over exact big integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `2^e` for possibly negative `e`.
pub fn pow2(e: i64) -> BigRational {
    let magnitude = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(magnitude)
    } else {
        BigRational::new(BigInt::one(), magnitude)
    }
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::parse(1, format!("`{text}` is not a rational of the form p/q"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(1, format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(num, den))
}

/// The integer value of `q`, or `None` when `q` has a non-trivial denominator.
pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Exact `a / b` when `b | a`.
pub fn exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}
