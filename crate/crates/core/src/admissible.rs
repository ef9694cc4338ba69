//! Admissible out-degree sets.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Base {
    Singleton(i64),
    /// Sorted, duplicate-free.
    Finite(Vec<i64>),
    Residue { r: u64, modulus: u64 },
    All,
}

/// A subset `P` of the integers, possibly shifted to `P - j`.
///
/// Membership is total on `i64`; infinite sets are never materialised.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleSet {
    base: Base,
    shift: i64,
}

impl AdmissibleSet {
    pub fn singleton(a: i64) -> Self {
        Self::from_base(Base::Singleton(a))
    }

    pub fn finite(items: impl IntoIterator<Item = i64>) -> Self {
        let mut v: Vec<i64> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_base(Base::Finite(v))
    }

    pub fn empty() -> Self {
        Self::finite([])
    }

    /// `{ x : x = r (mod modulus) }`; requires `modulus >= 1` and `r < modulus`.
    pub fn residue(r: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::argument("residue modulus must be at least 1"));
        }
        if r >= modulus {
            return Err(Error::argument(format!(
                "residue {r} must lie in 0..{modulus}"
            )));
        }
        Ok(Self::from_base(Base::Residue { r, modulus }))
    }

    /// Multiples of `modulus`.
    pub fn multiples_of(modulus: u64) -> Result<Self> {
        Self::residue(0, modulus)
    }

    pub fn all() -> Self {
        Self::from_base(Base::All)
    }

    fn from_base(base: Base) -> Self {
        AdmissibleSet { base, shift: 0 }
    }

    /// `P - j = { n - j : n in P }`.
    pub fn shifted(&self, j: i64) -> Self {
        AdmissibleSet {
            base: self.base.clone(),
            shift: self.shift + j,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        let y = x + self.shift;
        match &self.base {
            Base::Singleton(a) => y == *a,
            Base::Finite(items) => items.binary_search(&y).is_ok(),
            Base::Residue { r, modulus } => y.rem_euclid(*modulus as i64) == *r as i64,
            Base::All => true,
        }
    }

    /// Membership of `0..=d`.
    pub fn mask(&self, d: usize) -> Vec<bool> {
        (0..=d as i64).map(|x| self.contains(x)).collect()
    }

    /// `{ d - p : p in P, 0 <= p <= d }`, as a finite set.
    pub fn reflect(&self, d: usize) -> Self {
        Self::finite(
            (0..=d as i64)
                .filter(|&p| self.contains(p))
                .map(|p| d as i64 - p),
        )
    }

    /// The modulus when this is an unshifted residue class.
    pub fn as_residue(&self) -> Option<(u64, u64)> {
        match (&self.base, self.shift) {
            (Base::Residue { r, modulus }, 0) => Some((*r, *modulus)),
            _ => None,
        }
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Singleton(a) => write!(f, "{{{a}}}")?,
            Base::Finite(items) => {
                let parts: Vec<String> = items.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))?
            }
            Base::Residue { r, modulus } => write!(f, "{r} mod {modulus}")?,
            Base::All => write!(f, "Z")?,
        }
        if self.shift != 0 {
            write!(f, " - {}", self.shift)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let odd = AdmissibleSet::residue(1, 2).unwrap();
        assert!(odd.contains(-1) && odd.contains(3) && !odd.contains(0));
        assert!(AdmissibleSet::all().contains(-40));
        assert!(!AdmissibleSet::empty().contains(0));
        let s = AdmissibleSet::finite([5, 1, 1, 3]);
        assert_eq!(s.mask(5), vec![false, true, false, true, false, true]);
        assert!(AdmissibleSet::residue(0, 1).unwrap().contains(7));
    }

    #[test]
    fn residue_validation() {
        assert!(AdmissibleSet::residue(0, 0).is_err());
        assert!(AdmissibleSet::residue(3, 3).is_err());
    }

    #[test]
    fn shift_moves_membership() {
        let p = AdmissibleSet::finite([1, 2]);
        let q = p.shifted(2);
        assert!(q.contains(-1) && q.contains(0) && !q.contains(1));
    }

    #[test]
    fn reflect_within_degree() {
        let p = AdmissibleSet::finite([0, 1, 9]);
        assert_eq!(p.reflect(3), AdmissibleSet::finite([2, 3]));
        let even = AdmissibleSet::multiples_of(2).unwrap();
        assert_eq!(even.reflect(3).mask(3), vec![false, true, false, true]);
    }
}
