use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Degrees `a1 <= ... <= ar` of a pure-powers ideal `(x1^a1, ..., xr^ar)`
/// in `n` variables. Variables past `r` carry no power (`a_i = infinity`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
    n: usize,
}

impl DegreeSequence {
    /// Validates `0 < a1 <= ... <= ar` and `1 <= r <= n`.
    pub fn new(degrees: Vec<u32>, n: usize) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidDegreeSequence {
                index: 0,
                reason: "empty",
            });
        }
        Self::with_powers(degrees, n)
    }

    /// The full sequence `(a, ..., a)` of length `n`.
    pub fn uniform(a: u32, n: usize) -> Result<Self> {
        Self::new(alloc::vec![a; n], n)
    }

    /// No powers at all: every `a_i` is infinite, which recovers the
    /// classical lex (Macaulay) setting.
    pub fn none(n: usize) -> Self {
        DegreeSequence {
            degrees: Vec::new(),
            n,
        }
    }

    /// Like [`DegreeSequence::new`] but also accepts `r = 0`.
    pub fn with_powers(degrees: Vec<u32>, n: usize) -> Result<Self> {
        if degrees.len() > n {
            return Err(Error::InvalidDegreeSequence {
                index: n,
                reason: "more degrees than variables",
            });
        }
        for (i, &a) in degrees.iter().enumerate() {
            if a == 0 {
                return Err(Error::InvalidDegreeSequence {
                    index: i,
                    reason: "degree must be positive",
                });
            }
            if i > 0 && degrees[i - 1] > a {
                return Err(Error::InvalidDegreeSequence {
                    index: i,
                    reason: "degrees must be nondecreasing",
                });
            }
        }
        Ok(DegreeSequence { degrees, n })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Number of finite powers `r`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// True when every variable carries a power (`r = n`).
    pub fn is_full(&self) -> bool {
        self.degrees.len() == self.n
    }

    /// Power of the zero-based variable `i`, or `None` for infinity.
    pub fn power(&self, i: usize) -> Option<u32> {
        self.degrees.get(i).copied()
    }

    /// Whether `u` lies in the pure-powers ideal.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.degrees
            .iter()
            .enumerate()
            .any(|(i, &a)| u.exponent(i) >= a)
    }

    /// Socle degree `s = sum (a_i - 1)`; meaningful when `r = n`.
    pub fn socle_degree(&self) -> u32 {
        self.degrees.iter().map(|a| a - 1).sum()
    }

    /// The pure-powers ideal `(x1^a1, ..., xr^ar)`.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self
            .degrees
            .iter()
            .enumerate()
            .map(|(i, &a)| Monomial::pure_power(self.n, i, a))
            .collect();
        MonomialIdeal::new(self.n, gens).expect("pure powers share the ring")
    }

    /// Sequence for the first `n-1` variables, dropping `a_n` when present.
    pub fn drop_last(&self) -> DegreeSequence {
        let n = self.n.saturating_sub(1);
        let mut degrees = self.degrees.clone();
        degrees.truncate(n);
        DegreeSequence { degrees, n }
    }

    /// Sequence on the two variables `j < i` (zero-based).
    pub fn restrict_pair(&self, j: usize, i: usize) -> DegreeSequence {
        debug_assert!(j < i);
        let degrees = [self.power(j), self.power(i)]
            .into_iter()
            .flatten()
            .collect();
        DegreeSequence { degrees, n: 2 }
    }

    /// Extend to `r = n` by giving every powerless variable the power `pad`
    /// (raised to `a_r` if needed to keep the sequence sorted).
    pub fn padded(&self, pad: u32) -> DegreeSequence {
        let floor = self.degrees.last().copied().unwrap_or(1);
        let pad = pad.max(floor).max(1);
        let mut degrees = self.degrees.clone();
        degrees.resize(self.n, pad);
        DegreeSequence { degrees, n: self.n }
    }

    /// True when `self` is dominated by `other` entrywise, treating missing
    /// entries as infinite.
    pub fn dominated_by(&self, other: &DegreeSequence) -> bool {
        self.n == other.n
            && other.len() <= self.len()
            && other.degrees.iter().zip(&self.degrees).all(|(b, a)| b >= a)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_unsorted_and_nonpositive() {
        assert_eq!(
            DegreeSequence::new(vec![3, 2], 2),
            Err(Error::InvalidDegreeSequence {
                index: 1,
                reason: "degrees must be nondecreasing"
            })
        );
        assert!(DegreeSequence::new(vec![0, 2], 2).is_err());
        assert!(DegreeSequence::new(vec![2, 2, 2], 2).is_err());
        assert!(DegreeSequence::new(vec![], 2).is_err());
        assert!(DegreeSequence::new(vec![2, 3], 3).is_ok());
    }

    #[test]
    fn padding_keeps_order() {
        let a = DegreeSequence::new(vec![2, 5], 4).unwrap();
        assert_eq!(a.padded(3).degrees(), &[2, 5, 5, 5]);
        assert_eq!(a.padded(9).degrees(), &[2, 5, 9, 9]);
    }

    #[test]
    fn domination() {
        let a = DegreeSequence::new(vec![2, 2], 2).unwrap();
        let b = DegreeSequence::new(vec![2, 3], 2).unwrap();
        assert!(a.dominated_by(&b));
        assert!(!b.dominated_by(&a));
        assert!(a.dominated_by(&DegreeSequence::none(2)));
    }
}
