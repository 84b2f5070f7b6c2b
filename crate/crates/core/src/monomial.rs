//! Exponent-vector monomials and the lex numbering of a fixed degree.
//!
//! Within one degree, monomials are numbered by their position in
//! descending lex order (`x1 > x2 > ... > xn`): rank 0 is `x1^d`, the last
//! rank is `xn^d`. Graded pieces are bitsets over this numbering, so a lex
//! segment is always a prefix.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en`, stored as its dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; n],
        }
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    /// `x_{i+1}^e` (zero-based `i`).
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = alloc::vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True when no exponent exceeds one.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The single variable index if this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by the variable with zero-based index `i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Lex comparison ignoring degree: the first differing exponent decides,
    /// a larger exponent of an earlier variable wins.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Position of this monomial in the descending lex list of its degree.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.exps)
    }

    /// Drop the variable with zero-based index `i`.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { exps }
    }

    /// Insert a variable with exponent `e` at zero-based index `i`.
    pub fn with_var(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(i, e);
        Monomial { exps }
    }
}

/// Compare two monomials of the same ring: total degree first, then lex.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::DimensionMismatch {
            expected: u.nvars(),
            found: v.nvars(),
        });
    }
    Ok(u.cmp(v))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// Number of monomials of degree `d` in `n` variables, `C(n+d-1, d)`.
pub fn num_monomials(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n as u64 + u64::from(d) - 1, u64::from(d)) as usize
}

fn lex_rank(exps: &[u32]) -> usize {
    let n = exps.len();
    let mut rem: u32 = exps.iter().sum();
    let mut rank = 0;
    for (i, &e) in exps.iter().enumerate().take(n.saturating_sub(1)) {
        // monomials agreeing before i with a larger exponent at i:
        // those of degree <= rem-e-1 in the remaining n-i-1 variables
        if rem > e {
            rank += num_monomials(n - i, rem - e - 1);
        }
        rem -= e;
    }
    rank
}

/// The monomial with the given lex rank among degree-`d` monomials in `n`
/// variables.
pub fn lex_unrank(n: usize, d: u32, mut rank: usize) -> Monomial {
    let mut exps = alloc::vec![0u32; n];
    let mut rem = d;
    for (i, slot) in exps.iter_mut().enumerate() {
        if i + 1 == n {
            *slot = rem;
            break;
        }
        // pick exponent e from rem downward; block for e holds
        // num_monomials(n-i-1, rem-e) monomials
        let mut e = rem;
        loop {
            let block = num_monomials(n - i - 1, rem - e);
            if rank < block {
                break;
            }
            rank -= block;
            e -= 1;
        }
        *slot = e;
        rem -= e;
    }
    Monomial { exps }
}

/// All monomials of degree `d` in `n` variables, descending lex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    (0..num_monomials(n, d))
        .map(|r| lex_unrank(n, d, r))
        .collect()
}
