//! Monomial subspaces of a single degree, stored as bitsets over lex rank.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::monomial::{lex_unrank, num_monomials, Monomial};

/// The span of a set of monomials of degree `d` in `n` variables.
///
/// Bit `k` is set when the monomial of lex rank `k` is a member, so members
/// iterate in descending lex order and a lex segment is a prefix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedPiece {
    n: usize,
    degree: u32,
    bits: FixedBitSet,
}

impl GradedPiece {
    pub fn empty(n: usize, degree: u32) -> Self {
        GradedPiece {
            n,
            degree,
            bits: FixedBitSet::with_capacity(num_monomials(n, degree)),
        }
    }

    /// All of `A_d`.
    pub fn full(n: usize, degree: u32) -> Self {
        let mut p = Self::empty(n, degree);
        p.bits.insert_range(..);
        p
    }

    /// The top `count` monomials in lex order (no range check).
    pub(crate) fn prefix(n: usize, degree: u32, count: usize) -> Self {
        let mut p = Self::empty(n, degree);
        p.bits.insert_range(..count);
        p
    }

    pub fn from_monomials<'a, I>(n: usize, degree: u32, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut p = Self::empty(n, degree);
        for u in monomials {
            if u.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.nvars(),
                });
            }
            if u.degree() != degree {
                return Err(Error::Precondition(
                    "graded piece members must share one degree",
                ));
            }
            p.bits.insert(u.lex_rank());
        }
        Ok(p)
    }

    /// The degree-`d` part `𝔞_d` of the pure-powers ideal.
    pub fn pure_powers(seq: &DegreeSequence, degree: u32) -> Self {
        let n = seq.nvars();
        let mut p = Self::empty(n, degree);
        if seq.is_empty() {
            return p;
        }
        for r in 0..p.capacity() {
            if seq.contains(&lex_unrank(n, degree, r)) {
                p.bits.insert(r);
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension as a vector space (member count).
    pub fn dim(&self) -> usize {
        self.bits.count_ones(..)
    }

    /// `dim A_d`.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn codim(&self) -> usize {
        self.capacity() - self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.capacity()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        u.nvars() == self.n && u.degree() == self.degree && self.bits.contains(u.lex_rank())
    }

    pub fn contains_rank(&self, rank: usize) -> bool {
        self.bits.contains(rank)
    }

    pub fn insert(&mut self, u: &Monomial) {
        debug_assert!(u.nvars() == self.n && u.degree() == self.degree);
        self.bits.insert(u.lex_rank());
    }

    pub fn insert_rank(&mut self, rank: usize) {
        self.bits.insert(rank);
    }

    pub fn remove_rank(&mut self, rank: usize) {
        self.bits.set(rank, false);
    }

    /// Member ranks in increasing order (descending lex).
    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Ranks of the monomials of `A_d` outside the piece.
    pub fn missing_ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.zeroes()
    }

    /// Members in descending lex order.
    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.bits
            .ones()
            .map(move |r| lex_unrank(self.n, self.degree, r))
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &GradedPiece) -> bool {
        self.same_space(other) && self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &GradedPiece) -> GradedPiece {
        debug_assert!(self.same_space(other));
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &GradedPiece) -> GradedPiece {
        debug_assert!(self.same_space(other));
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    /// `V` minus the members of `other`.
    pub fn difference(&self, other: &GradedPiece) -> GradedPiece {
        debug_assert!(self.same_space(other));
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    fn same_space(&self, other: &GradedPiece) -> bool {
        self.n == other.n && self.degree == other.degree
    }

    /// `m_1 V`: every product `x_i * u` with `u` in `V`.
    pub fn multiply(&self) -> GradedPiece {
        let mut out = GradedPiece::empty(self.n, self.degree + 1);
        for u in self.iter() {
            for i in 0..self.n {
                out.bits.insert(u.mul_var(i).lex_rank());
            }
        }
        out
    }

    /// `m_j V` for `j >= 0`.
    pub fn multiply_times(&self, j: u32) -> GradedPiece {
        let mut out = self.clone();
        for _ in 0..j {
            out = out.multiply();
        }
        out
    }

    /// Rank of the lex-largest monomial of `A_d` not in `V`.
    pub fn largest_missing(&self) -> Option<usize> {
        self.bits.zeroes().next()
    }
}

/// `m_1 V`, the degree `d+1` piece spanned by all variable multiples.
pub fn multiply_piece(v: &GradedPiece) -> GradedPiece {
    v.multiply()
}

impl fmt::Debug for GradedPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg {} {{", self.degree)?;
        for (i, u) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str("}")
    }
}
