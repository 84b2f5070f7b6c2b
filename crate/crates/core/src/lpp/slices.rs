use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::piece::GradedPiece;

/// The degree sequence seen by the first `n-1` variables.
pub fn bar_sequence(seq: &DegreeSequence) -> DegreeSequence {
    seq.drop_last()
}

/// A degree-`d` piece split by the power of the last variable:
/// `V = sum_i V_[d-i] * x_n^i`.
///
/// `slice(k)` is `V_[k]`, a piece of degree `k` in the first `n-1`
/// variables, and multiplies `x_n^(d-k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceDecomposition {
    n: usize,
    degree: u32,
    slices: Vec<GradedPiece>,
}

impl SliceDecomposition {
    pub fn new(v: &GradedPiece) -> Self {
        let n = v.nvars();
        assert!(n >= 1, "slicing needs at least one variable");
        let d = v.degree();
        let mut slices: Vec<GradedPiece> = (0..=d).map(|k| GradedPiece::empty(n - 1, k)).collect();
        for u in v.iter() {
            let e = u.exponent(n - 1);
            slices[(d - e) as usize].insert(&u.without_var(n - 1));
        }
        SliceDecomposition {
            n,
            degree: d,
            slices,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `V_[k]`.
    pub fn slice(&self, k: u32) -> &GradedPiece {
        &self.slices[k as usize]
    }

    pub fn set_slice(&mut self, k: u32, piece: GradedPiece) {
        assert_eq!(piece.degree(), k);
        assert_eq!(piece.nvars(), self.n - 1);
        self.slices[k as usize] = piece;
    }

    pub fn slices(&self) -> &[GradedPiece] {
        &self.slices
    }

    /// Reassemble `sum V_[d-i] x_n^i`.
    pub fn assemble(&self) -> GradedPiece {
        let mut out = GradedPiece::empty(self.n, self.degree);
        for (k, s) in self.slices.iter().enumerate() {
            let e = self.degree - k as u32;
            for u in s.iter() {
                out.insert(&u.with_var(self.n - 1, e));
            }
        }
        out
    }

    pub fn dimension_sequence(&self) -> DimensionSequence {
        let mut acc = 0;
        let values = self
            .slices
            .iter()
            .rev()
            .map(|s| {
                acc += s.dim();
                acc
            })
            .collect();
        DimensionSequence { values }
    }
}

/// `(dim V_[d], dim V_[d] + dim V_[d-1], ..., dim V)`, compared pointwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DimensionSequence {
    values: Vec<usize>,
}

impl DimensionSequence {
    pub fn of(v: &GradedPiece) -> Self {
        SliceDecomposition::new(v).dimension_sequence()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &DimensionSequence) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}
