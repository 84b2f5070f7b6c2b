//! Monomial ideals, their graded pieces and Hilbert functions.

use alloc::vec::Vec;
use core::fmt;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::monomial::{lex_unrank, Monomial};
use crate::piece::GradedPiece;

/// A monomial ideal, kept as its minimal generators.
///
/// Generators are sorted by degree and then descending lex, so two ideals
/// are equal exactly when their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn canonical_order(a: &Monomial, b: &Monomial) -> core::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.lex_cmp(a))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical_order);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.nvars(),
            });
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal_unchecked(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: alloc::vec![Monomial::one(n)],
        }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: (0..n).map(|i| Monomial::var(n, i)).collect(),
        }
    }

    /// The ideal generated by every member of the given pieces.
    pub fn from_pieces(n: usize, pieces: &[GradedPiece]) -> Self {
        let mut sorted: Vec<&GradedPiece> = pieces.iter().collect();
        sorted.sort_by_key(|p| p.degree());
        let mut gens: Vec<Monomial> = Vec::new();
        for p in sorted {
            debug_assert_eq!(p.nvars(), n);
            for u in p.iter() {
                if !gens.iter().any(|g| g.divides(&u)) {
                    gens.push(u);
                }
            }
        }
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Whether the pure-powers ideal of `seq` lies inside this ideal.
    pub fn contains_powers(&self, seq: &DegreeSequence) -> bool {
        seq.nvars() == self.n && self.contains_ideal(&seq.ideal())
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `(self : u)`, generated by `m / gcd(m, u)`.
    pub fn quotient_by(&self, u: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|m| m.div(&m.gcd(u)).expect("gcd divides"))
            .collect();
        MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        }
    }

    /// The colon ideal `(self : other)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut acc = MonomialIdeal::unit(self.n);
        for g in &other.gens {
            acc = acc.intersection(&self.quotient_by(g))?;
        }
        Ok(acc)
    }

    /// The degree-`d` monomials of the ideal.
    pub fn graded_piece(&self, d: u32) -> GradedPiece {
        let mut p = GradedPiece::empty(self.n, d);
        if self.gens.iter().all(|g| g.degree() > d) {
            return p;
        }
        for r in 0..p.capacity() {
            if self.contains(&lex_unrank(self.n, d, r)) {
                p.insert_rank(r);
            }
        }
        p
    }

    /// Every variable has a pure power among the generators, so `A/I` is
    /// finite dimensional.
    pub fn is_artinian(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        (0..self.n).all(|i| self.gens.iter().any(|g| g.pure_power_index() == Some(i)))
    }

    /// Smallest degree in which `A/I` vanishes (and hence vanishes beyond).
    pub fn vanishing_degree(&self) -> Option<u32> {
        if !self.is_artinian() {
            return None;
        }
        let bound: u32 = if self.is_unit() {
            0
        } else {
            (0..self.n)
                .map(|i| {
                    self.gens
                        .iter()
                        .filter(|g| g.pure_power_index() == Some(i))
                        .map(|g| g.exponent(i) - 1)
                        .min()
                        .unwrap_or(0)
                })
                .sum::<u32>()
                + 1
        };
        (0..=bound).find(|&d| self.graded_piece(d).is_full())
    }

    /// `H(A/I; d)` for `0 <= d <= dmax`.
    pub fn hilbert_function(&self, dmax: u32) -> HilbertFunction {
        let values = (0..=dmax)
            .map(|d| self.graded_piece(d).codim() as u64)
            .collect();
        HilbertFunction { values }
    }

    /// For Artinian quotients: `H(A/I)` up to and including the first zero.
    pub fn hilbert_function_artinian(&self) -> Result<HilbertFunction> {
        let top = self.vanishing_degree().ok_or(Error::NotArtinian)?;
        Ok(self.hilbert_function(top))
    }

    /// `e(A/I) = dim_K A/I`.
    pub fn multiplicity(&self) -> Result<u64> {
        Ok(self.hilbert_function_artinian()?.sum())
    }

    /// Graded pieces in degrees `0..=dmax`.
    pub fn pieces(&self, dmax: u32) -> Vec<GradedPiece> {
        (0..=dmax).map(|d| self.graded_piece(d)).collect()
    }
}

/// `H(A/I; d) = dim A_d - dim I_d` for `0 <= d <= dmax`.
pub fn hilbert_function(ideal: &MonomialIdeal, dmax: u32) -> HilbertFunction {
    ideal.hilbert_function(dmax)
}

/// `(J : I)`.
pub fn ideal_colon(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<MonomialIdeal> {
    j.colon(i)
}

/// `e(A/I)`, an error when the quotient is not Artinian.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.multiplicity()
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Values `H(0), ..., H(dmax)` of the Hilbert function of a quotient `A/I`.
/// Entries past the end are read as zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        match values.first() {
            Some(&h0) if h0 > 1 => Err(Error::OutOfRange {
                what: "H(0)",
                value: h0,
                min: 0,
                max: 1,
            }),
            _ => Ok(HilbertFunction { values }),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Last degree with a nonzero value.
    pub fn top_degree(&self) -> Option<usize> {
        self.values.iter().rposition(|&v| v != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    fn example_4_5_2() -> MonomialIdeal {
        ideal(
            4,
            &[
                &[1, 1, 0, 0],
                &[2, 0, 0, 0],
                &[0, 2, 0, 0],
                &[0, 0, 2, 0],
                &[0, 0, 0, 2],
            ],
        )
    }

    #[test]
    fn minimal_generators() {
        let i = ideal(2, &[&[2, 0], &[3, 1], &[1, 1], &[1, 1]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1])]);
    }

    #[test]
    fn graded_piece_examples() {
        let p = example_4_5_2().graded_piece(2);
        assert_eq!(p.dim(), 5);
        assert_eq!(
            p.monomials(),
            vec![
                m(&[2, 0, 0, 0]),
                m(&[1, 1, 0, 0]),
                m(&[0, 2, 0, 0]),
                m(&[0, 0, 2, 0]),
                m(&[0, 0, 0, 2])
            ]
        );
        assert!(MonomialIdeal::unit(3).graded_piece(4).is_full());
        let q = ideal(2, &[&[3, 0], &[0, 3]]).graded_piece(4);
        assert_eq!(
            q.monomials(),
            vec![m(&[4, 0]), m(&[3, 1]), m(&[1, 3]), m(&[0, 4])]
        );
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            example_4_5_2().hilbert_function(4).values(),
            &[1, 4, 5, 2, 0]
        );
        assert_eq!(
            MonomialIdeal::maximal(3).hilbert_function(3).values(),
            &[1, 0, 0, 0]
        );
        // deg 3 outside (x1^2,x1x2,x1x3,x2^2,x2x3) in 4 vars: x1x4^2, x2x4^2, x3^3,
        // x3^2x4, x3x4^2, x4^3 -> 6
        let i = ideal(
            4,
            &[
                &[2, 0, 0, 0],
                &[1, 1, 0, 0],
                &[1, 0, 1, 0],
                &[0, 2, 0, 0],
                &[0, 1, 1, 0],
            ],
        );
        assert_eq!(i.hilbert_function(3).values(), &[1, 4, 5, 6]);
    }

    #[test]
    fn colon_examples() {
        let j = ideal(2, &[&[3, 0], &[0, 3]]);
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(
            ideal_colon(&j, &i).unwrap(),
            ideal(2, &[&[2, 0], &[1, 2], &[0, 3]])
        );
        assert_eq!(ideal_colon(&j, &MonomialIdeal::unit(2)).unwrap(), j);
        assert!(ideal_colon(&j, &MonomialIdeal::unit(3)).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            multiplicity(&ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[0, 3, 0], &[0, 0, 3]])).unwrap(),
            21
        );
        assert_eq!(multiplicity(&MonomialIdeal::maximal(3)).unwrap(), 1);
        assert_eq!(
            multiplicity(&ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])).unwrap(),
            27
        );
        assert_eq!(multiplicity(&ideal(2, &[&[2, 0]])), Err(Error::NotArtinian));
        assert_eq!(multiplicity(&MonomialIdeal::unit(2)).unwrap(), 0);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(
            alloc::format!("{}", example_4_5_2()),
            "x1^2, x1*x2, x2^2, x3^2, x4^2"
        );
        assert_eq!(alloc::format!("{}", MonomialIdeal::zero(2)), "0");
    }
}
