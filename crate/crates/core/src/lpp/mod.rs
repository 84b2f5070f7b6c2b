//! Lex segments plus pure powers, stability predicates and the
//! Clements-Lindström construction.

mod construct;
mod segment;
mod slices;
mod stabilize;

pub use construct::{
    clements_lindstrom, clements_lindstrom_windowed, minimal_growth_check, relax_degrees,
    ClCertificate,
};
pub use segment::{is_segment, sigma};
pub use slices::{bar_sequence, DimensionSequence, SliceDecomposition};
pub use stabilize::{stabilize_spp, two_var_lpp};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{num_monomials, Monomial};
use crate::piece::GradedPiece;

/// The `count` lex-largest monomials of degree `d` in `n` variables.
pub fn lex_segment(d: u32, count: usize, n: usize) -> Result<GradedPiece> {
    let cap = num_monomials(n, d);
    if count > cap {
        return Err(Error::OutOfRange {
            what: "D",
            value: count as u64,
            min: 0,
            max: cap as u64,
        });
    }
    Ok(GradedPiece::prefix(n, d, count))
}

/// `a_d` plus the lex-largest monomials outside it, `dim` monomials in all.
pub fn lpp_piece(d: u32, dim: usize, seq: &DegreeSequence) -> Result<GradedPiece> {
    let mut p = GradedPiece::pure_powers(seq, d);
    let floor = p.dim();
    let cap = p.capacity();
    if dim < floor || dim > cap {
        return Err(Error::OutOfRange {
            what: "D",
            value: dim as u64,
            min: floor as u64,
            max: cap as u64,
        });
    }
    let extra: Vec<usize> = p.missing_ranks().take(dim - floor).collect();
    for r in extra {
        p.insert_rank(r);
    }
    Ok(p)
}

/// Whether `v` equals the lpp piece of its own dimension.
pub fn is_lpp_piece(v: &GradedPiece, seq: &DegreeSequence) -> bool {
    match lpp_piece(v.degree(), v.dim(), seq) {
        Ok(p) => &p == v,
        Err(_) => false,
    }
}

/// Monomials reachable from `u` by moves `x_j u / x_i` with `j < i`,
/// including `u`.
fn borel_closure(u: &Monomial) -> BTreeSet<Monomial> {
    let mut seen = BTreeSet::new();
    let mut stack = alloc::vec![u.clone()];
    seen.insert(u.clone());
    while let Some(w) = stack.pop() {
        for i in 1..w.nvars() {
            if w.exponent(i) == 0 {
                continue;
            }
            for j in 0..i {
                let mut e = w.exponents().to_vec();
                e[i] -= 1;
                e[j] += 1;
                let next = Monomial::new(e);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen
}

/// Every single move `x_j u / x_i` (`j < i`) from a generator stays inside.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|u| {
        (1..u.nvars()).all(|i| {
            u.exponent(i) == 0
                || (0..i).all(|j| {
                    let mut e = u.exponents().to_vec();
                    e[i] -= 1;
                    e[j] += 1;
                    ideal.contains(&Monomial::new(e))
                })
        })
    })
}

/// `I = S + a` with `S` strongly stable.
pub fn is_spp(ideal: &MonomialIdeal, seq: &DegreeSequence) -> bool {
    ideal.nvars() == seq.nvars()
        && ideal.contains_powers(seq)
        && ideal
            .generators()
            .iter()
            .filter(|u| !seq.contains(u))
            .all(|u| borel_closure(u).iter().all(|w| ideal.contains(w)))
}

/// The piece contains `a_d` and the Borel closure of each other member.
pub fn is_spp_piece(v: &GradedPiece, seq: &DegreeSequence) -> bool {
    let d = v.degree();
    let a = GradedPiece::pure_powers(seq, d);
    if !a.is_subset(v) {
        return false;
    }
    v.difference(&a)
        .iter()
        .all(|u| borel_closure(&u).iter().all(|w| v.contains(w)))
}

/// Degree past which checking lpp pieces is pointless: beyond the
/// generators and the socle of the finite powers.
fn stabilizing_degree(ideal: &MonomialIdeal, seq: &DegreeSequence) -> u32 {
    ideal
        .max_generator_degree()
        .max(seq.socle_degree() + 1)
        .max(seq.degrees().last().copied().unwrap_or(0))
        + 1
}

/// Each graded piece is the lpp piece of its dimension.
pub fn is_lpp(ideal: &MonomialIdeal, seq: &DegreeSequence) -> bool {
    ideal.nvars() == seq.nvars()
        && ideal.contains_powers(seq)
        && (0..=stabilizing_degree(ideal, seq)).all(|d| is_lpp_piece(&ideal.graded_piece(d), seq))
}

/// `V+`: adjoin the lex-largest missing monomial (identity on a full piece).
pub fn plus(v: &GradedPiece, seq: &DegreeSequence) -> Result<GradedPiece> {
    if !is_lpp_piece(v, seq) {
        return Err(Error::Precondition(
            "plus needs a lex segment plus pure powers",
        ));
    }
    let mut out = v.clone();
    if let Some(r) = v.largest_missing() {
        out.insert_rank(r);
    }
    Ok(out)
}

/// `V-`: drop the lex-smallest member outside `a_d` (identity on `a_d`).
pub fn minus(v: &GradedPiece, seq: &DegreeSequence) -> Result<GradedPiece> {
    let a = GradedPiece::pure_powers(seq, v.degree());
    if !a.is_subset(v) {
        return Err(Error::Precondition(
            "minus needs a piece containing the pure powers",
        ));
    }
    let mut out = v.clone();
    if let Some(r) = v.difference(&a).ranks().last() {
        out.remove_rank(r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn seq(a: &[u32], n: usize) -> DegreeSequence {
        DegreeSequence::with_powers(a.to_vec(), n).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    #[test]
    fn lex_segment_examples() {
        assert_eq!(
            lex_segment(2, 2, 3).unwrap().monomials(),
            vec![m(&[2, 0, 0]), m(&[1, 1, 0])]
        );
        assert!(lex_segment(2, 0, 3).unwrap().is_empty());
        assert_eq!(
            lex_segment(3, 4, 3).unwrap().monomials(),
            vec![m(&[3, 0, 0]), m(&[2, 1, 0]), m(&[2, 0, 1]), m(&[1, 2, 0])]
        );
        assert!(lex_segment(1, 4, 3).is_err());
    }

    #[test]
    fn lpp_piece_examples() {
        let a = seq(&[2, 2, 2, 2], 4);
        assert_eq!(
            lpp_piece(2, 5, &a).unwrap().monomials(),
            vec![
                m(&[2, 0, 0, 0]),
                m(&[1, 1, 0, 0]),
                m(&[0, 2, 0, 0]),
                m(&[0, 0, 2, 0]),
                m(&[0, 0, 0, 2])
            ]
        );
        assert_eq!(
            lpp_piece(2, 4, &a).unwrap(),
            GradedPiece::pure_powers(&a, 2)
        );
        assert!(lpp_piece(2, 3, &a).is_err());
        let b = seq(&[3, 3, 3], 3);
        let floor = GradedPiece::pure_powers(&b, 3).dim();
        let p = lpp_piece(3, floor + 1, &b).unwrap();
        assert!(p.contains(&m(&[2, 1, 0])));
        assert_eq!(p.dim(), 4);
    }

    #[test]
    fn predicate_examples() {
        let a = seq(&[2, 2], 4);
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
        assert!(is_spp(&i, &a));
        assert!(!is_lpp(&i, &a));
        let b = seq(&[2, 2, 2], 3);
        assert!(is_spp(&b.ideal(), &b));
        assert!(is_lpp(&b.ideal(), &b));
        assert!(!is_strongly_stable(&ideal(2, &[&[0, 2]])));
        assert!(is_strongly_stable(&ideal(2, &[&[2, 0], &[1, 1]])));
    }

    #[test]
    fn plus_minus_examples() {
        let a = seq(&[2, 2], 2);
        let base = GradedPiece::pure_powers(&a, 2);
        let up = plus(&base, &a).unwrap();
        assert_eq!(up.monomials(), vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(plus(&up, &a).unwrap(), up);
        assert_eq!(minus(&up, &a).unwrap(), base);
        assert_eq!(minus(&base, &a).unwrap(), base);
        let bad = GradedPiece::from_monomials(2, 2, &[m(&[0, 2])]).unwrap();
        assert!(plus(&bad, &seq(&[], 2)).is_err());
        assert!(minus(&bad, &a).is_err());
    }

    #[test]
    fn minus_undoes_plus_on_lpp_pieces() {
        for n in 1..=3usize {
            for d in 0..=4u32 {
                for a in [vec![], vec![2], vec![2, 3], vec![2, 2, 3]] {
                    if a.len() > n {
                        continue;
                    }
                    let s = seq(&a, n);
                    let floor = GradedPiece::pure_powers(&s, d).dim();
                    for dim in floor..num_monomials(n, d) {
                        let v = lpp_piece(d, dim, &s).unwrap();
                        assert_eq!(minus(&plus(&v, &s).unwrap(), &s).unwrap(), v);
                    }
                }
            }
        }
    }
}
