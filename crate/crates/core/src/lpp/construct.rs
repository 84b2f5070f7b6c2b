use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::piece::GradedPiece;

use super::segment::sigma;
use super::slices::{bar_sequence, DimensionSequence};
use super::stabilize::stabilize_spp;
use super::{is_lpp, is_spp, lpp_piece};

/// Per-degree dimension sequences of the input and of the lpp ideal.
///
/// When the input is spp, `delta_after <= delta_before` pointwise; this is
/// the statement `dim (I + (x_n^i))_d >= dim (L + (x_n^i))_d` for all `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClCertificate {
    /// Highest degree covered by the result and the sequences.
    pub window: u32,
    /// False when the result only agrees with the lpp ideal up to `window`.
    pub exact: bool,
    pub input_is_spp: bool,
    pub delta_before: Vec<Vec<usize>>,
    pub delta_after: Vec<Vec<usize>>,
}

impl ClCertificate {
    /// Whether `delta_after <= delta_before` holds in every degree.
    pub fn dominated(&self) -> bool {
        self.delta_before
            .iter()
            .zip(&self.delta_after)
            .all(|(b, a)| a.iter().zip(b).all(|(x, y)| x <= y))
    }
}

/// `(I : x_n^e)` restricted to the first `n-1` variables.
fn last_var_slice(ideal: &MonomialIdeal, e: u32) -> MonomialIdeal {
    let n = ideal.nvars();
    let colon = ideal.quotient_by(&Monomial::pure_power(n, n - 1, e));
    let gens = colon
        .generators()
        .iter()
        .filter(|g| g.exponent(n - 1) == 0)
        .map(|g| g.without_var(n - 1))
        .collect();
    MonomialIdeal::new(n - 1, gens).expect("slice lives in n-1 variables")
}

/// The construction for Artinian `I` and a full degree sequence: stabilize,
/// replace each `x_n`-slice by its lpp ideal, then move every graded piece
/// to the segment of its dimension.
fn construct(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    if n <= 1 {
        return Ok(ideal.clone());
    }
    let top = ideal.vanishing_degree().ok_or(Error::NotArtinian)?;
    let stable = stabilize_spp(ideal, seq)?;
    let bar = bar_sequence(seq);
    let mut gens: Vec<Monomial> = seq.ideal().generators().to_vec();
    for e in 0..=top {
        let slice = construct(&last_var_slice(&stable, e), &bar)?;
        gens.extend(slice.generators().iter().map(|g| g.with_var(n - 1, e)));
    }
    let joined = MonomialIdeal::new(n, gens)?;
    let h = ideal.hilbert_function(top);
    if joined.hilbert_function(top) != h {
        return Err(Error::Internal(
            "slice-wise lpp replacement is not an ideal".into(),
        ));
    }
    let pieces: Vec<GradedPiece> = (0..=top + 1)
        .map(|d| sigma(&joined.graded_piece(d), seq))
        .collect::<Result<_>>()?;
    for w in pieces.windows(2) {
        if !w[0].multiply().is_subset(&w[1]) {
            return Err(Error::Internal(alloc::format!(
                "segments in degree {} do not multiply into the next",
                w[0].degree()
            )));
        }
    }
    Ok(MonomialIdeal::from_pieces(n, &pieces))
}

fn check_input(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<()> {
    if ideal.nvars() != seq.nvars() {
        return Err(Error::DimensionMismatch {
            expected: seq.nvars(),
            found: ideal.nvars(),
        });
    }
    if !ideal.contains_powers(seq) {
        return Err(Error::MissingPurePowers);
    }
    Ok(())
}

fn certificate(
    input: &MonomialIdeal,
    result: &MonomialIdeal,
    seq: &DegreeSequence,
    window: u32,
    exact: bool,
) -> ClCertificate {
    let n = input.nvars();
    let deltas = |i: &MonomialIdeal| -> Vec<Vec<usize>> {
        if n == 0 {
            return Vec::new();
        }
        (0..=window)
            .map(|d| DimensionSequence::of(&i.graded_piece(d)).values().to_vec())
            .collect()
    };
    ClCertificate {
        window,
        exact,
        input_is_spp: is_spp(input, seq),
        delta_before: deltas(input),
        delta_after: deltas(result),
    }
}

/// Degree-wise lpp pieces of the same dimensions as `ideal`, used to check
/// the construction.
fn direct_pieces(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
    dmax: u32,
) -> Result<Vec<GradedPiece>> {
    (0..=dmax)
        .map(|d| lpp_piece(d, ideal.graded_piece(d).dim(), seq))
        .collect()
}

/// The lpp ideal with the Hilbert function of `ideal`, with its
/// dimension-sequence certificate.
///
/// Variables without a power get one above the support when the quotient
/// is Artinian. Otherwise the result is computed in a window of degrees; see
/// [`clements_lindstrom_windowed`].
pub fn clements_lindstrom(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
) -> Result<(MonomialIdeal, ClCertificate)> {
    check_input(ideal, seq)?;
    let Some(top) = ideal.vanishing_degree() else {
        let dmax = ideal.max_generator_degree() + seq.socle_degree() + 1;
        return clements_lindstrom_windowed(ideal, seq, dmax);
    };
    let padded = seq.padded(top + 2);
    let result = construct(ideal, &padded)?;
    let direct = MonomialIdeal::from_pieces(ideal.nvars(), &direct_pieces(ideal, seq, top + 1)?);
    if result != direct || !is_lpp(&result, seq) {
        return Err(Error::Internal(
            "constructed ideal is not the lpp ideal".into(),
        ));
    }
    let cert = certificate(ideal, &result, seq, top, true);
    Ok((result, cert))
}

/// The lpp ideal in degrees `0..=dmax`: the returned ideal is generated by
/// those pieces and matches the Hilbert function of `ideal` up to `dmax`.
pub fn clements_lindstrom_windowed(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
    dmax: u32,
) -> Result<(MonomialIdeal, ClCertificate)> {
    check_input(ideal, seq)?;
    let n = ideal.nvars();
    let padded = seq.padded(dmax + 2);
    let closed = ideal.sum(&padded.ideal())?;
    let full = construct(&closed, &padded)?;
    let pieces = full.pieces(dmax);
    for (d, p) in pieces.iter().enumerate() {
        if p.dim() != ideal.graded_piece(d as u32).dim()
            || lpp_piece(d as u32, p.dim(), seq).as_ref() != Ok(p)
        {
            return Err(Error::Internal(alloc::format!(
                "windowed construction wrong in degree {d}"
            )));
        }
    }
    let result = MonomialIdeal::from_pieces(n, &pieces);
    let cert = certificate(ideal, &result, seq, dmax, false);
    Ok((result, cert))
}

/// `dim (m L_d + a_{d+1}) <= dim (m I_d + a_{d+1})` for `d < dmax`, where
/// `L` is the lpp ideal of `I`.
pub fn minimal_growth_check(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
    dmax: u32,
) -> Result<bool> {
    let (lpp, _) = if ideal.is_artinian() {
        clements_lindstrom(ideal, seq)?
    } else {
        clements_lindstrom_windowed(ideal, seq, dmax)?
    };
    Ok((0..dmax).all(|d| {
        let a = GradedPiece::pure_powers(seq, d + 1);
        let grow = |i: &MonomialIdeal| i.graded_piece(d).multiply().union(&a).dim();
        grow(&lpp) <= grow(ideal)
    }))
}

/// The lpp ideal for the larger powers `wider`, with the same Hilbert
/// function as the lpp ideal `ideal`.
pub fn relax_degrees(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
    wider: &DegreeSequence,
) -> Result<MonomialIdeal> {
    if !seq.dominated_by(wider) {
        return Err(Error::Precondition("new powers must dominate the old ones"));
    }
    if !is_lpp(ideal, seq) {
        return Err(Error::Precondition("relaxing powers needs an lpp ideal"));
    }
    Ok(clements_lindstrom(ideal, wider)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn seq(a: &[u32], n: usize) -> DegreeSequence {
        DegreeSequence::with_powers(a.to_vec(), n).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    /// Ideals containing `a` generated in degrees `<= gmax`, by subsets of
    /// the monomials outside `a`.
    fn ideals_over(a: &DegreeSequence, gmax: u32) -> Vec<MonomialIdeal> {
        let n = a.nvars();
        let free: Vec<Monomial> = (1..=gmax)
            .flat_map(|d| monomials_of_degree(n, d))
            .filter(|u| !a.contains(u))
            .collect();
        assert!(free.len() <= 16);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut out = Vec::new();
        for mask in 0u32..(1 << free.len()) {
            let mut gens: Vec<Monomial> = (0..free.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| free[b].clone())
                .collect();
            gens.extend(a.ideal().generators().iter().cloned());
            let i = MonomialIdeal::new(n, gens).unwrap();
            if seen.insert(alloc::format!("{i}")) {
                out.push(i);
            }
        }
        out
    }

    #[test]
    fn lpp_input_is_fixed() {
        let a = seq(&[2, 2, 2, 2], 4);
        let i = ideal(4, &[&[1, 1, 0, 0]]).sum(&a.ideal()).unwrap();
        let (l, cert) = clements_lindstrom(&i, &a).unwrap();
        assert_eq!(l, i);
        assert!(cert.exact && cert.input_is_spp && cert.dominated());
        assert_eq!(clements_lindstrom(&a.ideal(), &a).unwrap().0, a.ideal());
    }

    #[test]
    fn local_but_not_global_example() {
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
        let (l, cert) = clements_lindstrom(&i, &a).unwrap();
        assert!(!cert.exact);
        assert!(l.contains(&m(&[1, 0, 0, 1])));
        assert_eq!(l.hilbert_function(5), i.hilbert_function(5));
        let (w, _) = clements_lindstrom_windowed(&i, &a, 5).unwrap();
        assert_eq!(w.hilbert_function(5), i.hilbert_function(5));
    }

    #[test]
    fn exhaustive_three_variables() {
        let a = seq(&[2, 2, 2], 3);
        for i in ideals_over(&a, 3) {
            let (l, cert) = clements_lindstrom(&i, &a).unwrap();
            assert!(is_lpp(&l, &a));
            assert_eq!(l.hilbert_function(4), i.hilbert_function(4));
            if cert.input_is_spp {
                assert!(cert.dominated(), "{i:?}");
            }
            assert!(minimal_growth_check(&i, &a, 4).unwrap());
        }
    }

    #[test]
    fn exhaustive_mixed_powers() {
        let a = seq(&[2, 3, 3], 3);
        for i in ideals_over(&a, 2) {
            let (l, cert) = clements_lindstrom(&i, &a).unwrap();
            assert!(is_lpp(&l, &a));
            assert_eq!(l.hilbert_function(7), i.hilbert_function(7));
            if cert.input_is_spp {
                assert!(cert.dominated());
            }
        }
    }

    #[test]
    fn relax_examples() {
        let a = seq(&[2, 2], 2);
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(relax_degrees(&i, &a, &a).unwrap(), i);
        let b = seq(&[2, 3], 2);
        let j = relax_degrees(&i, &a, &b).unwrap();
        assert!(is_lpp(&j, &b));
        assert_eq!(j.hilbert_function(4), i.hilbert_function(4));
        let lex = relax_degrees(&i, &a, &DegreeSequence::none(2)).unwrap();
        assert_eq!(lex, i);
        assert!(relax_degrees(&i, &b, &a).is_err());
    }

    #[test]
    fn relax_to_lex_matches_macaulay() {
        let a = seq(&[2, 2, 2], 3);
        let i = ideal(3, &[&[1, 1, 0]]).sum(&a.ideal()).unwrap();
        let lex = relax_degrees(&i, &a, &DegreeSequence::none(3)).unwrap();
        assert!(super::super::is_strongly_stable(&lex));
        assert_eq!(lex.hilbert_function(5), i.hilbert_function(5));
        // lex ideal oracle: each degree is the lex prefix of its dimension
        for d in 0..=5 {
            let p = lex.graded_piece(d);
            assert_eq!(p, GradedPiece::prefix(3, d, p.dim()));
        }
    }
}
