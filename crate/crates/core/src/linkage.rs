//! Links `(a : I)` of monomial ideals containing a pure-powers ideal, and
//! the duality between an ideal and its link in `R = A/a`.

use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

/// An ideal of `K[x1, x2]` containing `(x1^a1, x2^a2)`, as the offsets
/// `d_i = min{e : x1^e x2^i in I}` for `0 <= i < a2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoVarProfile {
    offsets: Vec<u32>,
    a1: u32,
    a2: u32,
}

impl TwoVarProfile {
    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    /// `d_{i+1} + 1 >= d_i` for all `i`.
    pub fn is_spp(&self) -> bool {
        self.offsets.windows(2).all(|w| w[1] + 1 >= w[0])
    }

    /// `sum x1^{d_i} x2^i` plus the pure powers.
    pub fn ideal(&self) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self
            .offsets
            .iter()
            .enumerate()
            .map(|(i, &d)| Monomial::new(alloc::vec![d, i as u32]))
            .collect();
        gens.push(Monomial::new(alloc::vec![self.a1, 0]));
        gens.push(Monomial::new(alloc::vec![0, self.a2]));
        MonomialIdeal::new(2, gens).expect("two variables")
    }
}

fn two_powers(seq: &DegreeSequence) -> Result<(u32, u32)> {
    if seq.nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: seq.nvars(),
        });
    }
    match (seq.power(0), seq.power(1)) {
        (Some(a1), Some(a2)) => Ok((a1, a2)),
        _ => Err(Error::NotArtinian),
    }
}

fn require_full(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<()> {
    if ideal.nvars() != seq.nvars() {
        return Err(Error::DimensionMismatch {
            expected: seq.nvars(),
            found: ideal.nvars(),
        });
    }
    if !seq.is_full() {
        return Err(Error::NotArtinian);
    }
    if !ideal.contains_powers(seq) {
        return Err(Error::MissingPurePowers);
    }
    Ok(())
}

pub fn two_var_profile(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<TwoVarProfile> {
    let (a1, a2) = two_powers(seq)?;
    require_full(ideal, seq)?;
    let offsets = (0..a2)
        .map(|i| {
            (0..=a1)
                .find(|&e| ideal.contains(&Monomial::new(alloc::vec![e, i])))
                .unwrap_or(a1)
        })
        .collect();
    Ok(TwoVarProfile { offsets, a1, a2 })
}

/// The link in two variables, generated by `x1^{a1-d_i} x2^{a2-1-i}` and
/// `x2^{a2}`.
pub fn two_var_link(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    let p = two_var_profile(ideal, seq)?;
    let mut gens: Vec<Monomial> = p
        .offsets
        .iter()
        .enumerate()
        .map(|(i, &d)| Monomial::new(alloc::vec![p.a1 - d, p.a2 - 1 - i as u32]))
        .collect();
    gens.push(Monomial::new(alloc::vec![0, p.a2]));
    MonomialIdeal::new(2, gens)
}

/// `(a : I)` for a full pure-powers ideal `a` contained in `I`.
pub fn link(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    require_full(ideal, seq)?;
    seq.ideal().colon(ideal)
}

/// Rows `(d, H(R/I; d), H(R/I^l; s-d), H(R; d))` for `0 <= d <= s`.
pub fn duality_table(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<Vec<[u64; 4]>> {
    let linked = link(ideal, seq)?;
    let s = seq.socle_degree();
    let hi = ideal.hilbert_function(s);
    let hl = linked.hilbert_function(s);
    let hr = seq.ideal().hilbert_function(s);
    Ok((0..=s as usize)
        .map(|d| [d as u64, hi.get(d), hl.get(s as usize - d), hr.get(d)])
        .collect())
}

/// `H(R/I; d) + H(R/I^l; s-d) = H(R; d)` for all `0 <= d <= s`.
pub fn duality_check(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<bool> {
    Ok(duality_table(ideal, seq)?
        .iter()
        .all(|r| r[1] + r[2] == r[3]))
}

/// Monomials outside `I` whose every variable multiple lies in `I`.
pub fn socle_monomials(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<Vec<Monomial>> {
    require_full(ideal, seq)?;
    let n = ideal.nvars();
    let mut out = Vec::new();
    for d in 0..=seq.socle_degree() {
        for u in monomials_of_degree(n, d) {
            if !ideal.contains(&u) && (0..n).all(|i| ideal.contains(&u.mul_var(i))) {
                out.push(u);
            }
        }
    }
    Ok(out)
}

/// `type(R/IR)`: the dimension of the socle.
pub fn socle_type(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<usize> {
    Ok(socle_monomials(ideal, seq)?.len())
}

/// Minimal generators of `IR` in `R = A/a`: those of `I` outside `a`.
pub fn mu_in_quotient(ideal: &MonomialIdeal, seq: &DegreeSequence) -> usize {
    ideal
        .generators()
        .iter()
        .filter(|g| !seq.contains(g))
        .count()
}

/// `type(R/IR) = mu(I^l R)`.
pub fn link_mu_check(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<bool> {
    Ok(socle_type(ideal, seq)? == mu_in_quotient(&link(ideal, seq)?, seq))
}
