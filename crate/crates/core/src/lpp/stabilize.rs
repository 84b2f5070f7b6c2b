use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::{HilbertFunction, MonomialIdeal};
use crate::macaulay::realize_hf;
use crate::monomial::{monomials_of_degree, Monomial};

use super::is_spp;

/// The lpp ideal of `K[x1, x2]` with the given Hilbert function.
pub fn two_var_lpp(h: &HilbertFunction, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    if seq.nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: seq.nvars(),
        });
    }
    realize_hf(h, seq)
}

fn lift(u: &Monomial, q: &Monomial, j: usize, i: usize) -> Monomial {
    let mut e = q.exponents().to_vec();
    e[j] += u.exponent(0);
    e[i] += u.exponent(1);
    Monomial::new(e)
}

/// `{x_j^a x_i^b : x_j^a x_i^b q in I}` as an ideal of `K[x_j, x_i]`.
fn pair_slice(ideal: &MonomialIdeal, q: &Monomial, j: usize, i: usize) -> MonomialIdeal {
    let colon = ideal.quotient_by(q);
    let gens = colon
        .generators()
        .iter()
        .filter(|g| (0..g.nvars()).all(|k| k == j || k == i || g.exponent(k) == 0))
        .map(|g| Monomial::new(alloc::vec![g.exponent(j), g.exponent(i)]))
        .collect();
    MonomialIdeal::from_minimal_unchecked(2, gens)
}

/// Monomials of degree `<= top` in the variables other than `j` and `i`,
/// as full exponent vectors.
fn cofactors(n: usize, j: usize, i: usize, top: u32) -> Vec<Monomial> {
    (0..=top)
        .flat_map(|d| monomials_of_degree(n - 2, d))
        .map(|q| q.with_var(j, 0).with_var(i, 0))
        .collect()
}

/// Replaces every two-variable slice in `x_j, x_i` by its lpp ideal when
/// some slice is not spp; `None` when all slices already are.
fn stabilize_pair(
    ideal: &MonomialIdeal,
    seq: &DegreeSequence,
    j: usize,
    i: usize,
    top: u32,
) -> Result<Option<MonomialIdeal>> {
    let n = ideal.nvars();
    let pair = seq.restrict_pair(j, i);
    let qs = cofactors(n, j, i, top);
    let slices: Vec<MonomialIdeal> = qs.iter().map(|q| pair_slice(ideal, q, j, i)).collect();
    if slices.iter().all(|s| is_spp(s, &pair)) {
        return Ok(None);
    }
    let mut gens = Vec::new();
    for (q, s) in qs.iter().zip(&slices) {
        let h = s.hilbert_function(top);
        let lpp = two_var_lpp(&h, &pair)?;
        gens.extend(lpp.generators().iter().map(|u| lift(u, q, j, i)));
    }
    gens.extend(seq.ideal().generators().iter().cloned());
    for k in 0..n {
        gens.push(Monomial::pure_power(n, k, top + 1));
    }
    Ok(Some(MonomialIdeal::new(n, gens)?))
}

/// An spp ideal with the same Hilbert function, obtained by replacing
/// two-variable slices by lpp ideals until every slice is spp.
///
/// The quotient must be Artinian.
pub fn stabilize_spp(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    if seq.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: seq.nvars(),
        });
    }
    if !ideal.contains_powers(seq) {
        return Err(Error::MissingPurePowers);
    }
    let top = ideal.vanishing_degree().ok_or(Error::NotArtinian)?;
    let h = ideal.hilbert_function(top);
    let mut current = ideal.clone();
    let mut steps = 0usize;
    'outer: loop {
        for i in 1..n {
            for j in 0..i {
                if let Some(next) = stabilize_pair(&current, seq, j, i, top)? {
                    if next.hilbert_function(top) != h {
                        return Err(Error::Internal(
                            "slice replacement changed the Hilbert function".into(),
                        ));
                    }
                    if next == current {
                        return Err(Error::Internal("slice replacement made no progress".into()));
                    }
                    current = next;
                    steps += 1;
                    if steps > 100_000 {
                        return Err(Error::Internal("stabilization did not terminate".into()));
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    if !is_spp(&current, seq) {
        return Err(Error::Internal("stabilized ideal is not spp".into()));
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::is_lpp;

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
    fn spp_input_is_fixed() {
        let a = seq(&[2, 2, 2], 3);
        let i = ideal(3, &[&[1, 1, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(stabilize_spp(&i, &a).unwrap(), i);
    }

    #[test]
    fn three_variable_example() {
        let a = seq(&[2, 2, 2], 3);
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1], &[0, 2, 0], &[0, 0, 2]]);
        let s = stabilize_spp(&i, &a).unwrap();
        assert!(is_spp(&s, &a));
        assert_eq!(s.hilbert_function(4).values(), &[1, 3, 2, 0, 0]);
        assert_eq!(s.hilbert_function(4), i.hilbert_function(4));
    }

    #[test]
    fn two_variable_inputs_become_lex() {
        // every ideal of K[x1,x2] containing x1^3, x2^3 with generators of degree <= 3
        let a = seq(&[3, 3], 2);
        let candidates: Vec<Monomial> =
            (0..=3u32).flat_map(|d| monomials_of_degree(2, d)).collect();
        for mask in 0u32..(1 << candidates.len()) {
            let mut gens: Vec<Monomial> = (0..candidates.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| candidates[b].clone())
                .collect();
            gens.extend(a.ideal().generators().iter().cloned());
            let i = MonomialIdeal::new(2, gens).unwrap();
            let s = stabilize_spp(&i, &a).unwrap();
            assert!(is_lpp(&s, &a), "{i:?} -> {s:?}");
            assert_eq!(s.hilbert_function(6), i.hilbert_function(6));
        }
    }

    #[test]
    fn two_var_lpp_examples() {
        let a = seq(&[3, 3], 2);
        assert_eq!(
            two_var_lpp(&a.ideal().hilbert_function_artinian().unwrap(), &a).unwrap(),
            a.ideal()
        );
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let l = two_var_lpp(&i.hilbert_function(5), &a).unwrap();
        assert_eq!(l.hilbert_function(5), i.hilbert_function(5));
        assert!(is_lpp(&l, &a));
        assert!(two_var_lpp(&i.hilbert_function(5), &seq(&[3, 3, 3], 3)).is_err());
    }

    #[test]
    fn rejects_missing_powers() {
        let a = seq(&[2, 2], 2);
        assert_eq!(
            stabilize_spp(&ideal(2, &[&[3, 0], &[0, 2]]), &a),
            Err(Error::MissingPurePowers)
        );
    }
}
