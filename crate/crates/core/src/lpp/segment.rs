use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::piece::GradedPiece;

use super::slices::{bar_sequence, SliceDecomposition};
use super::{is_lpp_piece, is_spp_piece, minus, plus};

/// For each `i` with `V_[i]` not full, the smallest `j > i` with
/// `V_[j]` not inside `m_(j-i) (V_[i])+ + a_j`.
fn first_violation(s: &SliceDecomposition, bar: &DegreeSequence) -> Result<Option<(u32, u32)>> {
    let d = s.degree();
    let mut best: Option<(u32, u32)> = None;
    for i in 0..d {
        let vi = s.slice(i);
        if vi.is_full() {
            continue;
        }
        let mut reach = plus(vi, bar)?;
        for j in i + 1..=d {
            if let Some((bi, bj)) = best {
                if j - i >= bj - bi {
                    break;
                }
            }
            reach = reach.multiply().union(&GradedPiece::pure_powers(bar, j));
            if !s.slice(j).is_subset(&reach) {
                best = Some((i, j));
                break;
            }
        }
    }
    Ok(best)
}

fn slices_are_lpp(s: &SliceDecomposition, bar: &DegreeSequence) -> bool {
    s.slices().iter().all(|p| is_lpp_piece(p, bar))
}

/// Whether `v` is a segment: spp, lpp slices, and each slice bounded by the
/// growth of the earlier slices.
pub fn is_segment(v: &GradedPiece, seq: &DegreeSequence) -> bool {
    if v.nvars() != seq.nvars() || v.nvars() == 0 || !is_spp_piece(v, seq) {
        return false;
    }
    let bar = bar_sequence(seq);
    let s = SliceDecomposition::new(v);
    slices_are_lpp(&s, &bar) && matches!(first_violation(&s, &bar), Ok(None))
}

/// The unique segment with the same dimension as `v`.
///
/// Repeatedly applies the exchange `V_[i] -> V_[i]+`, `V_[j] -> V_[j]-` at
/// the violation with the smallest gap `j - i`; each exchange lowers the
/// dimension sequence.
pub fn sigma(v: &GradedPiece, seq: &DegreeSequence) -> Result<GradedPiece> {
    if v.nvars() != seq.nvars() {
        return Err(Error::DimensionMismatch {
            expected: seq.nvars(),
            found: v.nvars(),
        });
    }
    if v.nvars() == 0 {
        return Ok(v.clone());
    }
    if !is_spp_piece(v, seq) {
        return Err(Error::Precondition(
            "sigma needs an spp piece containing the pure powers",
        ));
    }
    let bar = bar_sequence(seq);
    let mut s = SliceDecomposition::new(v);
    if !slices_are_lpp(&s, &bar) {
        return Err(Error::Precondition("sigma needs lpp slices"));
    }
    let mut delta = s.dimension_sequence();
    while let Some((i, j)) = first_violation(&s, &bar)? {
        let up = plus(s.slice(i), &bar)?;
        let down = minus(s.slice(j), &bar)?;
        s.set_slice(i, up);
        s.set_slice(j, down);
        let next = s.dimension_sequence();
        if !next.le(&delta) || next == delta {
            return Err(Error::Internal(
                "segment exchange did not lower the dimension sequence".into(),
            ));
        }
        delta = next;
    }
    let out = s.assemble();
    if out.dim() != v.dim() || !is_spp_piece(&out, seq) {
        return Err(Error::Internal(
            "segment exchange broke the spp property".into(),
        ));
    }
    Ok(out)
}
