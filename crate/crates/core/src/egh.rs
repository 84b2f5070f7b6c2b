//! Numeric bounds on ideals containing pure powers: the Cayley-Bacharach
//! multiplicity bound with its extremal ideal, the one-step growth check and
//! the generator-count bound in three variables.

use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linkage::mu_in_quotient;
use crate::lpp::{is_lpp, lpp_piece};
use crate::monomial::Monomial;
use crate::piece::GradedPiece;

/// `b` and `delta` for a full sequence `a` and a degree `D` with
/// `a1 <= D <= s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBParameters {
    seq: DegreeSequence,
    degree: u32,
    b: usize,
    delta: u32,
}

impl CBParameters {
    pub fn new(seq: &DegreeSequence, degree: u32) -> Result<Self> {
        if !seq.is_full() || seq.is_empty() {
            return Err(Error::Precondition("bound needs a power of every variable"));
        }
        let a = seq.degrees();
        let s = seq.socle_degree();
        if degree < a[0] || degree > s {
            return Err(Error::OutOfRange {
                what: "D",
                value: u64::from(degree),
                min: u64::from(a[0]),
                max: u64::from(s),
            });
        }
        let prefix = |k: usize| a[..k].iter().map(|x| x - 1).sum::<u32>();
        let b = (0..=a.len())
            .rev()
            .find(|&k| prefix(k) <= degree)
            .expect("prefix(0) = 0");
        let delta = if b < a.len() {
            prefix(b + 1) - degree + 1
        } else {
            1
        };
        Ok(CBParameters {
            seq: seq.clone(),
            degree,
            b,
            delta,
        })
    }

    pub fn sequence(&self) -> &DegreeSequence {
        &self.seq
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// `s = sum (a_i - 1)`.
    pub fn socle_degree(&self) -> u32 {
        self.seq.socle_degree()
    }

    /// `prod a_i - delta * prod_{i >= b+2} a_i` (one-based indices).
    pub fn bound(&self) -> u64 {
        let a = self.seq.degrees();
        let total: u64 = a.iter().map(|&x| u64::from(x)).product();
        let tail: u64 = a.iter().skip(self.b + 1).map(|&x| u64::from(x)).product();
        total - u64::from(self.delta) * tail
    }
}

/// Upper bound on the multiplicity of `A/I` for `I` containing `a` and a
/// form of degree `D` outside it.
pub fn cb_bound(seq: &DegreeSequence, degree: u32) -> Result<u64> {
    Ok(CBParameters::new(seq, degree)?.bound())
}

/// `a + (h)` with `h = x1^{a1-1} ... x_b^{a_b-1} x_{b+1}^{D - sum_{i<=b}(a_i-1)}`.
pub fn francisco_ideal(seq: &DegreeSequence, degree: u32) -> Result<MonomialIdeal> {
    let p = CBParameters::new(seq, degree)?;
    let a = seq.degrees();
    let n = seq.nvars();
    let mut e = alloc::vec![0u32; n];
    for i in 0..p.b {
        e[i] = a[i] - 1;
    }
    if p.b < n {
        e[p.b] = degree - e.iter().sum::<u32>();
    }
    let mut gens: Vec<Monomial> = seq.ideal().generators().to_vec();
    gens.push(Monomial::new(e));
    let j = MonomialIdeal::new(n, gens)?;
    if !is_lpp(&j, seq) {
        return Err(Error::Internal("extremal ideal is not lpp".into()));
    }
    Ok(j)
}

/// `(x1, ..., x_b, x_{b+1}^delta, x_{b+2}^{a_{b+2}}, ..., x_n^{a_n})`.
pub fn francisco_link(seq: &DegreeSequence, degree: u32) -> Result<MonomialIdeal> {
    let p = CBParameters::new(seq, degree)?;
    let a = seq.degrees();
    let n = seq.nvars();
    let gens = (0..n)
        .map(|i| {
            let e = if i < p.b {
                1
            } else if i == p.b {
                p.delta
            } else {
                a[i]
            };
            Monomial::pure_power(n, i, e)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// `dim (m V + a_{d+1}) <= dim I_{d+1}` for the lpp piece `V` with
/// `dim V = dim I_d`.
pub fn egh_check(ideal: &MonomialIdeal, seq: &DegreeSequence, d: u32) -> Result<bool> {
    if ideal.nvars() != seq.nvars() {
        return Err(Error::DimensionMismatch {
            expected: seq.nvars(),
            found: ideal.nvars(),
        });
    }
    if !ideal.contains_powers(seq) {
        return Err(Error::MissingPurePowers);
    }
    let v = lpp_piece(d, ideal.graded_piece(d).dim(), seq)?;
    let grown = v.multiply().union(&GradedPiece::pure_powers(seq, d + 1));
    Ok(grown.dim() <= ideal.graded_piece(d + 1).dim())
}

fn mu_powers(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<(u32, u32)> {
    if ideal.nvars() != 3 || seq.nvars() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: ideal.nvars(),
        });
    }
    let (Some(a1), Some(a2)) = (seq.power(0), seq.power(1)) else {
        return Err(Error::Precondition("needs powers of x1 and x2"));
    };
    if !ideal.contains(&Monomial::pure_power(3, 0, a1))
        || !ideal.contains(&Monomial::pure_power(3, 1, a2))
    {
        return Err(Error::MissingPurePowers);
    }
    Ok((a1, a2))
}

/// `mu(I) <= a1 * a2` for `I` in three variables containing `x1^a1, x2^a2`.
///
/// This fails in general: `(x1, x2, x3)^2` has six generators and contains
/// `x1^2, x2^2`. See [`mu_quotient_bound_check`] for the bound that holds.
pub fn mu_bound_check(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<bool> {
    let (a1, a2) = mu_powers(ideal, seq)?;
    Ok(ideal.mu() as u64 <= u64::from(a1) * u64::from(a2))
}

/// `mu(IR) <= a1 * a2` in `R = A/(x1^a1, x2^a2)`: minimal generators other
/// than the two powers have distinct `(x1, x2)`-exponents below `(a1, a2)`.
pub fn mu_quotient_bound_check(ideal: &MonomialIdeal, seq: &DegreeSequence) -> Result<bool> {
    let (a1, a2) = mu_powers(ideal, seq)?;
    Ok(mu_in_quotient(ideal, seq) as u64 <= u64::from(a1) * u64::from(a2))
}

/// The staircase `x1^i x2^j x3^{(a1-1-i)+(a2-1-j)+1}` for `i < a1`, `j < a2`
/// plus `x1^a1, x2^a2`: `a1 * a2` generators outside the powers.
pub fn mu_extremal(a1: u32, a2: u32) -> MonomialIdeal {
    let mut gens = alloc::vec![
        Monomial::pure_power(3, 0, a1),
        Monomial::pure_power(3, 1, a2)
    ];
    for i in 0..a1 {
        for j in 0..a2 {
            let k = (a1 - 1 - i) + (a2 - 1 - j) + 1;
            gens.push(Monomial::new(alloc::vec![i, j, k]));
        }
    }
    MonomialIdeal::new(3, gens).expect("three variables")
}
