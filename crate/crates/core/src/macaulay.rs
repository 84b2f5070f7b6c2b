//! Bracket coefficients, Macaulay representations relative to a degree
//! sequence, and the growth bound on Hilbert functions.

use alloc::vec;
use alloc::vec::Vec;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::{HilbertFunction, MonomialIdeal};
use crate::lpp::lpp_piece;
use crate::monomial::{binomial, num_monomials};
use crate::piece::GradedPiece;

/// Bracket values `[h; t]` for `0 <= h <= n` and `0 <= t <= max_degree`.
///
/// `[h; t]` counts monomials of degree `t` in the last `h` variables that
/// avoid the pure powers; infinite powers are capped at `t + 1`.
#[derive(Clone, Debug)]
pub struct BracketTable {
    max_degree: u32,
    rows: Vec<Vec<u64>>,
}

impl BracketTable {
    pub fn new(seq: &DegreeSequence, max_degree: u32) -> Self {
        let n = seq.nvars();
        let width = max_degree as usize + 1;
        let mut rows = Vec::with_capacity(n + 1);
        let mut prev = vec![0u64; width];
        prev[0] = 1;
        rows.push(prev.clone());
        for h in 1..=n {
            let var = n - h;
            let cap = seq.power(var).map(|a| a as usize).unwrap_or(width);
            let mut row = vec![0u64; width];
            for (t, slot) in row.iter_mut().enumerate() {
                *slot = (0..cap.min(t + 1)).map(|e| prev[t - e]).sum();
            }
            rows.push(row.clone());
            prev = row;
        }
        BracketTable { max_degree, rows }
    }

    pub fn nvars(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[h; t]`, with `[0; t] = 0` for `t >= 1`.
    pub fn get(&self, h: usize, t: u32) -> u64 {
        assert!(t <= self.max_degree, "bracket degree {t} beyond table");
        self.rows[h][t as usize]
    }
}

/// `[h; d]`: the dimension of the degree-`d` part of
/// `K[x_{n-h+1}, ..., x_n]` modulo the pure powers of those variables.
pub fn bracket(h: usize, d: u32, seq: &DegreeSequence) -> Result<u64> {
    let n = seq.nvars();
    if h > n {
        return Err(Error::OutOfRange {
            what: "h",
            value: h as u64,
            min: 0,
            max: n as u64,
        });
    }
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "d",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    Ok(BracketTable::new(seq, d).get(h, d))
}

/// A decomposition `k = [k_d; d] + [k_{d-1}; d-1] + ... + [k_1; 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    k: u64,
    base: u32,
    /// `(k_t, t)` for `t = d, d-1, ..., 1`.
    terms: Vec<(usize, u32)>,
    seq: DegreeSequence,
}

impl MacaulayRep {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn sequence(&self) -> &DegreeSequence {
        &self.seq
    }

    /// `sum [k_t; t]`, which equals `k`.
    pub fn evaluate(&self) -> u64 {
        let table = BracketTable::new(&self.seq, self.base);
        self.terms.iter().map(|&(kt, t)| table.get(kt, t)).sum()
    }

    /// `sum [k_t; t+1]`.
    pub fn shifted(&self) -> u64 {
        let table = BracketTable::new(&self.seq, self.base + 1);
        self.terms.iter().map(|&(kt, t)| table.get(kt, t + 1)).sum()
    }
}

/// How often the value `i` may occur among the `k_t`.
fn multiplicity_cap(seq: &DegreeSequence, i: usize) -> usize {
    let n = seq.nvars();
    if i == n {
        1
    } else {
        seq.power(n - i - 1)
            .map(|a| a as usize - 1)
            .unwrap_or(usize::MAX)
    }
}

struct RepSearch<'a> {
    table: &'a BracketTable,
    caps: Vec<usize>,
    used: Vec<usize>,
    chosen: Vec<usize>,
}

impl RepSearch<'_> {
    fn run(&mut self, t: u32, rem: u64, max_value: usize) -> bool {
        if t == 0 {
            return rem == 0;
        }
        for v in (0..=max_value).rev() {
            if self.used[v] >= self.caps[v] {
                continue;
            }
            let here = self.table.get(v, t);
            if here > rem {
                continue;
            }
            let reach: u64 = (1..t).map(|s| self.table.get(v, s)).sum();
            if rem - here > reach {
                // smaller values only reach less
                return false;
            }
            self.used[v] += 1;
            self.chosen.push(v);
            if self.run(t - 1, rem - here, v) {
                return true;
            }
            self.chosen.pop();
            self.used[v] -= 1;
        }
        false
    }
}

/// The unique `(a, n)`-Macaulay representation of `k` in base `d`.
pub fn macaulay_rep(k: u64, d: u32, seq: &DegreeSequence) -> Result<MacaulayRep> {
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "d",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let n = seq.nvars();
    let table = BracketTable::new(seq, d);
    let max = table.get(n, d);
    if k < 1 || k > max {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            min: 1,
            max,
        });
    }
    let mut search = RepSearch {
        table: &table,
        caps: (0..=n).map(|i| multiplicity_cap(seq, i)).collect(),
        used: vec![0; n + 1],
        chosen: Vec::with_capacity(d as usize),
    };
    if !search.run(d, k, n) {
        return Err(Error::Internal(alloc::format!(
            "no representation for k={k} in base {d}"
        )));
    }
    let terms = search
        .chosen
        .iter()
        .zip((1..=d).rev())
        .map(|(&v, t)| (v, t))
        .collect();
    Ok(MacaulayRep {
        k,
        base: d,
        terms,
        seq: seq.clone(),
    })
}

/// `k^<d>`: the largest possible value of `H(d+1)` when `H(d) = k`.
pub fn growth(k: u64, d: u32, seq: &DegreeSequence) -> Result<u64> {
    if k == 0 {
        if d < 1 {
            return Err(Error::OutOfRange {
                what: "d",
                value: 0,
                min: 1,
                max: u64::MAX,
            });
        }
        return Ok(0);
    }
    Ok(macaulay_rep(k, d, seq)?.shifted())
}

/// Classical representation `k = C(m_d, d) + ... + C(m_j, j)` with
/// `m_d > ... > m_j >= j >= 1`, as `(m_t, t)` pairs.
pub fn classical_rep(k: u64, d: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut rem = k;
    let mut t = d;
    while rem > 0 && t >= 1 {
        let mut m = u64::from(t);
        while binomial(m + 1, u64::from(t)) <= rem {
            m += 1;
        }
        out.push((m, t));
        rem -= binomial(m, u64::from(t));
        t -= 1;
    }
    out
}

/// Kruskal-Katona shift `k^(d) = sum C(m_t, t+1)`.
pub fn classical_growth(k: u64, d: u32) -> u64 {
    classical_rep(k, d)
        .iter()
        .map(|&(m, t)| binomial(m, u64::from(t) + 1))
        .sum()
}

/// Macaulay's bound `k^<d> = sum C(m_t + 1, t + 1)` for quotients of the
/// polynomial ring.
pub fn macaulay_growth(k: u64, d: u32) -> u64 {
    classical_rep(k, d)
        .iter()
        .map(|&(m, t)| binomial(m + 1, u64::from(t) + 1))
        .sum()
}

/// Checks `H(1) <= [n;1]` and `H(d+1) <= H(d)^<d>` for every `d >= 1`,
/// reading `H` as zero past its last value.
pub fn check_admissible(h: &HilbertFunction, seq: &DegreeSequence) -> Result<()> {
    let n = seq.nvars();
    let h1 = h.get(1);
    if h1 > n as u64 {
        return Err(Error::Precondition("H(1) exceeds the number of variables"));
    }
    if h.get(0) == 0 {
        return match h.values().iter().position(|&v| v != 0) {
            Some(d) => Err(Error::Inadmissible { degree: d - 1 }),
            None => Ok(()),
        };
    }
    let table = BracketTable::new(seq, 1);
    if h1 > table.get(n, 1) {
        return Err(Error::Inadmissible { degree: 0 });
    }
    for d in 1..h.len() {
        let bound =
            growth(h.get(d), d as u32, seq).map_err(|_| Error::Inadmissible { degree: d - 1 })?;
        if h.get(d + 1) > bound {
            return Err(Error::Inadmissible { degree: d });
        }
    }
    Ok(())
}

/// True when `h` is the Hilbert function of some `A/I` with `I` containing
/// the pure powers.
pub fn is_admissible_hf(h: &HilbertFunction, seq: &DegreeSequence) -> bool {
    check_admissible(h, seq).is_ok()
}

/// The lpp ideal with Hilbert function `h`.
pub fn realize_hf(h: &HilbertFunction, seq: &DegreeSequence) -> Result<MonomialIdeal> {
    check_admissible(h, seq)?;
    let n = seq.nvars();
    let pieces: Vec<GradedPiece> = (0..=h.len() as u32)
        .map(|d| lpp_piece(d, num_monomials(n, d) - h.get(d as usize) as usize, seq))
        .collect::<Result<_>>()?;
    for w in pieces.windows(2) {
        if !w[0].multiply().is_subset(&w[1]) {
            return Err(Error::Internal(alloc::format!(
                "lpp pieces in degrees {} and {} do not form an ideal",
                w[0].degree(),
                w[1].degree()
            )));
        }
    }
    Ok(MonomialIdeal::from_pieces(n, &pieces))
}
