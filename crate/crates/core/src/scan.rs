//! Exhaustive scans over monomial ideals containing a pure-powers ideal,
//! checking the growth, linkage and generator bounds on every instance.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::degree_sequence::DegreeSequence;
use crate::egh::{egh_check, mu_quotient_bound_check};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linkage::{duality_check, link};
use crate::lpp::minimal_growth_check;
use crate::monomial::Monomial;
use crate::piece::GradedPiece;

/// Default refusal threshold for the estimated number of instances.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub seq: DegreeSequence,
    /// Largest degree of a generator outside the pure powers.
    pub maxgen: u32,
    /// Degrees `d` at which the growth inequality is checked.
    pub degrees: Range<u32>,
    pub budget: u128,
    /// Keep one ideal per orbit under variable permutations (only used
    /// when every variable carries the same power).
    pub symmetry: bool,
}

impl ScanConfig {
    pub fn new(seq: DegreeSequence, maxgen: u32, degrees: Range<u32>) -> Self {
        ScanConfig {
            seq,
            maxgen,
            degrees,
            budget: DEFAULT_BUDGET,
            symmetry: false,
        }
    }

    /// Upper bound `2^(sum_d dim (A/a)_d)` on the number of instances.
    pub fn estimate(&self) -> u128 {
        let bits: usize = (0..=self.maxgen)
            .map(|d| GradedPiece::pure_powers(&self.seq, d).codim())
            .sum();
        if bits >= 128 {
            u128::MAX
        } else {
            1u128 << bits
        }
    }

    fn symmetric(&self) -> bool {
        let a = self.seq.degrees();
        self.symmetry && (a.is_empty() || (self.seq.is_full() && a.iter().all(|&x| x == a[0])))
    }

    /// Last degree fixed by a partition prefix.
    fn split_degree(&self) -> u32 {
        self.seq.power(0).unwrap_or(self.maxgen).min(self.maxgen)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    Egh(u32),
    MinimalGrowth,
    Duality,
    Involution,
    MuBound,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub ideal: MonomialIdeal,
    pub check: Check,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.check {
            Check::Egh(d) => write!(f, "growth in degree {d}"),
            Check::MinimalGrowth => write!(f, "minimal growth"),
            Check::Duality => write!(f, "duality"),
            Check::Involution => write!(f, "involution"),
            Check::MuBound => write!(f, "generator bound"),
        }?;
        write!(f, " fails for ({})", self.ideal)
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct ScanReport {
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl ScanReport {
    /// Order-independent up to the order of the violation list.
    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self
    }
}

fn check_budget(cfg: &ScanConfig) -> Result<()> {
    let estimate = cfg.estimate();
    if estimate > cfg.budget {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: cfg.budget,
        });
    }
    Ok(())
}

/// Calls `visit` on every list of pieces `V_0, ..., V_top` extending
/// `pieces` with `m V_{d-1} + a_d <= V_d`.
fn extend(
    seq: &DegreeSequence,
    pieces: &mut Vec<GradedPiece>,
    top: u32,
    visit: &mut dyn FnMut(&[GradedPiece]),
) {
    let d = pieces.len() as u32;
    if d > top {
        visit(pieces);
        return;
    }
    let n = seq.nvars();
    let mut forced = GradedPiece::pure_powers(seq, d);
    if let Some(prev) = pieces.last() {
        forced = forced.union(&prev.multiply());
    }
    let free: Vec<usize> = forced.missing_ranks().collect();
    debug_assert!(free.len() < 64);
    for mask in 0u64..(1u64 << free.len()) {
        let mut v = forced.clone();
        for (b, &r) in free.iter().enumerate() {
            if mask >> b & 1 == 1 {
                v.insert_rank(r);
            }
        }
        debug_assert_eq!(v.nvars(), n);
        pieces.push(v);
        extend(seq, pieces, top, visit);
        pieces.pop();
    }
}

/// The partition prefixes: every admissible choice of pieces through the
/// split degree. Empty when the degree range is empty.
pub fn scan_prefixes(cfg: &ScanConfig) -> Result<Vec<Vec<GradedPiece>>> {
    check_budget(cfg)?;
    let mut out = Vec::new();
    if cfg.degrees.is_empty() {
        return Ok(out);
    }
    extend(&cfg.seq, &mut Vec::new(), cfg.split_degree(), &mut |p| {
        out.push(p.to_vec())
    });
    Ok(out)
}

fn permuted(u: &Monomial, perm: &[usize]) -> Monomial {
    let mut e = alloc::vec![0; u.nvars()];
    for (i, &p) in perm.iter().enumerate() {
        e[p] = u.exponent(i);
    }
    Monomial::new(e)
}

fn sorted_generators(gens: impl Iterator<Item = Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = gens.collect();
    v.sort();
    v
}

/// Whether no variable permutation gives a smaller sorted generator list.
fn is_canonical(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    let own = sorted_generators(ideal.generators().iter().cloned());
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = alloc::vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if sorted_generators(ideal.generators().iter().map(|g| permuted(g, &perm))) < own {
                return false;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    true
}

/// Every check that applies to one instance.
pub fn check_instance(ideal: &MonomialIdeal, cfg: &ScanConfig) -> Result<Vec<Check>> {
    let seq = &cfg.seq;
    let mut failed = Vec::new();
    for d in cfg.degrees.clone() {
        if !egh_check(ideal, seq, d)? {
            failed.push(Check::Egh(d));
        }
    }
    if !minimal_growth_check(ideal, seq, cfg.degrees.end)? {
        failed.push(Check::MinimalGrowth);
    }
    if seq.is_full() {
        if !duality_check(ideal, seq)? {
            failed.push(Check::Duality);
        }
        if &link(&link(ideal, seq)?, seq)? != ideal {
            failed.push(Check::Involution);
        }
    }
    if seq.nvars() == 3 && seq.len() >= 2 && !mu_quotient_bound_check(ideal, seq)? {
        failed.push(Check::MuBound);
    }
    Ok(failed)
}

/// Runs every instance whose pieces through the split degree are `prefix`.
pub fn scan_partition(cfg: &ScanConfig, prefix: &[GradedPiece]) -> Result<ScanReport> {
    let n = cfg.seq.nvars();
    let powers = cfg.seq.ideal();
    let symmetric = cfg.symmetric();
    let mut report = ScanReport::default();
    let mut err = None;
    extend(&cfg.seq, &mut prefix.to_vec(), cfg.maxgen, &mut |pieces| {
        if err.is_some() {
            return;
        }
        let ideal = MonomialIdeal::from_pieces(n, pieces)
            .sum(&powers)
            .expect("same ring");
        if symmetric && !is_canonical(&ideal) {
            return;
        }
        report.instances += 1;
        match check_instance(&ideal, cfg) {
            Ok(failed) => report
                .violations
                .extend(failed.into_iter().map(|check| Violation {
                    ideal: ideal.clone(),
                    check,
                })),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Every monomial ideal containing the pure powers whose other generators
/// have degree at most `maxgen`, subject to the budget.
pub fn enumerate_ideals(
    seq: &DegreeSequence,
    maxgen: u32,
    budget: u128,
) -> Result<Vec<MonomialIdeal>> {
    let mut cfg = ScanConfig::new(seq.clone(), maxgen, 0..1);
    cfg.budget = budget;
    check_budget(&cfg)?;
    let n = seq.nvars();
    let powers = seq.ideal();
    let mut out = Vec::new();
    extend(seq, &mut Vec::new(), maxgen, &mut |pieces| {
        out.push(
            MonomialIdeal::from_pieces(n, pieces)
                .sum(&powers)
                .expect("same ring"),
        )
    });
    Ok(out)
}

/// Sequential scan over all partitions.
pub fn egh_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    let mut report = ScanReport::default();
    for prefix in scan_prefixes(cfg)? {
        report = report.merge(scan_partition(cfg, &prefix)?);
    }
    Ok(report)
}
