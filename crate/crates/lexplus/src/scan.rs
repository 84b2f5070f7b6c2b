//! Scans split by partition prefix and run on the rayon pool.

use lexplus_core::scan::{scan_partition, scan_prefixes, ScanConfig, ScanReport, DEFAULT_BUDGET};
use lexplus_core::Result;
use rayon::prelude::*;

/// Environment variable overriding the scan budget.
pub const BUDGET_VAR: &str = "LEXPLUS_BUDGET";

/// The flag value if given, else the environment override, else the default.
pub fn resolve_budget(flag: Option<u128>) -> std::result::Result<u128, String> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_VAR} is not a number: {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Same result as the sequential scan, with violations sorted by text.
pub fn parallel_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    let prefixes = scan_prefixes(cfg)?;
    let reports = prefixes
        .par_iter()
        .map(|p| scan_partition(cfg, p))
        .collect::<Result<Vec<_>>>()?;
    let mut report = reports
        .into_iter()
        .fold(ScanReport::default(), ScanReport::merge);
    report.violations.sort_by_cached_key(|v| v.to_string());
    Ok(report)
}
