//! The known-discrepancy ledger: acknowledged `(g, r, p, k)` cells where the
//! closed-form table and the brute-force aggregation disagree.
//!
//! A copy of `data/known_discrepancies.json` is embedded so verification
//! works from any directory; `--ledger` points at an alternative file.

use std::path::Path;

use picard_weights::LedgerCell;
use serde::Deserialize;

pub const DEFAULT_LEDGER_JSON: &str = include_str!("../data/known_discrepancies.json");

#[derive(Debug, Clone, Deserialize)]
pub struct LedgerEntry {
    pub g: usize,
    pub r: usize,
    pub p: i64,
    pub k: i64,
    pub note: String,
}

impl LedgerEntry {
    pub fn cell(&self) -> LedgerCell {
        LedgerCell {
            g: self.g,
            r: self.r,
            p: self.p,
            k: self.k,
        }
    }
}

pub fn parse_ledger(json: &str) -> Result<Vec<LedgerEntry>, String> {
    serde_json::from_str(json).map_err(|e| format!("malformed ledger file: {e}"))
}

pub fn load_ledger(path: Option<&Path>) -> Result<Vec<LedgerEntry>, String> {
    match path {
        None => parse_ledger(DEFAULT_LEDGER_JSON),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read ledger {}: {e}", path.display()))?;
            parse_ledger(&text)
        }
    }
}
