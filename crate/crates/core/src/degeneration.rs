//! Closed-form degeneration weight tables and their brute-force check.
//!
//! For each exterior degree `p` and boundary degree `k`, the closed form
//! produces a weight set from the `N_p` minimum formulas (rows (a)-(d),
//! with special rows at `p = 1` and `p = 6rg - 1`). The brute force unions,
//! over all constituents of `Lambda^p`, the degree-`k` weights of their
//! boundary profiles. The brute force is the ground truth of this crate;
//! the closed form is transcribed verbatim and every disagreement is
//! reported with witnesses rather than smoothed away. Known
//! disagreements are confined to a checked-in ledger of `(g, r, p, k)`
//! cells.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::boundary::{boundary_profile, Contribution};
use crate::character::TorusCharacter;
use crate::constituents::{enumerate, EnumerationSpec};
use crate::error::Error;

/// A contribution together with the constituent character it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourcedContribution {
    pub lambda: TorusCharacter,
    pub contribution: Contribution,
}

/// One weight present on exactly one side of a cell comparison. Witnesses
/// are nonempty exactly for weights the brute force found and the closed
/// form missed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub weight: i64,
    /// True: in brute force only. False: in closed form only.
    pub in_brute_force: bool,
    pub witnesses: Vec<SourcedContribution>,
}

/// Closed form versus brute force at one `(p, k)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComparison {
    pub p: i64,
    pub k: i64,
    pub closed_form: BTreeSet<i64>,
    pub brute_force: BTreeSet<i64>,
    pub matches: bool,
    pub discrepancies: Vec<Discrepancy>,
}

/// The full `(p, k)` comparison grid for one `(g, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub g: usize,
    pub r: usize,
    pub cells: Vec<CellComparison>,
}

impl ComparisonReport {
    pub fn mismatching_cells(&self) -> impl Iterator<Item = &CellComparison> {
        self.cells.iter().filter(|c| !c.matches)
    }
}

/// One acknowledged discrepancy cell of the checked-in ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LedgerCell {
    pub g: usize,
    pub r: usize,
    pub p: i64,
    pub k: i64,
}

/// The closed-form weight set at `(g, r, p, k)`, transcribed verbatim.
///
/// `[x]` is floor division; every argument it is applied to is non-negative
/// within the admissible ranges, and that is asserted. An empty `m`-range
/// yields the empty set. Errors only on `k` outside `[0, 4g-1]`.
pub fn closed_form_weights(g: usize, r: usize, p: i64, k: i64) -> Result<BTreeSet<i64>, Error> {
    assert!(g >= 1 && r >= 1);
    let (g_i, r_i) = (g as i64, r as i64);
    let max_k = 4 * g_i - 1;
    if !(0..=max_k).contains(&k) {
        return Err(Error::DegreeOutOfRange { k, max: max_k });
    }
    let dim = 6 * r_i * g_i;
    let mut out = BTreeSet::new();
    if p < 0 || p > dim {
        return Ok(out);
    }

    if p == 1 || p == dim - 1 {
        if (1..=g_i).contains(&k) {
            out.insert(p);
        } else if (3 * g_i - 1..=4 * g_i - 2).contains(&k) {
            out.insert(p + 4 * g_i);
        }
        return Ok(out);
    }

    debug_assert!(p >= 0 && dim - p >= 0);
    let p_over_g = p / g_i;
    let outer_min = p_over_g.min(6 * r_i - p_over_g).min(2 * r_i);
    let inner_min = |k: i64| -> i64 {
        let shift = r_i * (k - g_i + 1);
        debug_assert!(p + shift >= 0 && dim + shift - p >= 0);
        p_over_g
            .min((p + shift) / (k + 1))
            .min((dim + shift - p) / (k + 1))
            .min((dim - p) / g_i)
    };

    let (m_lo, m_hi, sign) = if k < g_i {
        (0, outer_min, -1)
    } else if k < 2 * g_i {
        (-1, inner_min(k) - 1, -1)
    } else if k < 3 * g_i {
        (3, inner_min(k) + 3, 1)
    } else {
        (4, outer_min + 4, 1)
    };
    for m in m_lo..=m_hi {
        out.insert(p + sign * m * g_i);
    }
    Ok(out)
}

/// The degree-`k` boundary weights aggregated over every constituent of
/// `Lambda^p((V^dual)^r)`. Empty for `k` outside `[0, 4g-1]`.
pub fn brute_force_weights(g: usize, r: usize, p: i64, k: i64) -> Result<BTreeSet<i64>, Error> {
    let mut out = BTreeSet::new();
    for lambda in enumerate(&EnumerationSpec::new(g, r, p)).characters {
        for weight in boundary_profile(&lambda)?.weight_set_at(k) {
            out.insert(weight);
        }
    }
    Ok(out)
}

/// Compare closed form and brute force for one `p` across all
/// `k in [0, 4g-1]`, with witness contributions for every discrepancy.
pub fn compare_degree(g: usize, r: usize, p: i64) -> Result<Vec<CellComparison>, Error> {
    let constituents = enumerate(&EnumerationSpec::new(g, r, p)).characters;
    let mut profiles = Vec::with_capacity(constituents.len());
    for lambda in constituents {
        let profile = boundary_profile(&lambda)?;
        profiles.push((lambda, profile));
    }

    let mut cells = Vec::new();
    for k in 0..=(4 * g as i64 - 1) {
        let closed_form = closed_form_weights(g, r, p, k)?;
        let mut brute_force = BTreeSet::new();
        for (_, profile) in &profiles {
            brute_force.extend(profile.weight_set_at(k));
        }

        let mut discrepancies = Vec::new();
        for &weight in brute_force.difference(&closed_form) {
            let mut witnesses = Vec::new();
            for (lambda, profile) in &profiles {
                if let Some(contributions) = profile.witnesses().get(&k) {
                    for c in contributions.iter().filter(|c| c.weight == weight) {
                        witnesses.push(SourcedContribution {
                            lambda: lambda.clone(),
                            contribution: c.clone(),
                        });
                    }
                }
            }
            discrepancies.push(Discrepancy {
                weight,
                in_brute_force: true,
                witnesses,
            });
        }
        for &weight in closed_form.difference(&brute_force) {
            discrepancies.push(Discrepancy {
                weight,
                in_brute_force: false,
                witnesses: Vec::new(),
            });
        }

        let matches = closed_form == brute_force;
        cells.push(CellComparison {
            p,
            k,
            closed_form,
            brute_force,
            matches,
            discrepancies,
        });
    }
    Ok(cells)
}

/// Compare closed form and brute force over `p_range` (default `0..=6rg`)
/// and all `k`, in deterministic `(p, k)` order.
pub fn compare(g: usize, r: usize, p_range: Option<(i64, i64)>) -> Result<ComparisonReport, Error> {
    let (lo, hi) = p_range.unwrap_or((0, 6 * (g as i64) * (r as i64)));
    let mut cells = Vec::new();
    for p in lo..=hi {
        cells.extend(compare_degree(g, r, p)?);
    }
    Ok(ComparisonReport { g, r, cells })
}

/// The mismatching `(p, k)` cells of `report` that the ledger does not
/// acknowledge. Empty means every disagreement is a known one.
pub fn unexplained_mismatches(report: &ComparisonReport, ledger: &[LedgerCell]) -> Vec<(i64, i64)> {
    report
        .mismatching_cells()
        .filter(|cell| {
            !ledger
                .iter()
                .any(|l| l.g == report.g && l.r == report.r && l.p == cell.p && l.k == cell.k)
        })
        .map(|cell| (cell.p, cell.k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::parse_weyl_element;

    fn set(entries: &[i64]) -> BTreeSet<i64> {
        entries.iter().copied().collect()
    }

    #[test]
    fn closed_form_beyond_top_degree_is_empty() {
        assert!(closed_form_weights(1, 1, 7, 0).unwrap().is_empty());
    }

    #[test]
    fn closed_form_row_a_example() {
        assert_eq!(closed_form_weights(2, 1, 2, 0).unwrap(), set(&[0, 2]));
    }

    #[test]
    fn closed_form_special_row_degree_one() {
        assert_eq!(closed_form_weights(2, 1, 1, 1).unwrap(), set(&[1]));
        assert_eq!(closed_form_weights(2, 1, 1, 5).unwrap(), set(&[9]));
        assert!(closed_form_weights(2, 1, 1, 0).unwrap().is_empty());
        assert_eq!(closed_form_weights(2, 1, 11, 2).unwrap(), set(&[11]));
        assert_eq!(closed_form_weights(2, 1, 11, 6).unwrap(), set(&[19]));
    }

    #[test]
    fn closed_form_rejects_bad_degree() {
        assert!(matches!(
            closed_form_weights(1, 1, 2, 4),
            Err(Error::DegreeOutOfRange { k: 4, max: 3 })
        ));
        assert!(matches!(
            closed_form_weights(1, 1, 2, -1),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_rows_a_and_d_are_k_independent() {
        for (g, r) in [(2usize, 1usize), (3, 1), (2, 2)] {
            let g_i = g as i64;
            for p in 0..=(6 * (r as i64) * g_i) {
                if p == 1 || p == 6 * (r as i64) * g_i - 1 {
                    continue;
                }
                let row_a = closed_form_weights(g, r, p, 0).unwrap();
                for k in 1..g_i {
                    assert_eq!(closed_form_weights(g, r, p, k).unwrap(), row_a);
                }
                let row_d = closed_form_weights(g, r, p, 3 * g_i).unwrap();
                for k in 3 * g_i + 1..=4 * g_i - 1 {
                    assert_eq!(closed_form_weights(g, r, p, k).unwrap(), row_d);
                }
            }
        }
    }

    #[test]
    fn brute_force_is_empty_outside_the_degree_window() {
        assert!(brute_force_weights(1, 1, 2, 4).unwrap().is_empty());
        assert!(brute_force_weights(1, 1, 2, -1).unwrap().is_empty());
        assert!(brute_force_weights(2, 1, 2, 8).unwrap().is_empty());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_weights(2, 1, 2, 0).unwrap(), set(&[0, 2]));
        assert!(brute_force_weights(1, 1, 7, 0).unwrap().is_empty());
        assert_eq!(brute_force_weights(2, 1, 1, 4).unwrap(), set(&[7]));
    }

    #[test]
    fn pinned_discrepancy_witness() {
        let cells = compare_degree(2, 1, 1).unwrap();
        let cell = cells.iter().find(|c| c.k == 4).unwrap();
        assert!(!cell.matches);
        assert_eq!(cell.brute_force, set(&[7]));
        assert!(cell.closed_form.is_empty());
        let witness = cell.discrepancies[0]
            .witnesses
            .iter()
            .find(|w| w.contribution.sigma == parse_weyl_element("r132;r123", 2).unwrap())
            .expect("pinned witness");
        assert_eq!(
            witness.lambda,
            TorusCharacter::from_rows(&[(0, 0, -1), (0, 0, 0)], 0)
        );
        assert_eq!(
            witness.contribution.mu,
            TorusCharacter::from_rows(&[(-1, -2, 2), (-2, 1, 1)], 0)
        );
        assert_eq!(witness.contribution.m, -3);
        assert_eq!(witness.contribution.weight, 7);
    }

    #[test]
    fn matching_cells() {
        let report = compare(2, 1, Some((2, 2))).unwrap();
        let cell = report.cells.iter().find(|c| c.k == 0).unwrap();
        assert!(cell.matches);
        assert_eq!(cell.closed_form, set(&[0, 2]));

        let report = compare(1, 1, Some((0, 0))).unwrap();
        let cell = &report.cells[0];
        assert!(cell.matches);
        assert_eq!(cell.brute_force, set(&[0]));
    }

    #[test]
    fn brute_force_weight_congruence() {
        for (g, r) in [(1usize, 1usize), (2, 1)] {
            let g_i = g as i64;
            for p in 0..=(6 * (r as i64) * g_i) {
                for k in 0..=(4 * g_i - 1) {
                    for w in brute_force_weights(g, r, p, k).unwrap() {
                        assert_eq!(
                            (w - p).rem_euclid(g_i),
                            0,
                            "(g,r,p,k,w)=({g},{r},{p},{k},{w})"
                        );
                        let m = (p - w) / g_i;
                        assert!(m >= -1 || -m >= 3, "m = {m}");
                        if k <= 2 * g_i - 1 {
                            assert!(m >= -1);
                        } else {
                            assert!(-m >= 3);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unexplained_mismatch_filtering() {
        let report = compare(1, 1, Some((1, 1))).unwrap();
        let all_mismatches: Vec<(i64, i64)> = unexplained_mismatches(&report, &[]);
        assert!(!all_mismatches.is_empty());
        let ledger: Vec<LedgerCell> = all_mismatches
            .iter()
            .map(|&(p, k)| LedgerCell { g: 1, r: 1, p, k })
            .collect();
        assert!(unexplained_mismatches(&report, &ledger).is_empty());
    }
}
