//! Serializable views of the core types and the JSON/TSV renderers.
//!
//! JSON is the authoritative format; TSV is a lossy convenience (no
//! witnesses). Output is byte-deterministic for fixed inputs: field order is
//! fixed by the struct declarations, every map is ordered, and nothing
//! depends on wall time or thread count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use picard_weights::{CellComparison, Classification, Contribution, Discrepancy, WeightProfile};
use serde::Serialize;

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    text
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstituentOut {
    pub character: String,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionOut {
    pub g: usize,
    pub r: usize,
    pub p: i64,
    pub constituents: Vec<ConstituentOut>,
}

impl DecompositionOut {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("character\tmultiplicity\n");
        for c in &self.constituents {
            let _ = writeln!(out, "{}\t{}", c.character, c.multiplicity);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContributionOut {
    pub sigma: String,
    pub mu: String,
    pub m: i64,
    pub p0: usize,
    pub q0: usize,
    pub degree: i64,
    pub weight: i64,
    pub multiplicity: u64,
}

impl From<&Contribution> for ContributionOut {
    fn from(c: &Contribution) -> Self {
        ContributionOut {
            sigma: c.sigma.to_string(),
            mu: c.mu.to_string(),
            m: c.m,
            p0: c.p0,
            q0: c.q0,
            degree: c.degree,
            weight: c.weight,
            multiplicity: c.multiplicity,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightOut {
    pub weight: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileOut {
    pub lambda: String,
    pub g: usize,
    pub p: i64,
    pub degrees: BTreeMap<i64, Vec<WeightOut>>,
    pub witnesses: BTreeMap<i64, Vec<ContributionOut>>,
}

impl ProfileOut {
    pub fn new(lambda: &picard_weights::TorusCharacter, profile: &WeightProfile) -> Self {
        ProfileOut {
            lambda: lambda.to_string(),
            g: lambda.g(),
            p: lambda.degree(),
            degrees: profile
                .degrees()
                .iter()
                .map(|(&n, entries)| {
                    let row = entries
                        .iter()
                        .map(|&(weight, multiplicity)| WeightOut {
                            weight,
                            multiplicity,
                        })
                        .collect();
                    (n, row)
                })
                .collect(),
            witnesses: profile
                .witnesses()
                .iter()
                .map(|(&n, list)| (n, list.iter().map(ContributionOut::from).collect()))
                .collect(),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\tweight\tmultiplicity\n");
        for (degree, entries) in &self.degrees {
            for w in entries {
                let _ = writeln!(out, "{degree}\t{}\t{}", w.weight, w.multiplicity);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KostantOut {
    pub lambda: String,
    pub g: usize,
    pub degrees: BTreeMap<usize, Vec<String>>,
}

impl KostantOut {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("q\tcharacter\n");
        for (q, classes) in &self.degrees {
            for c in classes {
                let _ = writeln!(out, "{q}\t{c}");
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyOut {
    pub lambda: String,
    pub g: usize,
    pub r: usize,
    pub p: i64,
    pub verdict: &'static str,
    pub witness: Option<ContributionOut>,
}

impl ClassifyOut {
    pub fn new(
        lambda: &picard_weights::TorusCharacter,
        r: usize,
        classification: &Classification,
    ) -> Self {
        ClassifyOut {
            lambda: lambda.to_string(),
            g: lambda.g(),
            r,
            p: lambda.degree(),
            verdict: classification.verdict.name(),
            witness: classification.witness.as_ref().map(ContributionOut::from),
        }
    }

    pub fn to_tsv(&self) -> String {
        let witness = match &self.witness {
            None => "-".to_string(),
            Some(w) => format!(
                "sigma={};mu={};degree={};weight={}",
                w.sigma, w.mu, w.degree, w.weight
            ),
        };
        format!(
            "lambda\tverdict\twitness\n{}\t{}\t{}\n",
            self.lambda, self.verdict, witness
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SourcedContributionOut {
    pub lambda: String,
    #[serde(flatten)]
    pub contribution: ContributionOut,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyOut {
    pub weight: i64,
    pub in_brute_force: bool,
    pub witnesses: Vec<SourcedContributionOut>,
}

impl From<&Discrepancy> for DiscrepancyOut {
    fn from(d: &Discrepancy) -> Self {
        DiscrepancyOut {
            weight: d.weight,
            in_brute_force: d.in_brute_force,
            witnesses: d
                .witnesses
                .iter()
                .map(|w| SourcedContributionOut {
                    lambda: w.lambda.to_string(),
                    contribution: ContributionOut::from(&w.contribution),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellOut {
    pub k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<Vec<i64>>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancies: Option<Vec<DiscrepancyOut>>,
}

impl CellOut {
    pub fn both(cell: &CellComparison) -> Self {
        CellOut {
            k: cell.k,
            closed_form: Some(cell.closed_form.iter().copied().collect()),
            brute_force: Some(cell.brute_force.iter().copied().collect()),
            matches: Some(cell.matches),
            discrepancies: Some(
                cell.discrepancies
                    .iter()
                    .map(DiscrepancyOut::from)
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerationRowOut {
    pub p: i64,
    pub cells: Vec<CellOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerationOut {
    pub g: usize,
    pub r: usize,
    pub rows: Vec<DegenerationRowOut>,
}

impl DegenerationOut {
    /// Matrix form: one row per exterior degree p, one column per boundary
    /// degree k; cells are comma-joined sorted weight lists, suffixed with
    /// `!` when the cell mismatches. With a single source there is no
    /// comparison, hence no `!` markers.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("p");
        if let Some(first) = self.rows.first() {
            for cell in &first.cells {
                let _ = write!(out, "\tk={}", cell.k);
            }
        }
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{}", row.p);
            for cell in &row.cells {
                let weights = cell
                    .brute_force
                    .as_ref()
                    .or(cell.closed_form.as_ref())
                    .expect("at least one source");
                let joined = weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let marker = match cell.matches {
                    Some(false) => "!",
                    _ => "",
                };
                let _ = write!(out, "\t{joined}{marker}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CriterionOut {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SuiteOut {
    pub suite: String,
    pub passed: bool,
    pub criteria: Vec<CriterionOut>,
}

impl SuiteOut {
    pub fn new(suite: &str, criteria: Vec<CriterionOut>) -> Self {
        SuiteOut {
            suite: suite.to_string(),
            passed: criteria.iter().all(|c| c.passed),
            criteria,
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("criterion\tstatus\n");
        for c in &self.criteria {
            let _ = writeln!(out, "{}\t{}", c.id, if c.passed { "pass" } else { "FAIL" });
        }
        let _ = writeln!(
            out,
            "suite:{}\t{}",
            self.suite,
            if self.passed { "pass" } else { "FAIL" }
        );
        out
    }
}
