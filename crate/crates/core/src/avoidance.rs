//! The interior-motive decision procedure.
//!
//! A dominant constituent character defines a direct factor whose interior
//! motive exists when the boundary profile avoids, at every degree `n`, the
//! two weights `n + p` and `n + p + 1` (`p` the exterior degree). The
//! boundary vanishes outright for characters that are not Kostant-parallel,
//! which makes the avoidance vacuous; the two situations are reported
//! separately because they are established by different criteria.

use crate::boundary::{boundary_profile, Contribution};
use crate::character::TorusCharacter;
use crate::constituents::{is_constituent, EnumerationSpec};
use crate::error::Error;

/// Outcome of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    NotDominant,
    NotConstituent,
    BoundaryTrivial,
    InteriorMotiveDefined,
    WeightObstruction,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::NotDominant => "NotDominant",
            Verdict::NotConstituent => "NotConstituent",
            Verdict::BoundaryTrivial => "BoundaryTrivial",
            Verdict::InteriorMotiveDefined => "InteriorMotiveDefined",
            Verdict::WeightObstruction => "WeightObstruction",
        }
    }
}

/// A verdict plus, for [`Verdict::WeightObstruction`], one contribution
/// realizing a forbidden weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<Contribution>,
}

/// The first contribution (in degree, weight, sigma order) whose weight is
/// forbidden, or `None` when every degree avoids `{n + p, n + p + 1}`.
pub fn weight_obstruction(lambda: &TorusCharacter) -> Result<Option<Contribution>, Error> {
    let p = lambda.degree();
    let profile = boundary_profile(lambda)?;
    for (&n, contributions) in profile.witnesses() {
        for c in contributions {
            if c.weight == n + p || c.weight == n + p + 1 {
                return Ok(Some(c.clone()));
            }
        }
    }
    Ok(None)
}

/// Whether the boundary profile avoids the forbidden weights at every
/// degree.
pub fn avoids_weights(lambda: &TorusCharacter) -> Result<bool, Error> {
    Ok(weight_obstruction(lambda)?.is_none())
}

/// Full decision procedure for `lambda` against `(g, r)`; the constituent
/// test runs at the character's own exterior degree.
pub fn classify(lambda: &TorusCharacter, r: usize) -> Classification {
    if !lambda.is_dominant() {
        return Classification {
            verdict: Verdict::NotDominant,
            witness: None,
        };
    }
    let spec = EnumerationSpec::new(lambda.g(), r, lambda.degree());
    if !is_constituent(lambda, &spec) {
        return Classification {
            verdict: Verdict::NotConstituent,
            witness: None,
        };
    }
    if !lambda.is_kostant_parallel() {
        return Classification {
            verdict: Verdict::BoundaryTrivial,
            witness: None,
        };
    }
    match weight_obstruction(lambda).expect("dominant by the check above") {
        None => Classification {
            verdict: Verdict::InteriorMotiveDefined,
            witness: None,
        },
        Some(witness) => Classification {
            verdict: Verdict::WeightObstruction,
            witness: Some(witness),
        },
    }
}
