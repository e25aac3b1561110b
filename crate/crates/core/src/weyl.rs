//! The Weyl group `S_3^g`: lengths, positivity classification, and the
//! rho-shifted dot action.
//!
//! Elements are `g`-tuples of `S_3` factors. The dot action
//! `sigma . lambda = sigma(lambda + rho) - rho` (with `rho_i = (1, 0, -1)`,
//! `d` untouched) is implemented from the six closed-form rows; a generic
//! permute-and-shift implementation doubles as a test oracle against
//! transcription slips.

use alloc::vec::Vec;
use core::fmt;

use crate::character::{TorusCharacter, Triple};
use crate::error::Error;

/// Hard ceiling for [`all_elements`]: `6^12` is already past desk scale.
pub const MAX_ENUMERATION_G: usize = 12;

/// One `S_3` factor, named by cycle notation on `{1,2,3}`.
///
/// The declaration order is the canonical factor order used for
/// lexicographic enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Id,
    S12,
    S23,
    R123,
    R132,
    S13,
}

impl Factor {
    pub const ALL: [Factor; 6] = [
        Factor::Id,
        Factor::S12,
        Factor::S23,
        Factor::R123,
        Factor::R132,
        Factor::S13,
    ];

    /// Coxeter length: 0, 1, 1, 2, 2, 3.
    pub fn length(self) -> usize {
        match self {
            Factor::Id => 0,
            Factor::S12 | Factor::S23 => 1,
            Factor::R123 | Factor::R132 => 2,
            Factor::S13 => 3,
        }
    }

    /// The dot action on one block, row by row:
    ///
    /// ```text
    /// id   : (a, b, c)
    /// s12  : (b-1, a+1, c)
    /// s23  : (a, c-1, b+1)
    /// r123 : (c-2, a+1, b+1)
    /// r132 : (b-1, c-1, a+2)
    /// s13  : (c-2, b, a+2)
    /// ```
    pub fn apply(self, t: Triple) -> Triple {
        let Triple { a, b, c } = t;
        match self {
            Factor::Id => Triple::new(a, b, c),
            Factor::S12 => Triple::new(b - 1, a + 1, c),
            Factor::S23 => Triple::new(a, c - 1, b + 1),
            Factor::R123 => Triple::new(c - 2, a + 1, b + 1),
            Factor::R132 => Triple::new(b - 1, c - 1, a + 2),
            Factor::S13 => Triple::new(c - 2, b, a + 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Factor::Id => "e",
            Factor::S12 => "s12",
            Factor::S23 => "s23",
            Factor::R123 => "r123",
            Factor::R132 => "r132",
            Factor::S13 => "s13",
        }
    }

    fn from_name(name: &str) -> Option<Factor> {
        Some(match name {
            "e" => Factor::Id,
            "s12" => Factor::S12,
            "s23" => Factor::S23,
            "r123" => Factor::R123,
            "r132" => Factor::R132,
            "s13" => Factor::S13,
            _ => return None,
        })
    }

    /// Generic form of the dot action: permute `t + rho`, subtract `rho`.
    /// Used as an independent check of [`Factor::apply`].
    #[cfg(test)]
    fn rho_shift(self, t: Triple) -> Triple {
        let shifted = [t.a + 1, t.b, t.c - 1];
        let permuted = match self {
            Factor::Id => [shifted[0], shifted[1], shifted[2]],
            Factor::S12 => [shifted[1], shifted[0], shifted[2]],
            Factor::S23 => [shifted[0], shifted[2], shifted[1]],
            Factor::R123 => [shifted[2], shifted[0], shifted[1]],
            Factor::R132 => [shifted[1], shifted[2], shifted[0]],
            Factor::S13 => [shifted[2], shifted[1], shifted[0]],
        };
        Triple::new(permuted[0] - 1, permuted[1], permuted[2] + 1)
    }
}

/// Positivity classification of a Weyl element.
///
/// A factor is positive when its length is at most 1 and negative
/// otherwise; an element is totally positive (negative) when every factor
/// is, and mixed when both kinds occur. Mixed elements never pass the
/// unit-group triviality gate on constituents, so they contribute nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Positivity {
    TotallyPositive,
    TotallyNegative,
    Mixed,
}

impl Positivity {
    pub fn name(self) -> &'static str {
        match self {
            Positivity::TotallyPositive => "TotallyPositive",
            Positivity::TotallyNegative => "TotallyNegative",
            Positivity::Mixed => "Mixed",
        }
    }
}

/// An element of `S_3^g` as its factor tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    factors: Vec<Factor>,
}

impl WeylElement {
    pub fn new(factors: Vec<Factor>) -> Self {
        assert!(
            !factors.is_empty(),
            "a Weyl element needs at least one factor"
        );
        WeylElement { factors }
    }

    pub fn identity(g: usize) -> Self {
        assert!(g >= 1);
        WeylElement {
            factors: alloc::vec![Factor::Id; g],
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn g(&self) -> usize {
        self.factors.len()
    }

    /// Sum of the factor lengths.
    pub fn length(&self) -> usize {
        self.factors.iter().map(|f| f.length()).sum()
    }

    pub fn classify(&self) -> Positivity {
        let any_positive = self.factors.iter().any(|f| f.length() <= 1);
        let any_negative = self.factors.iter().any(|f| f.length() >= 2);
        match (any_positive, any_negative) {
            (true, false) => Positivity::TotallyPositive,
            (false, true) => Positivity::TotallyNegative,
            _ => Positivity::Mixed,
        }
    }

    /// Apply the dot action blockwise; `d` is preserved.
    pub fn dot_action(&self, lambda: &TorusCharacter) -> Result<TorusCharacter, Error> {
        if self.g() != lambda.g() {
            return Err(Error::FactorMismatch {
                sigma_g: self.g(),
                lambda_g: lambda.g(),
            });
        }
        let triples = self
            .factors
            .iter()
            .zip(lambda.triples())
            .map(|(f, &t)| f.apply(t))
            .collect();
        Ok(TorusCharacter::new(triples, lambda.d()))
    }

    #[cfg(test)]
    fn dot_action_via_rho_shift(&self, lambda: &TorusCharacter) -> TorusCharacter {
        let triples = self
            .factors
            .iter()
            .zip(lambda.triples())
            .map(|(f, &t)| f.rho_shift(t))
            .collect();
        TorusCharacter::new(triples, lambda.d())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            f.write_str(factor.name())?;
        }
        Ok(())
    }
}

/// Parse the text form `name;name;...` with names from
/// `{e, s12, s23, r123, r132, s13}`, requiring exactly `g` factors.
pub fn parse_weyl_element(text: &str, g: usize) -> Result<WeylElement, Error> {
    let mut factors = Vec::new();
    let mut offset = 0usize;
    for chunk in text.split(';') {
        let name = chunk.trim();
        let factor = Factor::from_name(name).ok_or(Error::Parse {
            offset: offset + (chunk.len() - chunk.trim_start().len()),
            message: "unknown factor name",
        })?;
        factors.push(factor);
        offset += chunk.len() + 1;
    }
    if factors.len() != g {
        return Err(Error::WrongArity {
            expected: g,
            found: factors.len(),
        });
    }
    Ok(WeylElement::new(factors))
}

/// All `6^g` elements in lexicographic factor order.
///
/// Refuses `g > 12`; practical sweeps use `g <= 4`.
pub fn all_elements(g: usize) -> Result<Vec<WeylElement>, Error> {
    assert!(g >= 1);
    if g > MAX_ENUMERATION_G {
        return Err(Error::EnumerationBudget {
            g,
            max_g: MAX_ENUMERATION_G,
        });
    }
    let mut out = Vec::new();
    let mut odometer = alloc::vec![0usize; g];
    loop {
        out.push(WeylElement::new(
            odometer.iter().map(|&i| Factor::ALL[i]).collect(),
        ));
        let mut pos = g;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < 6 {
                break;
            }
            odometer[pos] = 0;
        }
    }
}

/// Number of elements of each length, indexed `0..=3g`: the coefficients of
/// `(1 + 2t + 2t^2 + t^3)^g`. The entries sum to `6^g`.
pub fn length_counts(g: usize) -> Vec<u64> {
    assert!(g >= 1);
    let block = [1u64, 2, 2, 1];
    let mut coeffs = alloc::vec![1u64];
    for _ in 0..g {
        let mut next = alloc::vec![0u64; coeffs.len() + 3];
        for (i, &x) in coeffs.iter().enumerate() {
            for (j, &y) in block.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(factors: &[Factor]) -> WeylElement {
        WeylElement::new(factors.to_vec())
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(all_elements(1).unwrap().len(), 6);
        assert_eq!(all_elements(2).unwrap().len(), 36);
        assert!(matches!(
            all_elements(13),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let elements = all_elements(2).unwrap();
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(elements, sorted);
        assert_eq!(elements[0], WeylElement::identity(2));
    }

    #[test]
    fn lengths() {
        assert_eq!(w(&[Factor::Id]).length(), 0);
        assert_eq!(w(&[Factor::S13]).length(), 3);
        assert_eq!(w(&[Factor::S12, Factor::R123]).length(), 3);
    }

    #[test]
    fn classification() {
        assert_eq!(
            w(&[Factor::Id, Factor::S23]).classify(),
            Positivity::TotallyPositive
        );
        assert_eq!(
            w(&[Factor::R123, Factor::S13]).classify(),
            Positivity::TotallyNegative
        );
        assert_eq!(
            w(&[Factor::S12, Factor::R123]).classify(),
            Positivity::Mixed
        );
    }

    #[test]
    fn dot_action_rows() {
        let lambda = TorusCharacter::from_rows(&[(1, 0, -1)], -1);
        assert_eq!(w(&[Factor::Id]).dot_action(&lambda).unwrap(), lambda);
        assert_eq!(
            w(&[Factor::S13]).dot_action(&lambda).unwrap(),
            TorusCharacter::from_rows(&[(-3, 0, 3)], -1)
        );

        let lambda2 = TorusCharacter::from_rows(&[(1, 0, -1), (0, 0, 0)], -1);
        assert_eq!(
            w(&[Factor::R123, Factor::S13])
                .dot_action(&lambda2)
                .unwrap(),
            TorusCharacter::from_rows(&[(-3, 2, 1), (-2, 0, 2)], -1)
        );
    }

    #[test]
    fn dot_action_rejects_mismatched_g() {
        let lambda = TorusCharacter::from_rows(&[(1, 0, -1)], -1);
        let err = w(&[Factor::Id, Factor::Id])
            .dot_action(&lambda)
            .unwrap_err();
        assert_eq!(
            err,
            Error::FactorMismatch {
                sigma_g: 2,
                lambda_g: 1
            }
        );
    }

    #[test]
    fn length_count_values() {
        assert_eq!(length_counts(1), [1, 2, 2, 1]);
        assert_eq!(length_counts(2), [1, 4, 8, 10, 8, 4, 1]);
    }

    #[test]
    fn length_counts_match_enumeration() {
        for g in 1..=3 {
            let mut histogram = alloc::vec![0u64; 3 * g + 1];
            for sigma in all_elements(g).unwrap() {
                histogram[sigma.length()] += 1;
            }
            assert_eq!(histogram, length_counts(g));
            assert_eq!(histogram.iter().sum::<u64>(), 6u64.pow(g as u32));
        }
    }

    #[test]
    fn parse_and_display() {
        let sigma = parse_weyl_element("r123;s13", 2).unwrap();
        assert_eq!(sigma, w(&[Factor::R123, Factor::S13]));
        assert_eq!(sigma.to_string(), "r123;s13");
        assert!(matches!(
            parse_weyl_element("bogus", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_weyl_element("e;e", 1),
            Err(Error::WrongArity { .. })
        ));
    }

    proptest! {
        #[test]
        fn table_matches_rho_shift(
            rows in proptest::collection::vec((-6i64..=6, -6i64..=6, -6i64..=6), 1..=3),
            d in -9i64..=9,
            seed in 0usize..1296,
        ) {
            let g = rows.len();
            let lambda = TorusCharacter::from_rows(&rows, d);
            let mut idx = seed;
            let factors: Vec<Factor> = (0..g)
                .map(|_| {
                    let f = Factor::ALL[idx % 6];
                    idx /= 6;
                    f
                })
                .collect();
            let sigma = WeylElement::new(factors);
            prop_assert_eq!(
                sigma.dot_action(&lambda).unwrap(),
                sigma.dot_action_via_rho_shift(&lambda)
            );
        }

        #[test]
        fn dot_action_preserves_d_and_degree(
            rows in proptest::collection::vec((-6i64..=6, -6i64..=6, -6i64..=6), 2),
            d in -9i64..=9,
            which in 0usize..36,
        ) {
            let lambda = TorusCharacter::from_rows(&rows, d);
            let sigma = &all_elements(2).unwrap()[which];
            let mu = sigma.dot_action(&lambda).unwrap();
            prop_assert_eq!(mu.d(), lambda.d());
            prop_assert_eq!(mu.degree(), lambda.degree());
        }
    }

    #[test]
    fn orbit_of_dominant_character_is_free() {
        for lambda in [
            TorusCharacter::from_rows(&[(1, 0, -1), (0, 0, 0)], -1),
            TorusCharacter::from_rows(&[(0, 0, 0), (0, 0, 0)], 0),
            TorusCharacter::from_rows(&[(3, 1, 0), (2, 2, -2)], 4),
        ] {
            let orbit: BTreeSet<TorusCharacter> = all_elements(2)
                .unwrap()
                .iter()
                .map(|sigma| sigma.dot_action(&lambda).unwrap())
                .collect();
            assert_eq!(orbit.len(), 36);
        }
    }
}
