//! Boundary cohomology weight profiles.
//!
//! Kostant's formula lists the characters of the unipotent-radical
//! cohomology: degree `q` collects `sigma . lambda` over the length-`q`
//! Weyl elements. A character passes to boundary cohomology only when the
//! rank-(g-1) unit group acts trivially on its line, i.e. when the
//! differences `a_i - c_i` share a common value `m`; it then contributes in
//! degrees `p0 + l(sigma)` for `0 <= p0 <= g-1` with multiplicity
//! `C(g-1, p0)` and Hodge weight `W(sigma . lambda)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::character::TorusCharacter;
use crate::comb::binomial;
use crate::error::Error;
use crate::weyl::{all_elements, WeylElement};

/// One line of boundary cohomology: the Weyl element, the dot-acted
/// character, its triviality constant, and where and with which weight and
/// multiplicity it lands.
///
/// `m` is the common value of `a_i - c_i` over the triples of `mu`, exactly
/// as returned by [`hc_triviality`]. Totally positive contributions satisfy
/// `weight = p - m g`; totally negative ones satisfy `weight = p + (-m) g`
/// (their `m` is never positive on dominant input).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub sigma: WeylElement,
    pub mu: TorusCharacter,
    pub m: i64,
    pub p0: usize,
    pub q0: usize,
    pub degree: i64,
    pub weight: i64,
    pub multiplicity: u64,
}

/// Degree-indexed multiset of Hodge weights, together with the full witness
/// list that produced each degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightProfile {
    degrees: BTreeMap<i64, Vec<(i64, u64)>>,
    witnesses: BTreeMap<i64, Vec<Contribution>>,
}

impl WeightProfile {
    fn from_contributions(mut contributions: Vec<Contribution>) -> Self {
        contributions
            .sort_by(|x, y| (x.degree, x.weight, &x.sigma).cmp(&(y.degree, y.weight, &y.sigma)));
        let mut profile = WeightProfile::default();
        for c in contributions {
            let entry = profile.degrees.entry(c.degree).or_default();
            match entry.iter_mut().find(|(w, _)| *w == c.weight) {
                Some((_, mult)) => *mult += c.multiplicity,
                None => entry.push((c.weight, c.multiplicity)),
            }
            profile.witnesses.entry(c.degree).or_default().push(c);
        }
        profile
    }

    /// No contributing degree at all.
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Weight multiset per degree, sorted by weight within each degree.
    pub fn degrees(&self) -> &BTreeMap<i64, Vec<(i64, u64)>> {
        &self.degrees
    }

    pub fn witnesses(&self) -> &BTreeMap<i64, Vec<Contribution>> {
        &self.witnesses
    }

    /// The distinct weights at one degree.
    pub fn weight_set_at(&self, degree: i64) -> Vec<i64> {
        self.degrees
            .get(&degree)
            .map(|entries| entries.iter().map(|&(w, _)| w).collect())
            .unwrap_or_default()
    }

    /// Every contribution, in (degree, weight, sigma) order.
    pub fn contributions(&self) -> impl Iterator<Item = &Contribution> {
        self.witnesses.values().flatten()
    }

    /// The same profile with every degree shifted by `offset`. Witness
    /// contributions keep their intrinsic `degree = p0 + q0`.
    pub fn shifted(&self, offset: i64) -> Self {
        WeightProfile {
            degrees: self
                .degrees
                .iter()
                .map(|(&n, v)| (n + offset, v.clone()))
                .collect(),
            witnesses: self
                .witnesses
                .iter()
                .map(|(&n, v)| (n + offset, v.clone()))
                .collect(),
        }
    }
}

/// Characters of the degree-`q` unipotent cohomology of the irreducible
/// with dominant highest weight `lambda`: the dot orbit over length-`q`
/// Weyl elements.
pub fn kostant_cohomology(lambda: &TorusCharacter, q: usize) -> Result<Vec<TorusCharacter>, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let mut out = Vec::new();
    for sigma in all_elements(lambda.g())? {
        if sigma.length() == q {
            out.push(sigma.dot_action(lambda)?);
        }
    }
    Ok(out)
}

/// The triviality constant of `mu`: `Some(m)` when every difference
/// `a_i - c_i` equals `m`, `None` otherwise. For `g = 1` this always
/// succeeds (one equation simply defines `m`).
pub fn hc_triviality(mu: &TorusCharacter) -> Option<i64> {
    let m = mu.triples()[0].a - mu.triples()[0].c;
    mu.triples().iter().all(|t| t.a - t.c == m).then_some(m)
}

/// Multiplicity of a one-dimensional module in degree-`p0` group cohomology
/// of the rank-(g-1) unit group: `C(g-1, p0)` when the action is trivial
/// and `p0` is within cohomological dimension, zero otherwise.
pub fn hc_cohomology_multiplicity(g: usize, p0: i64, trivial: bool) -> u64 {
    assert!(g >= 1);
    if !trivial || p0 < 0 || p0 > (g as i64) - 1 {
        return 0;
    }
    binomial((g - 1) as u64, p0 as u64) as u64
}

/// The boundary cohomology weight profile of the local system attached to a
/// dominant `lambda`.
///
/// Every Weyl element whose dot-acted character passes [`hc_triviality`]
/// contributes at degrees `p0 + l(sigma)` for `0 <= p0 <= g-1`. The profile
/// is empty exactly when `lambda` is not Kostant-parallel.
pub fn boundary_profile(lambda: &TorusCharacter) -> Result<WeightProfile, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let g = lambda.g();
    let mut contributions = Vec::new();
    for sigma in all_elements(g)? {
        let mu = sigma.dot_action(lambda)?;
        let Some(m) = hc_triviality(&mu) else {
            continue;
        };
        let q0 = sigma.length();
        let weight = mu.hodge_weight();
        for p0 in 0..g {
            contributions.push(Contribution {
                sigma: sigma.clone(),
                mu: mu.clone(),
                m,
                p0,
                q0,
                degree: (p0 + q0) as i64,
                weight,
                multiplicity: hc_cohomology_multiplicity(g, p0 as i64, true),
            });
        }
    }
    Ok(WeightProfile::from_contributions(contributions))
}

/// The profile of the ambient family in its own degrees: the boundary
/// profile shifted up by the exterior degree `p` of `lambda`.
pub fn kuga_sato_profile(lambda: &TorusCharacter) -> Result<WeightProfile, Error> {
    Ok(boundary_profile(lambda)?.shifted(lambda.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::parse_character;
    use crate::weyl::Positivity;
    use proptest::prelude::*;

    fn ch(rows: &[(i64, i64, i64)], d: i64) -> TorusCharacter {
        TorusCharacter::from_rows(rows, d)
    }

    #[test]
    fn kostant_top_degree_of_trivial_weight() {
        let classes = kostant_cohomology(&ch(&[(0, 0, 0)], 0), 3).unwrap();
        assert_eq!(classes, [ch(&[(-2, 0, 2)], 0)]);
    }

    #[test]
    fn kostant_identity_row() {
        let lambda = ch(&[(1, 0, -1)], -1);
        assert_eq!(kostant_cohomology(&lambda, 0).unwrap(), [lambda]);
    }

    #[test]
    fn kostant_degree_one_g2() {
        let lambda = ch(&[(1, 0, -1), (0, 0, 0)], -1);
        let classes = kostant_cohomology(&lambda, 1).unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.contains(&ch(&[(-1, 2, -1), (0, 0, 0)], -1)));
    }

    #[test]
    fn kostant_rejects_non_dominant() {
        assert_eq!(
            kostant_cohomology(&ch(&[(0, 1, 0)], 0), 0),
            Err(Error::NotDominant)
        );
    }

    #[test]
    fn kostant_counts_match_length_counts() {
        for g in 1..=3usize {
            let lambda = TorusCharacter::zero(g);
            let counts = crate::weyl::length_counts(g);
            for q in 0..=3 * g {
                assert_eq!(
                    kostant_cohomology(&lambda, q).unwrap().len() as u64,
                    counts[q]
                );
            }
        }
    }

    #[test]
    fn triviality_examples() {
        assert_eq!(hc_triviality(&ch(&[(0, 0, 0), (0, 0, 0)], 0)), Some(0));
        assert_eq!(hc_triviality(&ch(&[(1, 0, -1), (0, 0, 0)], -1)), None);
        assert_eq!(hc_triviality(&ch(&[(-1, 2, -1), (0, 0, 0)], -1)), Some(0));
        assert_eq!(hc_triviality(&ch(&[(5, 0, 2)], 9)), Some(3));
    }

    #[test]
    fn cohomology_multiplicity_examples() {
        assert_eq!(hc_cohomology_multiplicity(3, 1, true), 2);
        assert_eq!(hc_cohomology_multiplicity(2, 0, false), 0);
        assert_eq!(hc_cohomology_multiplicity(1, 0, true), 1);
        assert_eq!(hc_cohomology_multiplicity(2, 2, true), 0);
        assert_eq!(hc_cohomology_multiplicity(2, -1, true), 0);
    }

    #[test]
    fn golden_profile_g2() {
        let lambda = parse_character("1,0,-1;0,0,0|-1", 2).unwrap();
        let profile = boundary_profile(&lambda).unwrap();
        for empty in [0, 3, 4, 7] {
            assert!(profile.weight_set_at(empty).is_empty(), "degree {empty}");
        }
        for (degree, weight) in [(1, 2), (2, 2), (5, 10), (6, 10)] {
            assert_eq!(profile.weight_set_at(degree), [weight], "degree {degree}");
        }
    }

    #[test]
    fn profile_empty_without_kostant_parallelism() {
        let lambda = ch(&[(2, 0, -2), (0, 0, 0)], -2);
        assert!(boundary_profile(&lambda).unwrap().is_empty());
    }

    #[test]
    fn profile_g1_regular() {
        let lambda = ch(&[(1, 0, -1)], -1);
        let profile = boundary_profile(&lambda).unwrap();
        assert_eq!(profile.degrees().len(), 4);
        assert_eq!(profile.degrees()[&0], [(0, 1)]);
        assert_eq!(profile.degrees()[&1], [(2, 2)]);
        assert_eq!(profile.degrees()[&2], [(6, 2)]);
        assert_eq!(profile.degrees()[&3], [(8, 1)]);
    }

    #[test]
    fn kuga_sato_shifts_by_exterior_degree() {
        let lambda = parse_character("1,0,-1;0,0,0|-1", 2).unwrap();
        let shifted = kuga_sato_profile(&lambda).unwrap();
        for (degree, weight) in [(3, 2), (4, 2), (7, 10), (8, 10)] {
            assert_eq!(shifted.weight_set_at(degree), [weight]);
        }
        for empty in [1, 2, 5, 6] {
            assert!(shifted.weight_set_at(empty).is_empty());
        }

        let trivial = ch(&[(0, 0, 0)], 0);
        assert_eq!(
            kuga_sato_profile(&trivial).unwrap(),
            boundary_profile(&trivial).unwrap()
        );

        let barren = ch(&[(2, 0, -2), (0, 0, 0)], -2);
        assert!(kuga_sato_profile(&barren).unwrap().is_empty());
    }

    fn arb_dominant(g: usize) -> impl Strategy<Value = TorusCharacter> {
        (
            proptest::collection::vec((-5i64..=5, -5i64..=5, -5i64..=5), g),
            -8i64..=8,
        )
            .prop_map(|(rows, d)| {
                let rows: Vec<(i64, i64, i64)> = rows
                    .into_iter()
                    .map(|(x, y, z)| {
                        let mut v = [x, y, z];
                        v.sort_unstable();
                        (v[2], v[1], v[0])
                    })
                    .collect();
                TorusCharacter::from_rows(&rows, d)
            })
    }

    proptest! {
        #[test]
        fn profile_empty_iff_not_kostant_parallel(
            lambda in (1usize..=2).prop_flat_map(arb_dominant)
        ) {
            let profile = boundary_profile(&lambda).unwrap();
            prop_assert_eq!(profile.is_empty(), !lambda.is_kostant_parallel());
        }

        #[test]
        fn contributions_satisfy_weight_identity(
            lambda in (1usize..=2).prop_flat_map(arb_dominant)
        ) {
            let p = lambda.degree();
            let g = lambda.g() as i64;
            let profile = boundary_profile(&lambda).unwrap();
            for c in profile.contributions() {
                prop_assert_eq!(c.weight, p - c.m * g);
                prop_assert_eq!(c.degree, (c.p0 + c.q0) as i64);
                prop_assert_eq!(c.q0, c.sigma.length());
                prop_assert_eq!(c.multiplicity, hc_cohomology_multiplicity(lambda.g(), c.p0 as i64, true));
            }
        }

        #[test]
        fn degree_support_by_classification(
            lambda in (1usize..=2).prop_flat_map(arb_dominant)
        ) {
            let g = lambda.g() as i64;
            let profile = boundary_profile(&lambda).unwrap();
            for c in profile.contributions() {
                match c.sigma.classify() {
                    Positivity::TotallyPositive => prop_assert!((0..=2 * g - 1).contains(&c.degree)),
                    Positivity::TotallyNegative => prop_assert!((2 * g..=4 * g - 1).contains(&c.degree)),
                    Positivity::Mixed => {}
                }
            }
        }
    }

    #[test]
    fn contribution_counts_match_formula() {
        let lambda = parse_character("1,0,-1;0,0,0|-1", 2).unwrap();
        let profile = boundary_profile(&lambda).unwrap();
        let g = lambda.g();
        let trivial_by_length: Vec<u64> = {
            let mut counts = alloc::vec![0u64; 3 * g + 1];
            for sigma in all_elements(g).unwrap() {
                let mu = sigma.dot_action(&lambda).unwrap();
                if hc_triviality(&mu).is_some() {
                    counts[sigma.length()] += 1;
                }
            }
            counts
        };
        for n in 0..=(4 * g - 1) as i64 {
            let total: u64 = profile
                .degrees()
                .get(&n)
                .map(|v| v.iter().map(|&(_, m)| m).sum())
                .unwrap_or(0);
            let mut expected = 0u64;
            for p0 in 0..g {
                let q0 = n - p0 as i64;
                if (0..=(3 * g) as i64).contains(&q0) {
                    expected += hc_cohomology_multiplicity(g, p0 as i64, true)
                        * trivial_by_length[q0 as usize];
                }
            }
            assert_eq!(total, expected, "degree {n}");
        }
    }
}
