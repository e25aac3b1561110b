//! Cross-module checks driven through the public API only.

use picard_weights::{
    boundary_profile, classify, closed_form_weights, compare_degree, enumerate, oracle_decompose,
    parse_character, EnumerationSpec, Verdict, DEFAULT_SUBSET_BUDGET,
};

/// Oracle support equals the inequality-system enumeration for every spec
/// with ambient dimension at most 12, exhaustively over p.
#[test]
fn oracle_support_equals_enumeration_up_to_dimension_twelve() {
    for (g, r) in [(1usize, 1usize), (1, 2), (2, 1)] {
        let top = 6 * (g as i64) * (r as i64);
        for p in 0..=top {
            let spec = EnumerationSpec::new(g, r, p);
            let decomposition = oracle_decompose(&spec, DEFAULT_SUBSET_BUDGET).unwrap();
            assert_eq!(
                decomposition.support(),
                enumerate(&spec).characters,
                "(g, r, p) = ({g}, {r}, {p})"
            );
            assert!(decomposition
                .constituents
                .iter()
                .all(|(_, mult)| *mult >= 1));
        }
    }
}

/// Parse -> classify -> profile -> compare, the way the CLI drives it.
#[test]
fn classify_and_profile_round_trip() {
    let lambda = parse_character("1,0,-1;0,0,0|-1", 2).unwrap();
    let classification = classify(&lambda, 1);
    assert_eq!(classification.verdict, Verdict::InteriorMotiveDefined);

    let profile = boundary_profile(&lambda).unwrap();
    let degrees: Vec<i64> = profile.degrees().keys().copied().collect();
    assert_eq!(degrees, [1, 2, 5, 6]);

    // The degree-0 cell of the p=2 comparison sees this character's weight 2.
    let cells = compare_degree(2, 1, 2).unwrap();
    let cell = cells.iter().find(|c| c.k == 0).unwrap();
    assert!(cell.matches);
    assert!(cell.brute_force.contains(&2));
    assert_eq!(cell.closed_form, closed_form_weights(2, 1, 2, 0).unwrap());
}

#[test]
fn boundary_trivial_verdict_matches_empty_profile() {
    let lambda = parse_character("2,0,-2;0,0,0|-2", 2).unwrap();
    assert_eq!(classify(&lambda, 2).verdict, Verdict::BoundaryTrivial);
    assert!(boundary_profile(&lambda).unwrap().is_empty());
}
