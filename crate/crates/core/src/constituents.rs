//! Constituents of exterior powers of the dual standard representation.
//!
//! Two independent routes compute the same answer. [`enumerate`] walks the
//! closed inequality system for the dominant highest weights of
//! `Lambda^p((V^dual)^r)`; [`oracle_decompose`] rebuilds the full weight
//! multiset from the `6gr` basis characters and peels off irreducibles one
//! highest weight at a time, which also recovers multiplicities. Their
//! supports must agree, and the test suites hold them to that.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::character::{TorusCharacter, Triple};
use crate::comb::binomial;
use crate::error::Error;

/// Default ceiling on `binomial(6gr, p)` for the peeling oracle.
pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

/// The `(g, r, p)` triple naming one exterior-power decomposition problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumerationSpec {
    pub g: usize,
    pub r: usize,
    pub p: i64,
}

impl EnumerationSpec {
    pub fn new(g: usize, r: usize, p: i64) -> Self {
        assert!(g >= 1 && r >= 1);
        EnumerationSpec { g, r, p }
    }

    /// Dimension `6gr` of `(V^dual)^r` over the complex numbers.
    pub fn ambient_dimension(&self) -> i64 {
        6 * (self.g as i64) * (self.r as i64)
    }
}

/// The dominant highest weights of the constituents, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentSet {
    pub spec: EnumerationSpec,
    pub characters: Vec<TorusCharacter>,
}

/// Highest weights with multiplicities, as recovered by the peeling oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: EnumerationSpec,
    pub constituents: Vec<(TorusCharacter, u64)>,
}

impl Decomposition {
    /// The underlying set of highest weights, canonically ordered.
    pub fn support(&self) -> Vec<TorusCharacter> {
        self.constituents.iter().map(|(c, _)| c.clone()).collect()
    }
}

/// Membership test for the constituent inequality system:
/// the degree matches `p`, every triple sits dominantly inside the box
/// `[-r, r]`, and the similitude coordinate obeys
/// `3gr + sum min(x,0) >= -d >= sum max(x,0)` over all coordinates.
pub fn is_constituent(lambda: &TorusCharacter, spec: &EnumerationSpec) -> bool {
    assert_eq!(lambda.g(), spec.g, "character and spec disagree on g");
    let r = spec.r as i64;
    if lambda.degree() != spec.p {
        return false;
    }
    for t in lambda.triples() {
        if !(-r <= t.c && t.c <= t.b && t.b <= t.a && t.a <= r) {
            return false;
        }
    }
    let (mut pos, mut neg) = (0i64, 0i64);
    for t in lambda.triples() {
        for x in [t.a, t.b, t.c] {
            pos += x.max(0);
            neg += x.min(0);
        }
    }
    let bound = 3 * (spec.g as i64) * r;
    bound + neg >= -lambda.d() && -lambda.d() >= pos
}

fn dominant_box_triples(r: i64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=a {
            for c in -r..=b {
                out.push(Triple::new(a, b, c));
            }
        }
    }
    out.sort_unstable();
    out
}

/// All dominant constituent highest weights of `Lambda^p((V^dual)^r)`,
/// canonically ordered. Empty when `p < 0` or `p > 6gr`.
///
/// For fixed triples the degree equation pins `d`, so the walk is a plain
/// odometer over the dominant box with a parity filter.
pub fn enumerate(spec: &EnumerationSpec) -> ConstituentSet {
    let g = spec.g;
    let box_triples = dominant_box_triples(spec.r as i64);
    let mut characters = Vec::new();
    if spec.p >= 0 && spec.p <= spec.ambient_dimension() {
        let mut idx = alloc::vec![0usize; g];
        'outer: loop {
            let triples: Vec<Triple> = idx.iter().map(|&i| box_triples[i]).collect();
            let s: i64 = triples.iter().map(Triple::sum).sum();
            if (spec.p + s) % 2 == 0 {
                let d = -(spec.p + s) / 2;
                let candidate = TorusCharacter::new(triples, d);
                if is_constituent(&candidate, spec) {
                    characters.push(candidate);
                }
            }
            let mut pos = g;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < box_triples.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    characters.sort_unstable();
    ConstituentSet {
        spec: *spec,
        characters,
    }
}

/// Multiplicity of the weight `w` in the irreducible `GL(3)` representation
/// of highest weight `high`, by counting Gelfand-Tsetlin interlacing pairs:
/// `(u, v)` with `a >= u >= b >= v >= c`, `u >= w1 >= v`, `u + v = w1 + w2`,
/// and total coordinate sum conserved.
pub fn gl3_weight_multiplicity(high: Triple, w: Triple) -> Result<u64, Error> {
    if !high.is_dominant() {
        return Err(Error::NotDominant);
    }
    if high.sum() != w.sum() {
        return Ok(0);
    }
    let mut count = 0u64;
    for u in high.b..=high.a {
        for v in high.c..=high.b {
            if u >= w.a && w.a >= v && u + v == w.a + w.b {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Dimension of the irreducible `GL(3)` representation of highest weight
/// `high = (a, b, c)`: `(a-b+1)(b-c+1)(a-c+2)/2`.
pub fn gl3_dimension(high: Triple) -> Result<u64, Error> {
    if !high.is_dominant() {
        return Err(Error::NotDominant);
    }
    let (a, b, c) = (high.a, high.b, high.c);
    Ok((((a - b + 1) * (b - c + 1) * (a - c + 2)) / 2) as u64)
}

/// The weight map of the irreducible with highest weight `high`, as
/// weight -> multiplicity.
fn gl3_weight_map(high: Triple) -> BTreeMap<Triple, u64> {
    debug_assert!(high.is_dominant());
    let mut map = BTreeMap::new();
    let total = high.sum();
    for u in high.b..=high.a {
        for v in high.c..=high.b {
            for w1 in v..=u {
                let w = Triple::new(w1, u + v - w1, total - u - v);
                *map.entry(w).or_insert(0) += 1;
            }
        }
    }
    map
}

/// The `6g` torus characters of the basis of `V^dual`: per index, the three
/// weights `(0,..,-1-slot..,0 | d=0)` of the plus block and the three
/// weights `(0,..,+1-slot..,0 | d=-1)` of the minus block.
fn basis_weights(g: usize) -> Vec<TorusCharacter> {
    let mut out = Vec::with_capacity(6 * g);
    for i in 0..g {
        for slot in 0..3 {
            let mut rows = alloc::vec![(0i64, 0i64, 0i64); g];
            match slot {
                0 => rows[i].0 = -1,
                1 => rows[i].1 = -1,
                _ => rows[i].2 = -1,
            }
            out.push(TorusCharacter::from_rows(&rows, 0));
        }
        for slot in 0..3 {
            let mut rows = alloc::vec![(0i64, 0i64, 0i64); g];
            match slot {
                0 => rows[i].0 = 1,
                1 => rows[i].1 = 1,
                _ => rows[i].2 = 1,
            }
            out.push(TorusCharacter::from_rows(&rows, -1));
        }
    }
    out
}

fn flatten(ch: &TorusCharacter) -> Vec<i64> {
    let mut v = Vec::with_capacity(3 * ch.g() + 1);
    for t in ch.triples() {
        v.extend_from_slice(&[t.a, t.b, t.c]);
    }
    v.push(ch.d());
    v
}

fn unflatten(coords: &[i64]) -> TorusCharacter {
    let g = (coords.len() - 1) / 3;
    let triples = (0..g)
        .map(|i| Triple::new(coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]))
        .collect();
    TorusCharacter::new(triples, coords[coords.len() - 1])
}

/// Full weight multiset of `Lambda^p((V^dual)^r)` as character -> count,
/// computed as a product of per-basis-character inclusion counts: each of
/// the `6g` distinct weights occurs on `r` basis vectors, and choosing `j`
/// of them contributes `C(r, j)` subsets.
fn exterior_weight_multiset(spec: &EnumerationSpec) -> Result<BTreeMap<Vec<i64>, u128>, Error> {
    let overflow = Error::OracleInconsistency("subset count overflow");
    let p = spec.p as u64;
    let mut states: BTreeMap<(u64, Vec<i64>), u128> = BTreeMap::new();
    states.insert((0, flatten(&TorusCharacter::zero(spec.g))), 1);
    let types = basis_weights(spec.g);
    for (t_idx, w) in types.iter().enumerate() {
        let w_flat = flatten(w);
        let remaining_capacity = ((types.len() - 1 - t_idx) as u64) * (spec.r as u64);
        let mut next: BTreeMap<(u64, Vec<i64>), u128> = BTreeMap::new();
        for ((count, coords), ways) in states {
            let take_max = (spec.r as u64).min(p - count);
            for j in 0..=take_max {
                if count + j + remaining_capacity < p {
                    continue;
                }
                let mut new_coords = coords.clone();
                for (x, y) in new_coords.iter_mut().zip(&w_flat) {
                    *x += (j as i64) * y;
                }
                let extra = binomial(spec.r as u64, j)
                    .checked_mul(ways)
                    .ok_or(overflow.clone())?;
                let entry = next.entry((count + j, new_coords)).or_insert(0);
                *entry = entry.checked_add(extra).ok_or(overflow.clone())?;
            }
        }
        states = next;
    }
    Ok(states
        .into_iter()
        .filter_map(|((count, coords), ways)| (count == p).then_some((coords, ways)))
        .collect())
}

/// Decompose `Lambda^p((V^dual)^r)` into irreducibles with multiplicities by
/// greedy peeling: repeatedly take the lexicographically maximal weight
/// still present (it must be dominant), record it, and subtract the full
/// character of its irreducible.
///
/// The budget guard bounds `binomial(6gr, p)`; a multiplicity driven below
/// zero or a non-dominant maximal weight aborts with
/// [`Error::OracleInconsistency`].
pub fn oracle_decompose(spec: &EnumerationSpec, budget: u128) -> Result<Decomposition, Error> {
    if spec.p < 0 || spec.p > spec.ambient_dimension() {
        return Ok(Decomposition {
            spec: *spec,
            constituents: Vec::new(),
        });
    }
    let required = binomial(spec.ambient_dimension() as u64, spec.p as u64);
    if required > budget {
        return Err(Error::SubsetBudget { required, budget });
    }

    let mut multiset = exterior_weight_multiset(spec)?;
    let mut peeled: Vec<(TorusCharacter, u64)> = Vec::new();
    while let Some((coords, &multiplicity)) = multiset.iter().next_back() {
        let high = unflatten(coords);
        if !high.is_dominant() {
            return Err(Error::OracleInconsistency(
                "maximal remaining weight is not dominant",
            ));
        }

        let block_maps: Vec<BTreeMap<Triple, u64>> =
            high.triples().iter().map(|&t| gl3_weight_map(t)).collect();
        let mut weights: Vec<(Vec<i64>, u128)> = alloc::vec![(Vec::new(), 1)];
        for map in &block_maps {
            let mut next = Vec::with_capacity(weights.len() * map.len());
            for (prefix, mult) in &weights {
                for (t, m) in map {
                    let mut coords = prefix.clone();
                    coords.extend_from_slice(&[t.a, t.b, t.c]);
                    next.push((coords, mult * u128::from(*m)));
                }
            }
            weights = next;
        }

        for (mut coords, m) in weights {
            coords.push(high.d());
            let slot = multiset.get_mut(&coords).ok_or(Error::OracleInconsistency(
                "irreducible character contains a weight absent from the multiset",
            ))?;
            let subtract = multiplicity
                .checked_mul(m)
                .ok_or(Error::OracleInconsistency("multiplicity overflow"))?;
            if *slot < subtract {
                return Err(Error::OracleInconsistency(
                    "weight multiplicity went negative",
                ));
            }
            *slot -= subtract;
            if *slot == 0 {
                multiset.remove(&coords);
            }
        }
        let multiplicity = u64::try_from(multiplicity)
            .map_err(|_| Error::OracleInconsistency("multiplicity overflow"))?;
        peeled.push((high, multiplicity));
    }

    peeled.sort_unstable();
    Ok(Decomposition {
        spec: *spec,
        constituents: peeled,
    })
}
