//! Integer characters of the maximal torus of `GL(3)^g x GL(1)`.
//!
//! A character is written `((a_i, b_i, c_i)_{1<=i<=g}, d)`: one integer triple
//! per `GL(3)` factor plus the similitude coordinate `d`. The text form is
//! `a1,b1,c1;...;ag,bg,cg|d`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// One `GL(3)` block of a torus character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Triple {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Triple { a, b, c }
    }

    /// `a >= b >= c`.
    pub fn is_dominant(&self) -> bool {
        self.a >= self.b && self.b >= self.c
    }

    /// `a > b > c`.
    pub fn is_regular(&self) -> bool {
        self.a > self.b && self.b > self.c
    }

    pub fn sum(&self) -> i64 {
        self.a + self.b + self.c
    }
}

/// A character of the maximal torus: `g` integer triples and the similitude
/// coordinate `d`.
///
/// The derived ordering (triples lexicographically, then `d`) is the
/// canonical ordering used everywhere a deterministic listing is required.
/// It refines the dominance order on weights, which is what the peeling
/// oracle relies on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusCharacter {
    triples: Vec<Triple>,
    d: i64,
}

impl TorusCharacter {
    /// Build a character from its triples and similitude coordinate.
    ///
    /// Panics if `triples` is empty: `g >= 1` is a structural invariant.
    pub fn new(triples: Vec<Triple>, d: i64) -> Self {
        assert!(
            !triples.is_empty(),
            "a torus character needs at least one triple"
        );
        TorusCharacter { triples, d }
    }

    /// Convenience constructor from raw coordinate rows.
    pub fn from_rows(rows: &[(i64, i64, i64)], d: i64) -> Self {
        Self::new(
            rows.iter().map(|&(a, b, c)| Triple::new(a, b, c)).collect(),
            d,
        )
    }

    /// The zero character with `g` triples.
    pub fn zero(g: usize) -> Self {
        assert!(g >= 1);
        Self::new(alloc::vec![Triple::new(0, 0, 0); g], 0)
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Number of `GL(3)` blocks.
    pub fn g(&self) -> usize {
        self.triples.len()
    }

    /// The exterior degree `p = -2d - sum_i (a_i + b_i + c_i)`.
    ///
    /// For a highest weight of a constituent of `Lambda^p` of the dual
    /// standard representation this recovers `p`; the formula is total and
    /// the dot action preserves it.
    pub fn degree(&self) -> i64 {
        -2 * self.d - self.triples.iter().map(Triple::sum).sum::<i64>()
    }

    /// `a_i >= b_i >= c_i` at every index.
    pub fn is_dominant(&self) -> bool {
        self.triples.iter().all(Triple::is_dominant)
    }

    /// `a_i > b_i > c_i` at every index.
    pub fn is_regular(&self) -> bool {
        self.triples.iter().all(Triple::is_regular)
    }

    /// All `g` triples equal componentwise.
    pub fn is_parallel(&self) -> bool {
        self.triples.windows(2).all(|w| w[0] == w[1])
    }

    /// Boundary Hodge weight `W = -2d - sum_i (2 a_i + b_i)`.
    ///
    /// This is the pairing with the boundary cocharacter. When every
    /// difference `a_i - c_i` equals a common `m`, it satisfies
    /// `W = degree() - m * g`, which is the identity behind all the
    /// per-case weight values of the totally positive and totally negative
    /// contributions.
    pub fn hodge_weight(&self) -> i64 {
        -2 * self.d - self.triples.iter().map(|t| 2 * t.a + t.b).sum::<i64>()
    }

    /// The duality involution `((-c_i, -b_i, -a_i)_i, -3rg - d)`.
    ///
    /// Maps exterior degree `p` to `6rg - p` and is an involution for a
    /// fixed `r`.
    pub fn dual(&self, r: usize) -> Self {
        let triples = self
            .triples
            .iter()
            .map(|t| Triple::new(-t.c, -t.b, -t.a))
            .collect();
        let d = -3 * (r as i64) * (self.g() as i64) - self.d;
        TorusCharacter { triples, d }
    }

    /// All integers `m` (with per-index coverage) such that every index
    /// satisfies at least one of `a_i - c_i = m`, `b_i - c_i - 1 = m`,
    /// `a_i - b_i - 1 = m`.
    ///
    /// Candidates are confined to the 3g attainable values, so the list is
    /// finite and returned sorted by `m`. The character has a nonvanishing
    /// boundary contribution exactly when the list is nonempty.
    pub fn kostant_parallel_witnesses(&self) -> Vec<KostantParallelWitness> {
        let mut candidates: Vec<i64> = self
            .triples
            .iter()
            .flat_map(|t| [t.a - t.c, t.b - t.c - 1, t.a - t.b - 1])
            .collect();
        candidates.sort_unstable();
        candidates.dedup();

        let mut witnesses = Vec::new();
        'candidate: for m in candidates {
            let mut coverage = Vec::with_capacity(self.g());
            for t in &self.triples {
                let flags = IndexConditions {
                    ac: t.a - t.c == m,
                    bc: t.b - t.c - 1 == m,
                    ab: t.a - t.b - 1 == m,
                };
                if !flags.any() {
                    continue 'candidate;
                }
                coverage.push(flags);
            }
            witnesses.push(KostantParallelWitness { m, coverage });
        }
        witnesses
    }

    /// Whether some witness integer exists.
    pub fn is_kostant_parallel(&self) -> bool {
        !self.kostant_parallel_witnesses().is_empty()
    }
}

/// Which of the three defining equalities hold at one index for a common `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexConditions {
    /// `a_i - c_i = m`
    pub ac: bool,
    /// `b_i - c_i - 1 = m`
    pub bc: bool,
    /// `a_i - b_i - 1 = m`
    pub ab: bool,
}

impl IndexConditions {
    pub fn any(&self) -> bool {
        self.ac || self.bc || self.ab
    }
}

/// A common integer `m` together with, for each index, the nonempty set of
/// equalities it satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantParallelWitness {
    pub m: i64,
    pub coverage: Vec<IndexConditions>,
}

/// Parse the text form `a1,b1,c1;...;ag,bg,cg|d`, requiring exactly `g`
/// triples.
///
/// Surrounding whitespace is ignored; integers are decimal with an optional
/// leading `-`. Errors carry the byte offset of the offending token.
pub fn parse_character(text: &str, g: usize) -> Result<TorusCharacter, Error> {
    let bar = text.find('|').ok_or(Error::Parse {
        offset: text.len(),
        message: "missing `|` before the similitude coordinate",
    })?;
    let (head, tail) = (&text[..bar], &text[bar + 1..]);
    if let Some(extra) = tail.find('|') {
        return Err(Error::Parse {
            offset: bar + 1 + extra,
            message: "unexpected second `|`",
        });
    }
    let d = parse_int(tail, bar + 1)?;

    let mut triples = Vec::new();
    let mut offset = 0usize;
    for chunk in head.split(';') {
        let mut fields = [0i64; 3];
        let mut n = 0usize;
        let mut field_offset = offset;
        for piece in chunk.split(',') {
            if n == 3 {
                return Err(Error::Parse {
                    offset: field_offset,
                    message: "triple has more than 3 components",
                });
            }
            fields[n] = parse_int(piece, field_offset)?;
            n += 1;
            field_offset += piece.len() + 1;
        }
        if n != 3 {
            return Err(Error::Parse {
                offset,
                message: "triple has fewer than 3 components",
            });
        }
        triples.push(Triple::new(fields[0], fields[1], fields[2]));
        offset += chunk.len() + 1;
    }
    if triples.len() != g {
        return Err(Error::WrongArity {
            expected: g,
            found: triples.len(),
        });
    }
    Ok(TorusCharacter::new(triples, d))
}

fn parse_int(piece: &str, offset: usize) -> Result<i64, Error> {
    let trimmed = piece.trim();
    let shift = piece.len() - piece.trim_start().len();
    trimmed.parse::<i64>().map_err(|_| Error::Parse {
        offset: offset + shift,
        message: "expected a decimal integer",
    })
}

impl fmt::Display for TorusCharacter {
    /// Canonical serializer; inverse of [`parse_character`] on valid input.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.triples.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{},{}", t.a, t.b, t.c)?;
        }
        write!(f, "|{}", self.d)
    }
}
