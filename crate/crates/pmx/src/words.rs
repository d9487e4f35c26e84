//! Word arithmetic in the rank-n universal string Coxeter group.
//!
//! The group is generated by involutions `r_0, ..., r_{n-1}` subject only to
//! `r_i^2 = 1` and `(r_i r_j)^2 = 1` for `|i - j| >= 2`.  It is isomorphic to
//! the monodromy group of the universal n-maniplex and acts on the vertices
//! of every n-premaniplex on the left.
//!
//! A [`GroupWord`] is always stored in canonical form: the word is fully
//! reduced and is the lexicographically least member of its commutation
//! class.  For a Coxeter group whose finite exponents are all 2, the reduced
//! words of an element form a single commutation class, so structural
//! equality decides group equality.
//!
//! Letters are written in the usual composition order: the word `[a, b, c]`
//! denotes `r_a r_b r_c`, and acting on a vertex applies `r_c` first.

use crate::{Error, Result};
use std::fmt;

/// An element of the rank-n universal string Coxeter group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    rank: usize,
    letters: Vec<usize>,
}

impl GroupWord {
    /// Canonicalizes `letters` as a rank-`rank` word.
    pub fn new(rank: usize, letters: impl Into<Vec<usize>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut letters = letters.into();
        if let Some(&bad) = letters.iter().find(|&&l| l >= rank) {
            return Err(Error::InvalidGenerator { letter: bad, rank });
        }
        canonicalize(&mut letters);
        Ok(GroupWord { rank, letters })
    }

    pub fn identity(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        GroupWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single generator `r_i`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::new(rank, vec![i])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff the element lies in the rotation subgroup.  Well-defined
    /// because every relator has even length.
    pub fn is_even(&self) -> bool {
        self.letters.len() % 2 == 0
    }

    /// The product `self · other`, so that acting with the result applies
    /// `other` first: `(a·b)x = a(bx)`.
    pub fn multiply(&self, other: &GroupWord) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        canonicalize(&mut letters);
        Ok(GroupWord {
            rank: self.rank,
            letters,
        })
    }

    /// All generators are involutions, so the inverse is the reversed word.
    pub fn inverse(&self) -> Self {
        let mut letters: Vec<usize> = self.letters.iter().rev().copied().collect();
        canonicalize(&mut letters);
        GroupWord {
            rank: self.rank,
            letters,
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("r{}", l)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord(rank {}, {})", self.rank, self)
    }
}

/// Canonical form: first cancel until reduced, then emit the
/// lexicographically least word of the commutation class.
///
/// Cancellation looks for two occurrences of the same generator separated
/// only by letters that commute with it (index distance at least 2) and
/// deletes both; for right-angled Coxeter groups this reaches a reduced word.
/// The second phase greedily extracts, at each step, the smallest generator
/// whose first occurrence is preceded only by commuting letters.
fn canonicalize(letters: &mut Vec<usize>) {
    loop {
        let mut pair = None;
        'scan: for p in 0..letters.len() {
            let g = letters[p];
            for q in p + 1..letters.len() {
                if letters[q] == g {
                    pair = Some((p, q));
                    break 'scan;
                }
                if letters[q].abs_diff(g) == 1 {
                    break;
                }
            }
        }
        match pair {
            Some((p, q)) => {
                letters.remove(q);
                letters.remove(p);
            }
            None => break,
        }
    }

    let mut rest = std::mem::take(letters);
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best = 0;
        for p in 1..rest.len() {
            let g = rest[p];
            if rest[..p].iter().all(|&h| h.abs_diff(g) >= 2) && g < rest[best] {
                best = p;
            }
        }
        out.push(rest.remove(best));
    }
    *letters = out;
}
