//! Brute-force reference counts.
//!
//! Both functions enumerate objects straight from the definitions and are
//! exponential in the input size. They exist to check the dynamic programs
//! on small inputs and refuse anything larger than their guards.

use std::collections::HashSet;
use std::hash::Hash;

use thiserror::Error;

use crate::Count;

/// Largest first argument [`oracle_distinct`] accepts (it tries all
/// `2^|a|` subsequences).
pub const MAX_DISTINCT_LEN: usize = 18;

/// Largest combined input length [`oracle_embeddings`] accepts.
pub const MAX_EMBEDDING_TOTAL_LEN: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input too large for brute-force enumeration: {what} is {actual}, limit {limit}")]
    InputTooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

/// A common subsequence given by its positions in both inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub a_positions: Vec<usize>,
    pub b_positions: Vec<usize>,
}

impl Embedding {
    pub fn len(&self) -> usize {
        self.a_positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_positions.is_empty()
    }

    /// Checks the position lists are equally long, strictly increasing and
    /// pair up equal symbols.
    pub fn is_valid_for<T: PartialEq>(&self, a: &[T], b: &[T]) -> bool {
        let increasing = |p: &[usize]| p.windows(2).all(|w| w[0] < w[1]);
        self.a_positions.len() == self.b_positions.len()
            && increasing(&self.a_positions)
            && increasing(&self.b_positions)
            && self
                .a_positions
                .iter()
                .zip(&self.b_positions)
                .all(|(&i, &j)| i < a.len() && j < b.len() && a[i] == b[j])
    }
}

fn is_subsequence<T: PartialEq>(needle: &[&T], haystack: &[T]) -> bool {
    let mut rest = haystack.iter();
    needle.iter().all(|x| rest.any(|y| *x == y))
}

/// LCS length and number of distinct LCSs by trying every subsequence of
/// `a` against `b` and deduplicating the longest ones as symbol strings.
pub fn oracle_distinct<T: Eq + Hash>(a: &[T], b: &[T]) -> Result<(usize, Count), OracleError> {
    if a.len() > MAX_DISTINCT_LEN {
        return Err(OracleError::InputTooLarge {
            what: "first sequence length",
            actual: a.len(),
            limit: MAX_DISTINCT_LEN,
        });
    }
    let mut best = 0;
    let mut longest: HashSet<Vec<&T>> = HashSet::new();
    longest.insert(Vec::new());
    for mask in 0u32..(1 << a.len()) {
        let size = mask.count_ones() as usize;
        if size < best {
            continue;
        }
        let candidate: Vec<&T> = (0..a.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| &a[k])
            .collect();
        if !is_subsequence(&candidate, b) {
            continue;
        }
        if size > best {
            best = size;
            longest.clear();
        }
        longest.insert(candidate);
    }
    Ok((best, Count::from(longest.len())))
}

struct EmbeddingSearch<'s, T> {
    a: &'s [T],
    b: &'s [T],
    path: Embedding,
    best: usize,
    at_best: u64,
}

impl<T: PartialEq> EmbeddingSearch<'_, T> {
    /// Visits `path` and every extension of it.
    fn visit(&mut self) {
        debug_assert!(self.path.is_valid_for(self.a, self.b));
        let len = self.path.len();
        if len > self.best {
            self.best = len;
            self.at_best = 0;
        }
        if len == self.best {
            self.at_best += 1;
        }
        let from_i = self.path.a_positions.last().map_or(0, |&i| i + 1);
        let from_j = self.path.b_positions.last().map_or(0, |&j| j + 1);
        for i in from_i..self.a.len() {
            for j in from_j..self.b.len() {
                if self.a[i] == self.b[j] {
                    self.path.a_positions.push(i);
                    self.path.b_positions.push(j);
                    self.visit();
                    self.path.a_positions.pop();
                    self.path.b_positions.pop();
                }
            }
        }
    }
}

/// LCS length and number of LCS embeddings by enumerating every embedding
/// of every common subsequence.
///
/// The empty embedding counts once, so the result is `(0, 1)` when the
/// inputs share no symbol.
pub fn oracle_embeddings<T: PartialEq>(a: &[T], b: &[T]) -> Result<(usize, Count), OracleError> {
    let total = a.len() + b.len();
    if total > MAX_EMBEDDING_TOTAL_LEN {
        return Err(OracleError::InputTooLarge {
            what: "combined sequence length",
            actual: total,
            limit: MAX_EMBEDDING_TOTAL_LEN,
        });
    }
    let mut search = EmbeddingSearch {
        a,
        b,
        path: Embedding::default(),
        best: 0,
        at_best: 0,
    };
    search.visit();
    Ok((search.best, Count::from(search.at_best)))
}
