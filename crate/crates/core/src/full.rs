//! Whole-table counting: the `(m+1) x (n+1)` length and count matrices are
//! filled column by column, exactly in the order the recurrence reads them.

use std::cmp::max;

use num_traits::One;

use crate::trace::{CellEvent, NoTrace, Tracer};
use crate::{Count, CountKind};

/// Row-major `(rows+1) x (cols+1)` matrix.
struct Table<V> {
    width: usize,
    cells: Vec<V>,
}

impl<V: Clone> Table<V> {
    fn new(rows: usize, cols: usize, fill: V) -> Self {
        Table {
            width: cols + 1,
            cells: vec![fill; (rows + 1) * (cols + 1)],
        }
    }

    fn get(&self, i: usize, j: usize) -> &V {
        &self.cells[i * self.width + j]
    }

    fn set(&mut self, i: usize, j: usize, value: V) {
        self.cells[i * self.width + j] = value;
    }
}

/// LCS length and number of distinct LCSs, via the full table.
pub fn count_distinct_full<T: PartialEq>(a: &[T], b: &[T]) -> (usize, Count) {
    count_full(a, b, CountKind::Distinct)
}

/// LCS length and number of LCS embeddings, via the full table.
pub fn count_embeddings_full<T: PartialEq>(a: &[T], b: &[T]) -> (usize, Count) {
    count_full(a, b, CountKind::Embeddings)
}

pub fn count_full<T: PartialEq>(a: &[T], b: &[T], kind: CountKind) -> (usize, Count) {
    count_full_traced(a, b, kind, &mut NoTrace)
}

/// Full-table count reporting every interior cell to `tracer`.
///
/// Both count kinds share the same recurrence. On a match the distinct count
/// copies the diagonal and stops there; the embedding count copies the
/// diagonal and then also runs the inclusion-exclusion over the upper, left
/// and diagonal neighbours.
pub fn count_full_traced<T, R>(a: &[T], b: &[T], kind: CountKind, tracer: &mut R) -> (usize, Count)
where
    T: PartialEq,
    R: Tracer + ?Sized,
{
    let (m, n) = (a.len(), b.len());
    let mut len = Table::new(m, n, 0usize);
    // Row 0 and column 0 are the base case: one (empty) LCS.
    let mut cnt = Table::new(m, n, Count::one());
    tracer.workspace(len.cells.len(), cnt.cells.len());

    for j in 1..=n {
        for i in 1..=m {
            let symbols_match = a[i - 1] == b[j - 1];
            let here = if symbols_match {
                len.get(i - 1, j - 1) + 1
            } else {
                max(*len.get(i - 1, j), *len.get(i, j - 1))
            };
            len.set(i, j, here);

            let mut value = Count::default();
            let mut diagonal_subtracted = false;
            if symbols_match {
                value = cnt.get(i - 1, j - 1).clone();
            }
            if !symbols_match || kind == CountKind::Embeddings {
                if *len.get(i - 1, j) == here {
                    value += cnt.get(i - 1, j);
                }
                if *len.get(i, j - 1) == here {
                    value += cnt.get(i, j - 1);
                }
                if *len.get(i - 1, j - 1) == here {
                    let diag = cnt.get(i - 1, j - 1);
                    debug_assert!(value >= *diag, "negative running count at ({i}, {j})");
                    value -= diag;
                    diagonal_subtracted = true;
                }
            }
            tracer.cell(&CellEvent {
                i,
                j,
                symbols_match,
                length: here,
                count: &value,
                diagonal_subtracted,
            });
            cnt.set(i, j, value);
        }
    }
    (*len.get(m, n), cnt.get(m, n).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u32) -> Count {
        Count::from(v)
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(count_distinct_full(b"", b"xyz"), (0, c(1)));
        assert_eq!(count_distinct_full(b"ab", b"ba"), (1, c(2)));
        assert_eq!(count_distinct_full(b"ABCBDAB", b"BDCABA"), (4, c(3)));
        assert_eq!(count_distinct_full(b"aa", b"aa"), (2, c(1)));
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(count_embeddings_full::<u8>(&[], &[]), (0, c(1)));
        assert_eq!(count_embeddings_full(b"aab", b"ab"), (2, c(2)));
        assert_eq!(count_embeddings_full(b"aa", b"aaaa"), (2, c(6)));
    }

    #[test]
    fn disjoint_alphabets_give_one_empty_lcs() {
        for kind in CountKind::ALL {
            assert_eq!(count_full(b"abc", b"xyz", kind), (0, c(1)));
        }
    }

    #[test]
    fn workspace_is_whole_table() {
        let mut sizes = None;
        struct Sizes<'a>(&'a mut Option<(usize, usize)>);
        impl Tracer for Sizes<'_> {
            fn cell(&mut self, _: &CellEvent<'_>) {}
            fn workspace(&mut self, l: usize, c: usize) {
                *self.0 = Some((l, c));
            }
        }
        count_full_traced(
            b"abc",
            b"abcde",
            CountKind::Embeddings,
            &mut Sizes(&mut sizes),
        );
        assert_eq!(sizes, Some((24, 24)));
    }
}
