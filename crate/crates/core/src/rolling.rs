//! Linear-space counting with a single rolling column.

use std::cmp::max;
use std::mem;

use num_traits::{One, Zero};

use crate::trace::{CellEvent, NoTrace, Tracer};
use crate::{Count, CountKind};

/// One mixed column of lengths and counts plus the diagonal carry.
///
/// While cell `(i, j)` is being processed, indices `< i` hold column `j`,
/// indices `>= i` still hold column `j - 1`, and the diagonal carry holds
/// the column `j - 1` entry at index `i - 1`. [`RollingState::step_cell`]
/// advances that boundary by one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RollingState {
    lengths: Vec<usize>,
    counts: Vec<Count>,
    prev_diag_length: usize,
    prev_diag_count: Count,
    // Reused buffer for the cell under construction. Rotated with the
    // diagonal carry and the column entry so no cell update allocates once
    // the numbers stop growing.
    scratch: Count,
}

/// Outcome of a single [`RollingState::step_cell`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStep {
    pub symbols_match: bool,
    pub length: usize,
    pub diagonal_subtracted: bool,
}

impl RollingState {
    /// Column 0 for `rows` row symbols: every length 0, every count 1.
    pub fn new(rows: usize) -> Self {
        RollingState {
            lengths: vec![0; rows + 1],
            counts: vec![Count::one(); rows + 1],
            prev_diag_length: 0,
            prev_diag_count: Count::one(),
            scratch: Count::zero(),
        }
    }

    /// Builds a state from explicit column contents.
    ///
    /// # Panics
    ///
    /// If `lengths` and `counts` differ in size or are empty.
    pub fn from_parts(
        lengths: Vec<usize>,
        counts: Vec<Count>,
        prev_diag_length: usize,
        prev_diag_count: Count,
    ) -> Self {
        assert_eq!(lengths.len(), counts.len(), "column arrays differ in size");
        assert!(!lengths.is_empty(), "column must include row 0");
        RollingState {
            lengths,
            counts,
            prev_diag_length,
            prev_diag_count,
            scratch: Count::zero(),
        }
    }

    /// Number of row symbols; the arrays hold `rows() + 1` cells.
    pub fn rows(&self) -> usize {
        self.lengths.len() - 1
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    /// The diagonal carry `(L[i-1][j-1], count[i-1][j-1])`.
    pub fn prev_diag(&self) -> (usize, &Count) {
        (self.prev_diag_length, &self.prev_diag_count)
    }

    /// Processes row 0 of a new column. Row 0 never changes, so this only
    /// resets the diagonal carry to the base case.
    pub fn start_column(&mut self) {
        self.prev_diag_length = 0;
        self.prev_diag_count.set_one();
    }

    /// Computes cell `(i, j)` from the row symbol `a_i` and the column
    /// symbol `b_j`, then moves the column boundary past row `i`.
    ///
    /// # Panics
    ///
    /// If `i` is 0 or greater than [`rows`](Self::rows).
    pub fn step_cell<T: PartialEq + ?Sized>(
        &mut self,
        i: usize,
        a_i: &T,
        b_j: &T,
        kind: CountKind,
    ) -> CellStep {
        assert!(
            i >= 1 && i <= self.rows(),
            "row {i} outside 1..={}",
            self.rows()
        );
        let up_length = self.lengths[i - 1];
        let left_length = self.lengths[i];
        debug_assert!(
            self.prev_diag_length <= up_length && self.prev_diag_length <= left_length,
            "diagonal carry is not the column j-1 value at row {}",
            i - 1
        );

        let symbols_match = a_i == b_j;
        let mut new_length = max(up_length, left_length);
        let new_count = &mut self.scratch;
        new_count.set_zero();
        if symbols_match {
            new_length = self.prev_diag_length + 1;
            new_count.clone_from(&self.prev_diag_count);
        }

        let mut diagonal_subtracted = false;
        if !symbols_match || kind == CountKind::Embeddings {
            if up_length == new_length {
                *new_count += &self.counts[i - 1];
            }
            if left_length == new_length {
                *new_count += &self.counts[i];
            }
            if self.prev_diag_length == new_length {
                debug_assert!(
                    *new_count >= self.prev_diag_count,
                    "negative running count at row {i}"
                );
                *new_count -= &self.prev_diag_count;
                diagonal_subtracted = true;
            }
        }

        self.prev_diag_length = left_length;
        self.lengths[i] = new_length;
        mem::swap(&mut self.prev_diag_count, &mut self.counts[i]);
        mem::swap(&mut self.counts[i], &mut self.scratch);

        CellStep {
            symbols_match,
            length: new_length,
            diagonal_subtracted,
        }
    }

    /// Final length and count once every column has been processed.
    pub fn result(&self) -> (usize, &Count) {
        let last = self.rows();
        (self.lengths[last], &self.counts[last])
    }
}

/// LCS length and the requested count using `min(m, n) + 1` cells of storage.
///
/// Returns the same value as [`count_full`](crate::count_full) for the same
/// arguments.
pub fn count_linear_space<T: PartialEq>(a: &[T], b: &[T], kind: CountKind) -> (usize, Count) {
    count_linear_space_traced(a, b, kind, &mut NoTrace)
}

/// [`count_linear_space`] reporting every interior cell to `tracer`.
///
/// The shorter input becomes the rolling column. Events still carry
/// `(i, j)` indices relative to `a` and `b` as given.
pub fn count_linear_space_traced<T, R>(
    a: &[T],
    b: &[T],
    kind: CountKind,
    tracer: &mut R,
) -> (usize, Count)
where
    T: PartialEq,
    R: Tracer + ?Sized,
{
    let swapped = a.len() > b.len();
    let (rows, cols) = if swapped { (b, a) } else { (a, b) };

    let mut state = RollingState::new(rows.len());
    tracer.workspace(state.lengths.len(), state.counts.len());

    for (col, b_j) in cols.iter().enumerate() {
        state.start_column();
        for (row, a_i) in rows.iter().enumerate() {
            let step = state.step_cell(row + 1, a_i, b_j, kind);
            let (i, j) = if swapped {
                (col + 1, row + 1)
            } else {
                (row + 1, col + 1)
            };
            tracer.cell(&CellEvent {
                i,
                j,
                symbols_match: step.symbols_match,
                length: step.length,
                count: &state.counts[row + 1],
                diagonal_subtracted: step.diagonal_subtracted,
            });
        }
    }
    let (length, count) = state.result();
    (length, count.clone())
}
