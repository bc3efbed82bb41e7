//! Per-cell instrumentation for the counting passes.
//!
//! The full tables are never returned to callers. Tests and debugging tools
//! that need to look inside a computation implement [`Tracer`] and pass it
//! to [`count_full_traced`](crate::count_full_traced) or
//! [`count_linear_space_traced`](crate::count_linear_space_traced).

use crate::Count;

/// What happened while filling one interior cell `(i, j)`, `i, j >= 1`.
///
/// `i` indexes the first argument and `j` the second, in the caller's
/// orientation, even when the linear-space pass swaps them internally.
#[derive(Debug)]
pub struct CellEvent<'a> {
    pub i: usize,
    pub j: usize,
    pub symbols_match: bool,
    pub length: usize,
    pub count: &'a Count,
    /// The diagonal-subtraction guard `L[i-1][j-1] == L[i][j]` held and the
    /// diagonal count was subtracted.
    pub diagonal_subtracted: bool,
}

/// Receives cell events and workspace allocations.
pub trait Tracer {
    fn cell(&mut self, event: &CellEvent<'_>);

    /// Called once per pass with the number of length cells and count cells
    /// the pass allocated for its working storage.
    fn workspace(&mut self, _length_cells: usize, _count_cells: usize) {}
}

/// Tracer that discards everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoTrace;

impl Tracer for NoTrace {
    #[inline]
    fn cell(&mut self, _event: &CellEvent<'_>) {}
}

impl<F: FnMut(&CellEvent<'_>)> Tracer for F {
    fn cell(&mut self, event: &CellEvent<'_>) {
        self(event)
    }
}
