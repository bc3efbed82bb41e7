use crate::{count_full, count_linear_space, lcs_length, Count, CountKind};

/// Which counting algorithm to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Whole `(m+1) x (n+1)` table.
    Full,
    /// Rolling column of `min(m, n) + 1` cells.
    #[default]
    Linear,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Full => "full",
            Algorithm::Linear => "linear",
        }
    }

    pub fn count<T: PartialEq>(self, a: &[T], b: &[T], kind: CountKind) -> (usize, Count) {
        match self {
            Algorithm::Full => count_full(a, b, kind),
            Algorithm::Linear => count_linear_space(a, b, kind),
        }
    }
}

/// Counts requested alongside the LCS length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selection {
    pub distinct: bool,
    pub embeddings: bool,
}

impl Selection {
    pub const ALL: Selection = Selection {
        distinct: true,
        embeddings: true,
    };
    pub const LENGTH_ONLY: Selection = Selection {
        distinct: false,
        embeddings: false,
    };
}

/// LCS length plus whichever counts were asked for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsSummary {
    pub lcs_length: usize,
    pub distinct_count: Option<Count>,
    pub embedding_count: Option<Count>,
}

impl LcsSummary {
    pub fn compute<T: PartialEq>(
        a: &[T],
        b: &[T],
        algorithm: Algorithm,
        selection: Selection,
    ) -> Self {
        let mut seen_length = None;
        let mut run = |kind| {
            let (length, count) = algorithm.count(a, b, kind);
            debug_assert!(seen_length.is_none_or(|l| l == length));
            seen_length = Some(length);
            count
        };
        let distinct_count = selection.distinct.then(|| run(CountKind::Distinct));
        let embedding_count = selection.embeddings.then(|| run(CountKind::Embeddings));
        LcsSummary {
            lcs_length: seen_length.unwrap_or_else(|| lcs_length(a, b)),
            distinct_count,
            embedding_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_only_skips_counts() {
        let s = LcsSummary::compute(
            b"ABCBDAB",
            b"BDCABA",
            Algorithm::Linear,
            Selection::LENGTH_ONLY,
        );
        assert_eq!(s.lcs_length, 4);
        assert!(s.distinct_count.is_none() && s.embedding_count.is_none());
    }

    #[test]
    fn both_algorithms_agree() {
        let full = LcsSummary::compute(b"ab", b"ba", Algorithm::Full, Selection::ALL);
        let linear = LcsSummary::compute(b"ab", b"ba", Algorithm::Linear, Selection::ALL);
        assert_eq!(full, linear);
        assert_eq!(full.distinct_count, Some(Count::from(2u32)));
        assert_eq!(full.embedding_count, Some(Count::from(2u32)));
    }

    #[test]
    fn empty_string_is_the_only_lcs() {
        for algorithm in [Algorithm::Full, Algorithm::Linear] {
            let s = LcsSummary::compute(b"", b"", algorithm, Selection::ALL);
            assert_eq!(s.lcs_length, 0);
            assert_eq!(s.distinct_count, Some(Count::from(1u32)));
            assert_eq!(s.embedding_count, Some(Count::from(1u32)));
        }
    }
}
