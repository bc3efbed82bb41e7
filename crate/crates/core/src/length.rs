use std::cmp::max;

/// Length of a longest common subsequence of `a` and `b`.
///
/// Uses one rolling row over the shorter input.
pub fn lcs_length<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let (rows, cols) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut col = vec![0usize; rows.len() + 1];
    for y in cols {
        let mut diag = 0;
        for (i, x) in rows.iter().enumerate() {
            let up = col[i];
            let left = col[i + 1];
            let value = if x == y { diag + 1 } else { max(up, left) };
            diag = left;
            col[i + 1] = value;
        }
    }
    col[rows.len()]
}
