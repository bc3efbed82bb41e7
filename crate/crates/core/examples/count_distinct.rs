//! Number of distinct longest common subsequences.
//!
//! cargo run --example count_distinct

use lcscount::{count_distinct_full, count_linear_space, CountKind};

fn main() {
    for (a, b) in [
        ("ABCBDAB", "BDCABA"),
        ("ab", "ba"),
        ("aa", "aa"),
        ("", "xyz"),
        ("abcbdab", "bdcaba"),
    ] {
        let (length, distinct) = count_distinct_full(a.as_bytes(), b.as_bytes());
        let linear = count_linear_space(a.as_bytes(), b.as_bytes(), CountKind::Distinct);
        assert_eq!(linear, (length, distinct.clone()));
        println!("{a:>8} / {b:<8} length {length}, {distinct} distinct LCS(s)");
    }
}
