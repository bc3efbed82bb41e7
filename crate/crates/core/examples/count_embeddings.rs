//! Number of LCS embeddings: one LCS string can sit at many position pairs.
//!
//! cargo run --example count_embeddings

use lcscount::{count_distinct_full, count_embeddings_full};

fn main() {
    for (a, b) in [
        ("aab", "ab"),
        ("aa", "aaaa"),
        ("ABCBDAB", "BDCABA"),
        ("abab", "baba"),
    ] {
        let (length, distinct) = count_distinct_full(a.as_bytes(), b.as_bytes());
        let (_, embeddings) = count_embeddings_full(a.as_bytes(), b.as_bytes());
        println!("{a:>8} / {b:<8} length {length}: {distinct} distinct, {embeddings} embeddings");
    }
}
