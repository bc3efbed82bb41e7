//! Counts far beyond 64 bits stay exact.
//!
//! cargo run --example huge_counts

use lcscount::{count_linear_space, CountKind};

fn main() {
    // a^k inside a^2k: every choice of k positions is an embedding.
    for k in [10, 35, 100, 500] {
        let a = vec!['a'; k];
        let b = vec!['a'; 2 * k];
        let (_, count) = count_linear_space(&a, &b, CountKind::Embeddings);
        println!("k = {k:>3}: C({}, {k}) has {} bits", 2 * k, count.bits());
    }

    // Two periodic sequences over five symbols.
    let a: Vec<u32> = (0..400).map(|x| x * x % 5).collect();
    let b: Vec<u32> = (0..400).map(|x| x * 3 % 5).collect();
    let (length, distinct) = count_linear_space(&a, &b, CountKind::Distinct);
    let (_, embeddings) = count_linear_space(&a, &b, CountKind::Embeddings);
    println!(
        "periodic 400 x 400: length {length}\n  distinct   {distinct}\n  embeddings {embeddings}"
    );
}
