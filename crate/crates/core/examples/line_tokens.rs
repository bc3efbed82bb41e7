//! Comparing two texts line by line, as `lcscount --tokenize lines` does.
//!
//! cargo run --example line_tokens

use lcscount::cli::tokenize::lines;
use lcscount::{Algorithm, LcsSummary, Selection};

fn main() {
    let old = b"fn main() {\n    let x = 1;\n    println!(\"{x}\");\n}\n";
    let new = b"fn main() {\n    let x = 2;\n    let y = 3;\n    println!(\"{x}\");\n}\n";
    let summary = LcsSummary::compute(&lines(old), &lines(new), Algorithm::Linear, Selection::ALL);
    println!(
        "{} lines unchanged; {} distinct and {} embedded ways to keep them",
        summary.lcs_length,
        summary.distinct_count.unwrap(),
        summary.embedding_count.unwrap()
    );
}
