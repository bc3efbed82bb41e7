//! Driving the rolling column by hand, then the packaged linear-space pass.
//!
//! cargo run --example linear_space

use lcscount::{count_linear_space, CountKind, RollingState};

fn main() {
    let rows = b"ab";
    let cols = b"ba";
    let mut state = RollingState::new(rows.len());
    for (j, b_j) in cols.iter().enumerate() {
        state.start_column();
        for (i, a_i) in rows.iter().enumerate() {
            state.step_cell(i + 1, a_i, b_j, CountKind::Embeddings);
        }
        let counts: Vec<String> = state.counts().iter().map(ToString::to_string).collect();
        println!(
            "after column {}: lengths {:?}, counts [{}]",
            j + 1,
            state.lengths(),
            counts.join(", ")
        );
    }
    let (length, count) = state.result();
    println!("by hand: length {length}, {count} embeddings");

    let a: Vec<u32> = (0..5000).map(|x| x * 7 % 13).collect();
    let b: Vec<u32> = (0..3000).map(|x| x * 5 % 11).collect();
    let (length, count) = count_linear_space(&a, &b, CountKind::Embeddings);
    println!(
        "5000 x 3000 symbols with {} cells: length {length}, count has {} decimal digits",
        a.len().min(b.len()) + 1,
        count.to_string().len()
    );
}
