//! Printing the count table through the tracing hook.
//!
//! cargo run --example trace_cells

use lcscount::trace::CellEvent;
use lcscount::{count_full_traced, CountKind};

fn main() {
    let (a, b) = (b"ABCBDAB", b"BDCABA");
    let mut grid = vec![vec![String::from("1"); b.len() + 1]; a.len() + 1];
    let mut record = |e: &CellEvent<'_>| {
        let mark = if e.symbols_match { "*" } else { "" };
        grid[e.i][e.j] = format!("{}/{}{mark}", e.length, e.count);
    };
    let (length, count) = count_full_traced(a, b, CountKind::Distinct, &mut record);

    print!("{:>6}", "");
    for &c in b.iter() {
        print!("{:>6}", c as char);
    }
    println!();
    for (i, row) in grid.iter().enumerate().skip(1) {
        print!("{:>6}", a[i - 1] as char);
        for cell in &row[1..] {
            print!("{cell:>6}");
        }
        println!();
    }
    println!("cells are length/count, * marks a match; result {length}/{count}");
}
