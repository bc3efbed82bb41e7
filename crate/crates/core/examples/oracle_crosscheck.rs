//! Compare the dynamic programs against brute-force enumeration.
//!
//! cargo run --example oracle_crosscheck

use lcscount::oracle::{oracle_distinct, oracle_embeddings, OracleError};
use lcscount::{count_distinct_full, count_embeddings_full};

fn main() -> Result<(), OracleError> {
    let inputs = ["", "a", "ab", "ba", "aab", "abba", "abcab", "bacba"];
    let mut checked = 0;
    for a in inputs {
        for b in inputs {
            let (a, b) = (a.as_bytes(), b.as_bytes());
            assert_eq!(oracle_distinct(a, b)?, count_distinct_full(a, b));
            assert_eq!(oracle_embeddings(a, b)?, count_embeddings_full(a, b));
            checked += 1;
        }
    }
    println!("{checked} pairs agree with the oracles");

    match oracle_distinct(&[0u8; 19], b"x") {
        Err(e) => println!("oversized input refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
