//! Length of a longest common subsequence over bytes, chars and words.
//!
//! cargo run --example lcs_length

use lcscount::lcs_length;

fn main() {
    println!("bytes: {}", lcs_length(b"ABCBDAB", b"BDCABA"));

    let a: Vec<char> = "naïve café".chars().collect();
    let b: Vec<char> = "native cafe".chars().collect();
    println!("chars: {}", lcs_length(&a, &b));

    let a: Vec<&str> = "the quick brown fox jumps".split_whitespace().collect();
    let b: Vec<&str> = "a quick red fox jumps high".split_whitespace().collect();
    println!("words: {}", lcs_length(&a, &b));
}
