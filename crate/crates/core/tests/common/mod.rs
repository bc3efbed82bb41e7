#![allow(dead_code)]

use lcscount::Count;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `C(n, k)` from Pascal's triangle, additions only. Independent of the
/// dynamic programs under test.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::from(0u32);
    }
    let mut row = vec![Count::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Count::from(1u32));
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(Count::from(1u32));
        row = next;
    }
    row.swap_remove(k)
}

/// Every string over `alphabet` of length `0..=max_len`.
pub fn all_strings(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<u8>| {
                alphabet.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Seeded random pairs with lengths in `0..=max_len` over `1..=max_alphabet`
/// symbols.
pub fn random_pairs(
    seed: u64,
    count: usize,
    max_len: usize,
    max_alphabet: u8,
) -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=max_alphabet);
            let draw = |rng: &mut ChaCha8Rng| {
                let len = rng.gen_range(0..=max_len);
                (0..len)
                    .map(|_| b'a' + rng.gen_range(0..k))
                    .collect::<Vec<u8>>()
            };
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            (a, b)
        })
        .collect()
}
