#![allow(dead_code)]

use std::sync::Arc;

use subwords::testkit::letters;
use subwords::{Alphabet, Word};

pub fn alphabet(k: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::new(&letters(k)).unwrap())
}

pub fn word(s: &str) -> Word {
    Word::new(s.as_bytes()).unwrap()
}

/// Every word over `alphabet` of length exactly `len`, in lexicographic order.
pub fn words_of_len(alphabet: &Arc<Alphabet>, len: usize) -> Vec<Word> {
    let k = alphabet.len();
    let total = k.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let mut bytes = vec![0u8; len];
            for slot in bytes.iter_mut().rev() {
                *slot = alphabet.symbol((code % k) as u8);
                code /= k;
            }
            Word::with_alphabet(&bytes, alphabet.clone()).unwrap()
        })
        .collect()
}

/// Every word over `alphabet` of length at most `max_len`.
pub fn words_up_to(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|n| words_of_len(alphabet, n))
        .collect()
}
