//! Brute-force oracles and seeded generators for differential testing.
//!
//! Nothing here calls into the arch or signature code: the oracles work
//! straight from the definitions (subwords, conjugates, shortest rich
//! prefixes) and are exponential where the definitions are.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::slp::{Rule, Slp};
use crate::word::Word;

/// `x ≼ w` on raw bytes, by greedy leftmost matching.
pub fn is_subword_bytes(x: &[u8], w: &[u8]) -> bool {
    let mut rest = w.iter();
    x.iter().all(|c| rest.any(|d| d == c))
}

/// `x ≼ w`.
pub fn is_subword(x: &Word, w: &Word) -> bool {
    is_subword_bytes(&x.to_bytes(), &w.to_bytes())
}

/// Whether some word of length `k` over `symbols` is not a subword of `w`.
/// Walks the tree of candidates, carrying the greedy match position.
fn some_word_missing(symbols: &[u8], w: &[u8], from: usize, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    symbols
        .iter()
        .any(|&c| match w[from..].iter().position(|&d| d == c) {
            None => true,
            Some(p) => some_word_missing(symbols, w, from + p + 1, k - 1),
        })
}

/// Largest `k` such that every word of `A^k` is a subword of `u`, where
/// `A` is the alphabet of `u`. Enumerates `k = 0, 1, 2, …`.
pub fn iota_bruteforce(u: &Word) -> usize {
    iota_bruteforce_bytes(&u.to_bytes(), u.alphabet().symbols())
}

pub fn iota_bruteforce_bytes(u: &[u8], symbols: &[u8]) -> usize {
    let mut k = 0;
    while !some_word_missing(symbols, u, 0, k + 1) {
        k += 1;
    }
    k
}

/// Max of [`iota_bruteforce`] over every rotation of `u`.
pub fn zeta_bruteforce(u: &Word) -> usize {
    let bytes = u.to_bytes();
    let symbols = u.alphabet().symbols();
    (0..=bytes.len())
        .map(|i| {
            let mut rotated = bytes[i..].to_vec();
            rotated.extend_from_slice(&bytes[..i]);
            iota_bruteforce_bytes(&rotated, symbols)
        })
        .max()
        .unwrap_or(0)
}

/// Arch count and sorted rest letters of `w` over the letter set `universe`,
/// by repeatedly cutting the shortest prefix that contains all of `universe`.
pub fn arches_naive(w: &[u8], universe: &BTreeSet<u8>) -> (usize, Vec<u8>) {
    let mut count = 0;
    let mut start = 0;
    'outer: loop {
        for end in start + 1..=w.len() {
            let seen: BTreeSet<u8> = w[start..end].iter().copied().collect();
            if &seen == universe {
                count += 1;
                start = end;
                continue 'outer;
            }
        }
        break;
    }
    let rest: BTreeSet<u8> = w[start..].iter().copied().collect();
    (count, rest.into_iter().collect())
}

/// `S_u(x)` straight from its definition: arches of `x·u` over `A(x·u)`.
/// `None` when `A(u) ⊆ A(x)`.
pub fn s_direct(x: &[u8], u: &[u8]) -> Option<(usize, Vec<u8>)> {
    let ax: BTreeSet<u8> = x.iter().copied().collect();
    if u.iter().all(|c| ax.contains(c)) {
        return None;
    }
    let xu: Vec<u8> = x.iter().chain(u).copied().collect();
    let universe: BTreeSet<u8> = xu.iter().copied().collect();
    Some(arches_naive(&xu, &universe))
}

/// The first `k` letters of `abc…zABC…Z0123…`.
pub fn letters(k: usize) -> Vec<u8> {
    const POOL: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_!";
    assert!(
        (1..=POOL.len()).contains(&k),
        "alphabet size {k} out of range"
    );
    POOL[..k].to_vec()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random word of exactly `len` letters over `letters(k)`.
pub fn random_word(rng: &mut impl Rng, len: usize, alphabet: &Arc<Alphabet>) -> Word {
    let k = alphabet.len();
    let bytes: Vec<u8> = (0..len)
        .map(|_| alphabet.symbol(rng.gen_range(0..k) as u8))
        .collect();
    Word::with_alphabet(&bytes, alphabet.clone()).expect("letters drawn from the alphabet")
}

/// A random word of length `0..=max_len` over the reference alphabet
/// `letters(alphabet_size)`. Same seed, same word.
pub fn gen_word(seed: u64, max_len: usize, alphabet_size: usize) -> Word {
    let mut rng = rng(seed);
    let alphabet = Arc::new(Alphabet::new(&letters(alphabet_size)).expect("valid alphabet"));
    let len = rng.gen_range(0..=max_len);
    random_word(&mut rng, len, &alphabet)
}

/// A random program with up to `max_rules` rules over `letters(alphabet_size)`.
///
/// Concatenations prefer recent rules, so expansions tend to grow
/// exponentially with the rule count.
pub fn gen_slp(seed: u64, max_rules: usize, alphabet_size: usize) -> Slp {
    gen_slp_bounded(seed, max_rules, alphabet_size, u128::MAX)
}

/// Like [`gen_slp`] but never lets a rule's expansion exceed `max_len`.
pub fn gen_slp_bounded(seed: u64, max_rules: usize, alphabet_size: usize, max_len: u128) -> Slp {
    assert!(max_rules >= 1 && max_len >= 1);
    let mut rng = rng(seed);
    let symbols = letters(alphabet_size);
    let n = rng.gen_range(1..=max_rules);
    let mut rules = Vec::with_capacity(n);
    let mut lens: Vec<u128> = Vec::with_capacity(n);
    for i in 0..n {
        let want_leaf = i == 0 || rng.gen_bool(if i < alphabet_size { 0.5 } else { 0.15 });
        let mut rule = None;
        if !want_leaf {
            for _ in 0..8 {
                let j = pick_recent(&mut rng, i);
                let k = pick_recent(&mut rng, i);
                if lens[j].saturating_add(lens[k]) <= max_len {
                    rule = Some(Rule::Concat(j, k));
                    break;
                }
            }
        }
        let rule = rule.unwrap_or_else(|| Rule::Leaf(symbols[rng.gen_range(0..symbols.len())]));
        lens.push(match rule {
            Rule::Leaf(_) => 1,
            Rule::Concat(j, k) => lens[j].saturating_add(lens[k]),
        });
        rules.push(rule);
    }
    Slp::from_rules(rules).expect("children always precede their parent")
}

fn pick_recent(rng: &mut impl Rng, i: usize) -> usize {
    if rng.gen_bool(0.6) {
        i - 1 - rng.gen_range(0..i.min(3))
    } else {
        rng.gen_range(0..i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::new(s.as_bytes()).unwrap()
    }

    fn dp_subsequence(x: &[u8], w: &[u8]) -> bool {
        // table[i][j]: x[..i] ≼ w[..j]
        let mut table = vec![vec![false; w.len() + 1]; x.len() + 1];
        table[0].fill(true);
        for i in 1..=x.len() {
            for j in 1..=w.len() {
                table[i][j] = table[i][j - 1] || (x[i - 1] == w[j - 1] && table[i - 1][j - 1]);
            }
        }
        table[x.len()][w.len()]
    }

    #[test]
    fn subwords() {
        assert!(is_subword_bytes(b"abba", b"abracadabra"));
        assert!(is_subword_bytes(b"", b"xyz"));
        assert!(is_subword_bytes(b"", b""));
        assert!(!is_subword_bytes(b"ino", b"nationalists"));
        assert!(is_subword_bytes(b"ino", b"antinationalists"));
        assert!(is_subword(&w("ab"), &w("cab")));
    }

    #[test]
    fn greedy_matches_dynamic_programming() {
        let mut rng = rng(7);
        for _ in 0..2000 {
            let x: Vec<u8> = (0..rng.gen_range(0..6))
                .map(|_| b'a' + rng.gen_range(0..3))
                .collect();
            let y: Vec<u8> = (0..rng.gen_range(0..12))
                .map(|_| b'a' + rng.gen_range(0..3))
                .collect();
            assert_eq!(
                is_subword_bytes(&x, &y),
                dp_subsequence(&x, &y),
                "{x:?} {y:?}"
            );
        }
    }

    #[test]
    fn brute_force_indexes() {
        assert_eq!(iota_bruteforce(&w("aabb")), 1);
        assert_eq!(iota_bruteforce(&w("aabcbcaabc")), 3);
        let a = Arc::new(Alphabet::new(b"a").unwrap());
        assert_eq!(
            iota_bruteforce(&Word::with_alphabet(b"", a.clone()).unwrap()),
            0
        );
        assert_eq!(zeta_bruteforce(&w("aabb")), 2);
        assert_eq!(zeta_bruteforce(&w("abbbaa")), 2);
        assert_eq!(zeta_bruteforce(&w("ab")) + zeta_bruteforce(&w("bbaa")), 3);
        for n in 0..6 {
            let u = Word::with_alphabet(&vec![b'a'; n], a.clone()).unwrap();
            assert_eq!(zeta_bruteforce(&u), n);
        }
    }

    #[test]
    fn direct_s_values() {
        assert_eq!(s_direct(b"", b"aabac"), Some((1, vec![])));
        assert_eq!(s_direct(b"c", b"aabac"), Some((1, b"ac".to_vec())));
        assert_eq!(s_direct(b"bc", b"aabac"), Some((2, vec![])));
        assert_eq!(s_direct(b"bcd", b"aabac"), Some((1, b"abc".to_vec())));
        assert_eq!(s_direct(b"cab", b"aabac"), None);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gen_word(42, 30, 3), gen_word(42, 30, 3));
        assert!(gen_word(1, 0, 2).is_empty());
        assert_eq!(gen_word(3, 50, 4).alphabet().symbols(), b"abcd");
        assert_eq!(gen_slp(9, 40, 3), gen_slp(9, 40, 3));
    }

    #[test]
    fn generated_programs_round_trip_through_text() {
        for seed in 0..200 {
            let slp = gen_slp(seed, 30, 4);
            let back: Slp = slp.to_string().parse().unwrap();
            assert_eq!(back, slp);
        }
    }

    #[test]
    fn bounded_programs_respect_the_limit() {
        for seed in 0..200 {
            let slp = gen_slp_bounded(seed, 60, 3, 1000);
            assert!(slp.expansion_length() <= 1000u32.into());
        }
    }
}
