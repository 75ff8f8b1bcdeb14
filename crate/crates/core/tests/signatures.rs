mod common;

use common::{alphabet, words_up_to};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;
use subwords::signature::ByteSet;
use subwords::testkit::{self, s_direct};
use subwords::{iota, zeta, Signature, Word};

fn sig(u: &Word) -> Signature {
    Signature::of_word(u).unwrap()
}

fn subsets(universe: &[u8]) -> Vec<Vec<u8>> {
    (0..1u32 << universe.len())
        .map(|m| {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect()
}

fn check_eval(u: &Word, universe: &[u8]) {
    let s = sig(u);
    let bytes = u.to_bytes();
    for b in subsets(universe) {
        let got = s.eval(&b.iter().collect());
        let want = s_direct(&b, &bytes);
        match (got, want) {
            (None, None) => {}
            (Some(e), Some((n, rest))) => {
                assert_eq!(e.count, BigUint::from(n), "{u:?} B={b:?}");
                assert_eq!(e.rest.to_bytes(), rest, "{u:?} B={b:?}");
            }
            (got, want) => panic!("{u:?} B={b:?}: {got:?} vs {want:?}"),
        }
    }
}

#[test]
fn entries_match_direct_definition() {
    let a = alphabet(3);
    for u in words_up_to(&a, 7).iter().filter(|u| !u.is_empty()) {
        let s = sig(u);
        let bytes = u.to_bytes();
        for (k, entry) in s.entries().iter().enumerate() {
            let (n, rest) = s_direct(s.suffix(k), &bytes).expect("strict suffix");
            assert_eq!(entry.count, BigUint::from(n));
            assert_eq!(entry.rest.to_bytes(), rest);
            assert!(entry.count >= BigUint::from(1u32));
        }
    }
}

#[test]
fn eval_is_sound_exhaustive() {
    let a = alphabet(3);
    for u in words_up_to(&a, 7).iter().filter(|u| !u.is_empty()) {
        check_eval(u, b"abcd");
    }
}

#[test]
fn compose_round_trip_exhaustive() {
    let a = alphabet(3);
    let words: Vec<Word> = words_up_to(&a, 7)
        .into_iter()
        .filter(|u| !u.is_empty())
        .collect();
    let sigs: Vec<Signature> = words.iter().map(sig).collect();
    for (u, su) in words.iter().zip(&sigs) {
        for (v, sv) in words.iter().zip(&sigs) {
            if u.len() + v.len() > 8 {
                continue;
            }
            let uv = u.concat(v).unwrap();
            assert_eq!(su.compose(sv), sig(&uv), "{u:?} · {v:?}");
        }
    }
}

#[test]
fn compose_round_trip_random_long() {
    let mut rng = testkit::rng(2000);
    for _ in 0..300 {
        let k = rng.gen_range(1..=6);
        let a = alphabet(k);
        let len = rng.gen_range(1..=2000);
        let u = testkit::random_word(&mut rng, len, &a);
        let len = rng.gen_range(1..=2000);
        let v = testkit::random_word(&mut rng, len, &a);
        let len = rng.gen_range(1..=50);
        let w = testkit::random_word(&mut rng, len, &a);
        let (su, sv, sw) = (sig(&u), sig(&v), sig(&w));
        let uvw = u.concat(&v).unwrap().concat(&w).unwrap();
        let direct = sig(&uvw);
        assert_eq!(su.compose(&sv).compose(&sw), direct);
        assert_eq!(su.compose(&sv.compose(&sw)), direct);
    }
}

#[test]
fn indexes_from_signatures_match_explicit() {
    let mut rng = testkit::rng(31);
    for _ in 0..3000 {
        let k = rng.gen_range(1..=5);
        let a = alphabet(k);
        let len = rng.gen_range(1..=60);
        let u = testkit::random_word(&mut rng, len, &a);
        // ι_* and ζ_*: the reference alphabet is A(u)
        let own = Word::new(&u.to_bytes()).unwrap();
        let s = sig(&u);
        assert_eq!(*s.iota(), BigUint::from(iota(&own)));
        assert_eq!(s.zeta(), BigUint::from(zeta(&own)), "{own:?}");
    }
}

#[test]
fn signatures_ignore_the_carried_alphabet() {
    let big = alphabet(5);
    let u = Word::with_alphabet(b"aabac", big).unwrap();
    assert_eq!(sig(&u), sig(&common::word("aabac")));
}

#[test]
fn json_round_trip_non_ascii() {
    let u = Word::new(&[0xff, 0x00, b'a', 0xff, 0x80]).unwrap();
    let s = sig(&u);
    assert_eq!(Signature::from_json_str(&s.to_json_string()).unwrap(), s);
}

fn arb_word(max_letters: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..max_letters, 1..=max_len)
        .prop_map(|v| v.into_iter().map(|c| b'a' + c).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn compose_equals_signature_of_concatenation(u in arb_word(6, 80), v in arb_word(6, 80)) {
        let su = Signature::of_word(&Word::new(&u).unwrap()).unwrap();
        let sv = Signature::of_word(&Word::new(&v).unwrap()).unwrap();
        let uv: Vec<u8> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(su.compose(&sv), Signature::of_word(&Word::new(&uv).unwrap()).unwrap());
    }

    #[test]
    fn eval_matches_direct(u in arb_word(5, 40), b in prop::collection::btree_set(b'a'..=b'f', 0..6)) {
        let s = Signature::of_word(&Word::new(&u).unwrap()).unwrap();
        let x: Vec<u8> = b.into_iter().collect();
        let got = s.eval(&x.iter().collect::<ByteSet>())
            .map(|e| (e.count, e.rest.to_bytes()));
        let want = s_direct(&x, &u).map(|(n, r)| (BigUint::from(n), r));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn json_round_trip(u in arb_word(8, 60)) {
        let s = Signature::of_word(&Word::new(&u).unwrap()).unwrap();
        prop_assert_eq!(Signature::from_json_str(&s.to_json_string()).unwrap(), s);
    }
}
