//! Subword universality signatures.
//!
//! For a nonempty word `u`, `S_u(x)` summarizes the arch factorization of
//! `x·u` over its own alphabet: the number of arches and the letters of the
//! rest. It only depends on `A(x)` and is defined when `A(u) ⊄ A(x)`. The
//! signature `Σ(u)` is `e(u)` together with `S_u` tabulated on the strict
//! suffixes of `e(u)`. It is enough to evaluate `S_u` anywhere, to combine
//! with another signature into `Σ(u·v)`, and to read off `ι` and `ζ`.
//!
//! Signatures speak raw bytes rather than alphabet indices so that
//! signatures of unrelated words can be combined directly.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arch::scan_arches;
use crate::error::{Error, Result};
use crate::word::Word;

/// A set of byte values.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ByteSet([u64; 4]);

impl ByteSet {
    pub const EMPTY: ByteSet = ByteSet([0; 4]);

    #[inline]
    pub fn insert(&mut self, b: u8) {
        self.0[(b >> 6) as usize] |= 1u64 << (b & 63);
    }

    #[inline]
    pub fn contains(&self, b: u8) -> bool {
        self.0[(b >> 6) as usize] & (1u64 << (b & 63)) != 0
    }

    pub fn union(&self, other: &ByteSet) -> ByteSet {
        let mut out = *self;
        for (o, x) in out.0.iter_mut().zip(other.0) {
            *o |= x;
        }
        out
    }

    pub fn is_subset(&self, other: &ByteSet) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Members in increasing byte order.
    pub fn to_bytes(&self) -> Vec<u8> {
        (0..=255u8).filter(|&b| self.contains(b)).collect()
    }
}

impl FromIterator<u8> for ByteSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = ByteSet::EMPTY;
        for b in iter {
            set.insert(b);
        }
        set
    }
}

impl<'a> FromIterator<&'a u8> for ByteSet {
    fn from_iter<I: IntoIterator<Item = &'a u8>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Debug for ByteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", String::from_utf8_lossy(&self.to_bytes()))
    }
}

/// A value `⟨ι_*(x·u), A(r_*(x·u))⟩` of `S_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub count: BigUint,
    pub rest: ByteSet,
}

impl Entry {
    fn new(count: impl Into<BigUint>, rest: ByteSet) -> Self {
        Entry {
            count: count.into(),
            rest,
        }
    }
}

/// The subword universality signature `Σ(u)` of a nonempty word.
///
/// `entries[k]` holds `S_u` on the suffix of `e(u)` of length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    e: Vec<u8>,
    letters: ByteSet,
    entries: Vec<Entry>,
}

impl Signature {
    /// `Σ(u)`, computed by arch-factorizing `x·u` for each strict suffix `x`
    /// of `e(u)`. The reference alphabet is `A(u)`, whatever alphabet `u`
    /// carries.
    pub fn of_word(u: &Word) -> Result<Signature> {
        if u.is_empty() {
            return Err(Error::EmptySignature);
        }
        let e = u.first_occurrence_order();
        let e_letters = e.letters();
        let full = u.letter_set();
        let alphabet = u.alphabet();
        let entries = (0..e_letters.len())
            .map(|k| {
                let x = &e_letters[e_letters.len() - k..];
                let stream = x.iter().chain(u.letters()).copied();
                let (count, rest) = scan_arches(stream, full);
                Entry::new(count, rest.iter().map(|l| alphabet.symbol(l)).collect())
            })
            .collect();
        let e = e.to_bytes();
        Ok(Signature {
            letters: e.iter().collect(),
            e,
            entries,
        })
    }

    /// Builds a signature from raw parts, checking the structural invariants.
    pub fn from_parts(e: Vec<u8>, entries: Vec<Entry>) -> Result<Signature> {
        let bad = |msg: String| Err(Error::MalformedSignature(msg));
        if e.is_empty() {
            return bad("e is empty".into());
        }
        let letters: ByteSet = e.iter().collect();
        if letters.len() != e.len() {
            return bad("e repeats a letter".into());
        }
        if entries.len() != e.len() {
            return bad(format!(
                "expected {} entries, found {}",
                e.len(),
                entries.len()
            ));
        }
        for (k, entry) in entries.iter().enumerate() {
            if entry.count < BigUint::one() {
                return bad(format!("entry {k} has a zero count"));
            }
            if !entry.rest.is_subset(&letters) || entry.rest == letters {
                return bad(format!(
                    "entry {k} has a rest that is not a strict subset of A(u)"
                ));
            }
        }
        Ok(Signature {
            e,
            letters,
            entries,
        })
    }

    /// `e(u)`.
    pub fn e(&self) -> &[u8] {
        &self.e
    }

    /// `A(u)`.
    pub fn letters(&self) -> ByteSet {
        self.letters
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// The suffix of `e(u)` of length `k`.
    pub fn suffix(&self, k: usize) -> &[u8] {
        &self.e[self.e.len() - k..]
    }

    /// `S_u(x)` for any `x` with `A(x) = b`; `None` when `A(u) ⊆ b`.
    pub fn eval(&self, b: &ByteSet) -> Option<Entry> {
        if self.letters.is_subset(b) {
            return None;
        }
        // y: longest suffix of e(u) whose letters all lie in b
        let k = self.e.iter().rev().take_while(|&&c| b.contains(c)).count();
        let entry = &self.entries[k];
        if b.is_subset(&self.letters) || entry.count.is_one() {
            Some(entry.clone())
        } else {
            Some(Entry::new(1u32, self.letters))
        }
    }

    /// `S_u(x)` for an explicit word `x`.
    pub fn eval_word(&self, x: &[u8]) -> Option<Entry> {
        self.eval(&x.iter().collect())
    }

    /// `Σ(u·v)` from `Σ(u)` and `Σ(v)`.
    pub fn compose(&self, v: &Signature) -> Signature {
        let au = self.letters;
        let av = v.letters;
        let mut e = self.e.clone();
        e.extend(v.e.iter().filter(|&&c| !au.contains(c)));
        let letters = au.union(&av);

        let mut entries = Vec::with_capacity(e.len());
        let mut ax = ByteSet::EMPTY;
        for k in 0..e.len() {
            if k > 0 {
                ax.insert(e[e.len() - k]);
            }
            let ax_au = ax.union(&au);
            let entry = if !av.is_subset(&ax_au) {
                v.eval(&ax_au).expect("A(v) ⊄ A(x)∪A(u)")
            } else {
                let Entry { count, rest } = self
                    .eval(&ax)
                    .expect("a strict suffix of e(uv) misses a letter of u");
                let widened = av.union(&rest);
                if widened != ax_au {
                    Entry::new(count, widened)
                } else {
                    let tail = v
                        .eval(&rest)
                        .expect("the rest of x·u is incomplete, so it misses a letter of v");
                    Entry::new(count + tail.count, tail.rest)
                }
            };
            entries.push(entry);
        }
        Signature {
            e,
            letters,
            entries,
        }
    }

    /// `ι_*(u)`, read from `S_u(ε)`.
    pub fn iota(&self) -> &BigUint {
        &self.entries[0].count
    }

    /// `ζ_*(u)`: `m + 1` if some strict suffix `x` of `e(u)` has
    /// `S_u(x) = ⟨m+1, B⟩` with `A(x) ⊆ B`, otherwise `m = ι_*(u)`.
    pub fn zeta(&self) -> BigUint {
        let m = self.iota();
        if self.entries[0].rest.is_empty() {
            return m.clone();
        }
        let next = m + 1u32;
        let mut ax = ByteSet::EMPTY;
        for k in 1..self.e.len() {
            ax.insert(self.e[self.e.len() - k]);
            let entry = &self.entries[k];
            if entry.count == next && ax.is_subset(&entry.rest) {
                return next;
            }
        }
        m.clone()
    }

    pub fn to_json(&self) -> SignatureJson {
        SignatureJson {
            e: bytes_to_text(&self.e),
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(k, entry)| EntryJson {
                    suffix: bytes_to_text(self.suffix(k)),
                    count: entry.count.to_string(),
                    rest: bytes_to_text(&entry.rest.to_bytes()),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SignatureJson) -> Result<Signature> {
        let bad = |msg: String| Error::MalformedSignature(msg);
        let e = text_to_bytes(&json.e).map_err(bad)?;
        let mut entries = Vec::with_capacity(json.entries.len());
        for (k, entry) in json.entries.iter().enumerate() {
            let suffix = text_to_bytes(&entry.suffix).map_err(bad)?;
            if k > e.len() || suffix != e[e.len() - k..] {
                return Err(bad(format!(
                    "entry {k} should be keyed by the suffix of e of length {k}"
                )));
            }
            let count: BigUint = entry.count.parse().map_err(|_| {
                bad(format!(
                    "entry {k}: count {:?} is not a natural",
                    entry.count
                ))
            })?;
            let rest = text_to_bytes(&entry.rest).map_err(bad)?;
            let rest_set: ByteSet = rest.iter().collect();
            if rest != rest_set.to_bytes() {
                return Err(bad(format!(
                    "entry {k}: rest must be sorted without repeats"
                )));
            }
            entries.push(Entry::new(count, rest_set));
        }
        Signature::from_parts(e, entries)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("signature serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Signature> {
        let json: SignatureJson =
            serde_json::from_str(s).map_err(|e| Error::MalformedSignature(e.to_string()))?;
        Self::from_json(&json)
    }
}

/// Free-function form of [`Signature::of_word`].
pub fn signature_of_word(u: &Word) -> Result<Signature> {
    Signature::of_word(u)
}

/// Free-function form of [`Signature::compose`].
pub fn compose(u: &Signature, v: &Signature) -> Signature {
    u.compose(v)
}

pub fn iota_from_signature(sig: &Signature) -> BigUint {
    sig.iota().clone()
}

pub fn zeta_from_signature(sig: &Signature) -> BigUint {
    sig.zeta()
}

/// Serialized form of a [`Signature`]. Counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub e: String,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub suffix: String,
    pub count: String,
    pub rest: String,
}

/// Maps each byte to the code point of the same value, so ASCII letters
/// read naturally and every byte round-trips.
pub fn bytes_to_text(bytes: &[u8]) -> String {
    bytes.iter().map(|&b| b as char).collect()
}

/// Inverse of [`bytes_to_text`].
pub fn text_to_bytes(text: &str) -> std::result::Result<Vec<u8>, String> {
    text.chars()
        .map(|c| u8::try_from(c).map_err(|_| format!("character {c:?} is not a byte")))
        .collect()
}
