//! Alphabets and letter sets.
//!
//! Letters inside a [`Word`](crate::Word) are stored as indices into an
//! [`Alphabet`], so a set of letters fits in a single `u64`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_LETTERS: usize = 64;

const NO_INDEX: u8 = u8::MAX;

/// A set of letter indices, one bit per letter.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LetterSet(u64);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        LetterSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            LetterSet(u64::MAX)
        } else {
            LetterSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(letter: u8) -> Self {
        LetterSet(1u64 << letter)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn insert(&mut self, letter: u8) {
        self.0 |= 1u64 << letter;
    }

    #[inline]
    pub const fn contains(self, letter: u8) -> bool {
        self.0 & (1u64 << letter) != 0
    }

    pub const fn union(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 | other.0)
    }

    pub const fn is_subset(self, other: LetterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<u8> for LetterSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = LetterSet::EMPTY;
        for l in iter {
            set.insert(l);
        }
        set
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered set of at most 64 distinct byte-valued letters.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<u8>,
    index: [u8; 256],
}

impl Alphabet {
    /// Builds an alphabet keeping the given letter order.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > MAX_LETTERS {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        let mut index = [NO_INDEX; 256];
        for (i, &b) in symbols.iter().enumerate() {
            if index[b as usize] != NO_INDEX {
                return Err(Error::DuplicateLetter(b));
            }
            index[b as usize] = i as u8;
        }
        Ok(Alphabet {
            symbols: symbols.to_vec(),
            index,
        })
    }

    /// The letters occurring in `bytes`, in increasing byte order.
    pub fn infer(bytes: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in bytes {
            seen[b as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Self::new(&symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false: empty alphabets are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn symbol(&self, letter: u8) -> u8 {
        self.symbols[letter as usize]
    }

    pub fn index_of(&self, symbol: u8) -> Option<u8> {
        match self.index[symbol as usize] {
            NO_INDEX => None,
            i => Some(i),
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.index_of(symbol).is_some()
    }

    /// Membership mask: one bit per letter of the alphabet.
    pub fn mask(&self) -> LetterSet {
        LetterSet::full(self.symbols.len())
    }

    /// Bytes of the letters in `set`, in alphabet order.
    pub fn render(&self, set: LetterSet) -> Vec<u8> {
        set.iter().map(|l| self.symbol(l)).collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", String::from_utf8_lossy(&self.symbols))
    }
}
