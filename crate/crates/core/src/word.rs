//! Finite words over an [`Alphabet`].

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, LetterSet};
use crate::error::{Error, Result};

/// A finite word, stored as letter indices into its reference alphabet.
///
/// The alphabet attached to a word is the universe `A` used by every
/// richness-based notion (arches, rests, universality indexes). Cut
/// positions run over `0..=len()`.
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: Arc<Alphabet>,
}

impl Word {
    /// Builds a word whose reference alphabet is the set of its own letters.
    ///
    /// Fails on the empty word, whose inferred alphabet would be empty.
    pub fn new(bytes: &[u8]) -> Result<Self> {
        let alphabet = Arc::new(Alphabet::infer(bytes)?);
        Self::with_alphabet(bytes, alphabet)
    }

    /// Builds a word over an explicit reference alphabet.
    pub fn with_alphabet(bytes: &[u8], alphabet: impl Into<Arc<Alphabet>>) -> Result<Self> {
        let alphabet = alphabet.into();
        let letters = bytes
            .iter()
            .enumerate()
            .map(|(position, &b)| {
                alphabet.index_of(b).ok_or(Error::LetterOutsideAlphabet {
                    letter: b,
                    position,
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { letters, alphabet })
    }

    pub(crate) fn from_letters(letters: Vec<u8>, alphabet: Arc<Alphabet>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Word { letters, alphabet }
    }

    /// Same letters, re-expressed over another reference alphabet.
    pub fn rebase(&self, alphabet: impl Into<Arc<Alphabet>>) -> Result<Self> {
        Self::with_alphabet(&self.to_bytes(), alphabet)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter indices into [`Word::alphabet`].
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn shared_alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.letters
            .iter()
            .map(|&l| self.alphabet.symbol(l))
            .collect()
    }

    /// `A(u)`, the set of letters occurring in the word.
    pub fn letter_set(&self) -> LetterSet {
        self.letters.iter().copied().collect()
    }

    /// True when every letter of the reference alphabet occurs.
    pub fn is_rich(&self) -> bool {
        self.letter_set() == self.alphabet.mask()
    }

    fn check_cut(&self, cut: usize) -> Result<()> {
        if cut > self.len() {
            Err(Error::CutOutOfRange {
                cut,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The factor `u(i, j)`, defined for `i <= j <= len()`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        self.check_cut(j)?;
        if i > j {
            return Err(Error::CutOutOfRange { cut: i, len: j });
        }
        Ok(Word::from_letters(
            self.letters[i..j].to_vec(),
            self.alphabet.clone(),
        ))
    }

    /// The `i`-th conjugate `u(i, ℓ) u(0, i)`.
    pub fn conjugate(&self, i: usize) -> Result<Word> {
        self.check_cut(i)?;
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[i..]);
        letters.extend_from_slice(&self.letters[..i]);
        Ok(Word::from_letters(letters, self.alphabet.clone()))
    }

    pub fn mirror(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_letters(letters, self.alphabet.clone())
    }

    /// Concatenation of two words over the same alphabet.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_letters(letters, self.alphabet.clone()))
    }

    /// `e(u)`: the distinct letters in order of first occurrence.
    pub fn first_occurrence_order(&self) -> Word {
        let mut seen = LetterSet::EMPTY;
        let mut out = Vec::new();
        for &l in &self.letters {
            if !seen.contains(l) {
                seen.insert(l);
                out.push(l);
            }
        }
        Word::from_letters(out, self.alphabet.clone())
    }

    /// `f(u)`: the distinct letters in order of last occurrence.
    pub fn last_occurrence_order(&self) -> Word {
        let mut seen = LetterSet::EMPTY;
        let mut out = Vec::new();
        for &l in self.letters.iter().rev() {
            if !seen.contains(l) {
                seen.insert(l);
                out.push(l);
            }
        }
        out.reverse();
        Word::from_letters(out, self.alphabet.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.to_bytes()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?} over {:?})", self.to_string(), self.alphabet)
    }
}
