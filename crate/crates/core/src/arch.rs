//! Arch factorizations and the arch-jumping functions `α` and `β`.
//!
//! An arch is a rich factor none of whose strict prefixes is rich. Every
//! word factors uniquely as `s_1 ⋯ s_m · r` with arches `s_k` and an
//! incomplete rest `r`, and the cumulative arch ends are `λ_k = α^k(0)`.

use crate::alphabet::LetterSet;
use crate::word::Word;

/// Greedy arch scan over a letter stream.
///
/// Returns the number of arches closed and the letters of the trailing
/// incomplete part. `full` must be nonempty.
#[inline]
pub(crate) fn scan_arches(
    letters: impl Iterator<Item = u8>,
    full: LetterSet,
) -> (usize, LetterSet) {
    let full = full.bits();
    let mut seen = 0u64;
    let mut arches = 0usize;
    for l in letters {
        seen |= 1u64 << l;
        if seen == full {
            arches += 1;
            seen = 0;
        }
    }
    (arches, LetterSet::from_bits(seen))
}

/// Cut positions of the arch factorization of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchFactorization {
    lambdas: Vec<usize>,
    rest_start: usize,
    source_len: usize,
}

impl ArchFactorization {
    /// Cumulative arch ends `λ_1 < … < λ_m`.
    pub fn lambdas(&self) -> &[usize] {
        &self.lambdas
    }

    /// Number of arches, which is `ι(u)`.
    pub fn arch_count(&self) -> usize {
        self.lambdas.len()
    }

    pub fn rest_start(&self) -> usize {
        self.rest_start
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn rest_is_empty(&self) -> bool {
        self.rest_start == self.source_len
    }

    /// `(start, end)` of each arch.
    pub fn arch_ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let starts = std::iter::once(0).chain(self.lambdas.iter().copied());
        starts.zip(self.lambdas.iter().copied())
    }

    /// The arches and the rest as words.
    pub fn split(&self, u: &Word) -> (Vec<Word>, Word) {
        assert_eq!(u.len(), self.source_len, "factorization of another word");
        let arches = self
            .arch_ranges()
            .map(|(i, j)| u.factor(i, j).expect("cuts are in range"))
            .collect();
        let rest = u
            .factor(self.rest_start, self.source_len)
            .expect("cuts are in range");
        (arches, rest)
    }
}

/// Leftmost-greedy arch factorization over the word's reference alphabet.
pub fn arch_factorize(u: &Word) -> ArchFactorization {
    let full = u.alphabet().mask().bits();
    let mut seen = 0u64;
    let mut lambdas = Vec::new();
    for (pos, &l) in u.letters().iter().enumerate() {
        seen |= 1u64 << l;
        if seen == full {
            lambdas.push(pos + 1);
            seen = 0;
        }
    }
    ArchFactorization {
        rest_start: lambdas.last().copied().unwrap_or(0),
        lambdas,
        source_len: u.len(),
    }
}

/// Co-arch factorization `r′ · s′_m ⋯ s′_1`: an incomplete leading factor
/// followed by co-arches, each of whose first letter occurs once in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoArchFactorization {
    starts: Vec<usize>,
    rest_end: usize,
    source_len: usize,
}

impl CoArchFactorization {
    /// Co-arch start positions read from the right: `starts[0]` opens the
    /// last co-arch, and `starts[k]` is `|u| - λ_{k+1}` of the mirror word.
    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn coarch_count(&self) -> usize {
        self.starts.len()
    }

    /// The leading incomplete factor is `u(0, rest_end)`.
    pub fn rest_end(&self) -> usize {
        self.rest_end
    }

    /// `(start, end)` of each co-arch, left to right.
    pub fn coarch_ranges(&self) -> Vec<(usize, usize)> {
        let ends = std::iter::once(self.source_len).chain(self.starts.iter().copied());
        let mut ranges: Vec<_> = self.starts.iter().copied().zip(ends).collect();
        ranges.reverse();
        ranges
    }
}

/// Co-arch factorization, obtained by factorizing the mirror word and
/// reflecting the cuts back.
pub fn coarch_factorize(u: &Word) -> CoArchFactorization {
    let mirrored = arch_factorize(&u.mirror());
    let n = u.len();
    CoArchFactorization {
        starts: mirrored.lambdas.iter().map(|&l| n - l).collect(),
        rest_end: n - mirrored.rest_start,
        source_len: n,
    }
}

/// `α(i)`: the least cut `j` such that `u(i, j)` is rich, if any.
///
/// # Panics
/// If `i > u.len()`.
pub fn alpha(u: &Word, i: usize) -> Option<usize> {
    assert!(i <= u.len(), "cut {i} out of range");
    let full = u.alphabet().mask().bits();
    let mut seen = 0u64;
    for (off, &l) in u.letters()[i..].iter().enumerate() {
        seen |= 1u64 << l;
        if seen == full {
            return Some(i + off + 1);
        }
    }
    None
}

/// `β(j)`: the greatest cut `i` such that `u(i, j)` is rich, if any.
///
/// # Panics
/// If `j > u.len()`.
pub fn beta(u: &Word, j: usize) -> Option<usize> {
    assert!(j <= u.len(), "cut {j} out of range");
    let full = u.alphabet().mask().bits();
    let mut seen = 0u64;
    for i in (0..j).rev() {
        seen |= 1u64 << u.letters()[i];
        if seen == full {
            return Some(i);
        }
    }
    None
}

/// `α^n(i)`; `α^0(i) = i`.
pub fn alpha_iter(u: &Word, i: usize, n: usize) -> Option<usize> {
    let mut at = i;
    for _ in 0..n {
        at = alpha(u, at)?;
    }
    Some(at)
}

/// Precomputed `α` and `β` for every cut of a word, in `O(|u| + |A|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpTable {
    alpha: Vec<Option<usize>>,
    beta: Vec<Option<usize>>,
}

impl JumpTable {
    pub fn new(u: &Word) -> Self {
        let n = u.len();
        let forward = sliding_alpha(u.letters(), u.alphabet().len());
        let reversed: Vec<u8> = u.letters().iter().rev().copied().collect();
        let backward = sliding_alpha(&reversed, u.alphabet().len());
        let beta = (0..=n).map(|j| backward[n - j].map(|k| n - k)).collect();
        JumpTable {
            alpha: forward,
            beta,
        }
    }

    pub fn alpha(&self, i: usize) -> Option<usize> {
        self.alpha[i]
    }

    pub fn beta(&self, j: usize) -> Option<usize> {
        self.beta[j]
    }
}

// Two pointers: α is monotone, so the right end never moves back.
fn sliding_alpha(letters: &[u8], k: usize) -> Vec<Option<usize>> {
    let n = letters.len();
    let mut counts = vec![0usize; k];
    let mut distinct = 0;
    let mut j = 0;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        while distinct < k && j < n {
            let l = letters[j] as usize;
            if counts[l] == 0 {
                distinct += 1;
            }
            counts[l] += 1;
            j += 1;
        }
        out.push((distinct == k).then_some(j));
        if i < n {
            let l = letters[i] as usize;
            counts[l] -= 1;
            if counts[l] == 0 {
                distinct -= 1;
            }
        }
    }
    out
}
