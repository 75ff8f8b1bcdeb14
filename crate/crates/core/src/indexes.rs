//! Subword universality index `ι` and circular universality index `ζ`.

use crate::arch::scan_arches;
use crate::word::Word;

/// `ι(u)`: the number of arches of `u` over its reference alphabet.
pub fn iota(u: &Word) -> usize {
    scan_arches(u.letters().iter().copied(), u.alphabet().mask()).0
}

/// Outcome of an arch scan of one conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugateScan {
    pub iota: usize,
    /// Whether the rest of the conjugate's arch factorization is empty.
    pub rest_empty: bool,
}

/// `ι(u^{∼d})`, scanning from `d` and wrapping around the end of `u`.
///
/// # Panics
/// If `d > u.len()`.
pub fn iota_conjugate(u: &Word, d: usize) -> ConjugateScan {
    assert!(d <= u.len(), "cut {d} out of range");
    let letters = u.letters();
    let stream = letters[d..].iter().chain(&letters[..d]).copied();
    let (iota, rest) = scan_arches(stream, u.alphabet().mask());
    ConjugateScan {
        iota,
        rest_empty: rest.is_empty(),
    }
}

/// Knobs for [`zeta_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ZetaOptions {
    /// Scan every candidate conjugate instead of stopping early.
    pub exhaustive: bool,
}

/// `ζ(u)`: the largest `ι` over all conjugates of `u`.
pub fn zeta(u: &Word) -> usize {
    zeta_with(u, ZetaOptions::default())
}

/// `ζ(u)` with explicit options.
///
/// Only conjugates starting right after the first occurrence of a letter
/// are scanned, in increasing order. Unless `exhaustive` is set the search
/// stops once two distinct values were seen (the max is then known, since
/// conjugates differ by at most one) or once a conjugate with an empty
/// rest is found (no conjugate can beat it).
pub fn zeta_with(u: &Word, options: ZetaOptions) -> usize {
    let full = u.alphabet().mask();
    if u.letter_set() != full {
        return 0;
    }
    let mut seen = crate::alphabet::LetterSet::EMPTY;
    let mut best: Option<usize> = None;
    for (pos, &l) in u.letters().iter().enumerate() {
        if seen.contains(l) {
            continue;
        }
        seen.insert(l);
        let scan = iota_conjugate(u, pos + 1);
        if !options.exhaustive {
            if scan.rest_empty {
                return scan.iota;
            }
            if let Some(b) = best {
                if b != scan.iota {
                    return b.max(scan.iota);
                }
            }
        }
        best = Some(best.map_or(scan.iota, |b| b.max(scan.iota)));
        if seen == full {
            break;
        }
    }
    best.unwrap_or(0)
}
