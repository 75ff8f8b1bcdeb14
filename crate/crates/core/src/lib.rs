//! Subword universality indexes of words.
//!
//! * [`arch`]: arch and co-arch factorizations, arch-jumping functions.
//! * [`indexes`]: `ι(u)` and the circular index `ζ(u)` in `O(|A|·|u|)`.
//! * [`signature`]: composable summaries `Σ(u)` from which `ι` and `ζ`
//!   can be read, so `Σ(u·v)` follows from `Σ(u)` and `Σ(v)`.
//! * [`slp`]: the same indexes for grammar-compressed words, computed
//!   rule by rule without decompressing.
//! * [`testkit`]: brute-force oracles and generators.
//!
//! ```
//! use subwords::{Word, indexes};
//!
//! let u = Word::new(b"aabb").unwrap();
//! assert_eq!(indexes::iota(&u), 1);
//! assert_eq!(indexes::zeta(&u), 2);
//! ```

pub mod alphabet;
pub mod arch;
pub mod error;
pub mod indexes;
pub mod signature;
pub mod slp;
pub mod testkit;
pub mod word;

pub use alphabet::{Alphabet, LetterSet};
pub use arch::{alpha, alpha_iter, arch_factorize, beta, coarch_factorize, ArchFactorization};
pub use error::{Error, Result, SlpError};
pub use indexes::{iota, iota_conjugate, zeta, zeta_with, ZetaOptions};
pub use signature::{ByteSet, Signature};
pub use slp::{Slp, SlpIndexes};
pub use word::Word;
