use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised while building alphabets, words and signatures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has {0} letters, at most 64 are supported")]
    AlphabetTooLarge(usize),
    #[error("letter {} appears twice in the alphabet", show_byte(*.0))]
    DuplicateLetter(u8),
    #[error("letter {} at position {position} is not in the alphabet", show_byte(*.letter))]
    LetterOutsideAlphabet { letter: u8, position: usize },
    #[error("words are built over different alphabets")]
    AlphabetMismatch,
    #[error("cut {cut} is out of range for a word of length {len}")]
    CutOutOfRange { cut: usize, len: usize },
    #[error("the empty word has no signature")]
    EmptySignature,
    #[error("malformed signature: {0}")]
    MalformedSignature(String),
    #[error(transparent)]
    Slp(#[from] SlpError),
}

/// Errors raised while parsing or expanding a straight-line program.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlpError {
    #[error("line {line}: `{name}` is never defined")]
    UndefinedReference { line: usize, name: String },
    #[error("line {line}: `{name}` is used before its definition")]
    ForwardReference { line: usize, name: String },
    #[error("line {line}: `{name}` is already defined on line {first}")]
    DuplicateDefinition {
        line: usize,
        name: String,
        first: usize,
    },
    #[error("line {line}: malformed rule: {reason}")]
    MalformedRule { line: usize, reason: String },
    #[error("program has no rules")]
    EmptyProgram,
    #[error("expansion has length {0}, above the requested limit")]
    ExpansionTooLarge(BigUint),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn show_byte(b: u8) -> String {
    if b.is_ascii_graphic() {
        format!("'{}'", b as char)
    } else {
        format!("0x{b:02x}")
    }
}
