//! Straight-line programs and their universality indexes.
//!
//! A program is a list of rules `N_i → a` or `N_i → N_j N_k` with
//! `j, k < i`; the last rule is the root. Text format, one rule per line:
//!
//! ```text
//! # comment
//! A = 'a'
//! B = 'b'
//! X = A B
//! ```
//!
//! Identifiers match `[A-Za-z_][A-Za-z0-9_]*`; a leaf is any single byte
//! other than `'` and newline between single quotes; spaces and tabs may
//! surround every token. Blank lines and lines starting with `#` are skipped.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Result, SlpError};
use crate::signature::{ByteSet, Signature};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Leaf(u8),
    Concat(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slp {
    rules: Vec<Rule>,
    names: Vec<String>,
}

/// `ι` and `ζ` of an expansion, as arbitrary-precision naturals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlpIndexes {
    pub iota: BigUint,
    pub zeta: BigUint,
}

impl Slp {
    /// Builds a program from rules, naming rule `i` as `X{i+1}`.
    pub fn from_rules(rules: Vec<Rule>) -> std::result::Result<Slp, SlpError> {
        let names = (1..=rules.len()).map(|i| format!("X{i}")).collect();
        Self::with_names(rules, names)
    }

    pub fn with_names(rules: Vec<Rule>, names: Vec<String>) -> std::result::Result<Slp, SlpError> {
        assert_eq!(rules.len(), names.len());
        if rules.is_empty() {
            return Err(SlpError::EmptyProgram);
        }
        let mut seen = HashMap::new();
        for (i, (rule, name)) in rules.iter().zip(&names).enumerate() {
            let line = i + 1;
            if !is_ident(name.as_bytes()) {
                return Err(SlpError::MalformedRule {
                    line,
                    reason: format!("`{name}` is not an identifier"),
                });
            }
            if let Some(first) = seen.insert(name.as_str(), line) {
                return Err(SlpError::DuplicateDefinition {
                    line,
                    name: name.clone(),
                    first,
                });
            }
            match *rule {
                Rule::Leaf(b'\'') | Rule::Leaf(b'\n') => {
                    return Err(SlpError::MalformedRule {
                        line,
                        reason: "leaf letter cannot be a quote or a newline".into(),
                    })
                }
                Rule::Leaf(_) => {}
                Rule::Concat(j, k) => {
                    for r in [j, k] {
                        if r >= i {
                            return Err(SlpError::ForwardReference {
                                line,
                                name: names.get(r).cloned().unwrap_or_else(|| format!("#{r}")),
                            });
                        }
                    }
                }
            }
        }
        Ok(Slp { rules, names })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// Always false: empty programs are rejected.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn root(&self) -> usize {
        self.rules.len() - 1
    }

    /// Which rules the root depends on (including itself).
    pub fn reachable(&self) -> Vec<bool> {
        let mut reach = vec![false; self.rules.len()];
        reach[self.root()] = true;
        for i in (0..self.rules.len()).rev() {
            if let (true, Rule::Concat(j, k)) = (reach[i], self.rules[i]) {
                reach[j] = true;
                reach[k] = true;
            }
        }
        reach
    }

    /// Expansion length of every rule.
    pub fn lengths(&self) -> Vec<BigUint> {
        let mut lens: Vec<BigUint> = Vec::with_capacity(self.rules.len());
        for rule in &self.rules {
            let len = match *rule {
                Rule::Leaf(_) => BigUint::from(1u32),
                Rule::Concat(j, k) => &lens[j] + &lens[k],
            };
            lens.push(len);
        }
        lens
    }

    /// `|exp(X)|`.
    pub fn expansion_length(&self) -> BigUint {
        self.lengths().pop().expect("nonempty program")
    }

    /// The expansion as raw bytes, refusing when it exceeds `max_len`.
    pub fn expand_bytes(&self, max_len: usize) -> std::result::Result<Vec<u8>, SlpError> {
        let total = self.expansion_length();
        match total.to_usize() {
            Some(n) if n <= max_len => {}
            _ => return Err(SlpError::ExpansionTooLarge(total)),
        }
        let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
        let mut stack = vec![self.root()];
        while let Some(i) = stack.pop() {
            match self.rules[i] {
                Rule::Leaf(b) => out.push(b),
                Rule::Concat(j, k) => {
                    stack.push(k);
                    stack.push(j);
                }
            }
        }
        Ok(out)
    }

    /// The expansion as a word over its own alphabet `A(exp(X))`.
    pub fn expand(&self, max_len: usize) -> Result<Word> {
        Word::new(&self.expand_bytes(max_len)?)
    }

    /// `Σ(exp(N_i))` for the root, built bottom-up without expanding.
    pub fn root_signature(&self) -> Signature {
        let reach = self.reachable();
        let mut sigs: Vec<Option<Signature>> = vec![None; self.rules.len()];
        for (i, rule) in self.rules.iter().enumerate() {
            if !reach[i] {
                continue;
            }
            let sig = match *rule {
                Rule::Leaf(b) => leaf_signature(b),
                Rule::Concat(j, k) => {
                    let left = sigs[j].as_ref().expect("children come first");
                    let right = sigs[k].as_ref().expect("children come first");
                    left.compose(right)
                }
            };
            sigs[i] = Some(sig);
        }
        sigs.pop().flatten().expect("root is reachable")
    }

    /// `ι(exp(X))` and `ζ(exp(X))` over `A(exp(X))`.
    pub fn indexes(&self) -> SlpIndexes {
        let sig = self.root_signature();
        SlpIndexes {
            iota: sig.iota().clone(),
            zeta: sig.zeta(),
        }
    }

    /// Letters of the expansion.
    pub fn letters(&self) -> ByteSet {
        let reach = self.reachable();
        self.rules
            .iter()
            .zip(reach)
            .filter_map(|(r, live)| match (r, live) {
                (Rule::Leaf(b), true) => Some(*b),
                _ => None,
            })
            .collect()
    }
}

fn leaf_signature(b: u8) -> Signature {
    Signature::of_word(&Word::new(&[b]).expect("one-letter word")).expect("nonempty word")
}

pub fn parse_slp(text: &str) -> std::result::Result<Slp, SlpError> {
    text.parse()
}

pub fn expansion_length(slp: &Slp) -> BigUint {
    slp.expansion_length()
}

pub fn slp_indexes(slp: &Slp) -> SlpIndexes {
    slp.indexes()
}

fn is_ident(s: &[u8]) -> bool {
    match s.split_first() {
        Some((first, rest)) => {
            (first.is_ascii_alphabetic() || *first == b'_')
                && rest.iter().all(|c| c.is_ascii_alphanumeric() || *c == b'_')
        }
        None => false,
    }
}

enum Rhs<'a> {
    Leaf(u8),
    Concat(&'a str, &'a str),
}

struct ParsedLine<'a> {
    line: usize,
    name: &'a str,
    rhs: Rhs<'a>,
}

fn is_blank(c: u8) -> bool {
    c == b' ' || c == b'\t'
}

fn take_ident(s: &str) -> Option<(&str, &str)> {
    let end = s
        .bytes()
        .position(|c| !(c.is_ascii_alphanumeric() || c == b'_'))
        .unwrap_or(s.len());
    let (ident, rest) = s.split_at(end);
    is_ident(ident.as_bytes()).then_some((ident, rest))
}

fn skip_blanks(s: &str) -> &str {
    s.trim_start_matches([' ', '\t'])
}

fn parse_line(line: usize, raw: &str) -> std::result::Result<ParsedLine<'_>, SlpError> {
    let malformed = |reason: &str| SlpError::MalformedRule {
        line,
        reason: reason.to_string(),
    };
    let s = skip_blanks(raw);
    let (name, s) = take_ident(s).ok_or_else(|| malformed("expected an identifier"))?;
    let s = skip_blanks(s);
    let s = s
        .strip_prefix('=')
        .ok_or_else(|| malformed("expected `=` after the rule name"))?;
    let s = skip_blanks(s);
    let rhs = if let Some(quoted) = s.strip_prefix('\'') {
        let bytes = quoted.as_bytes();
        if bytes.len() < 2 || bytes[1] != b'\'' || bytes[0] == b'\'' {
            return Err(malformed("a leaf is a single byte between single quotes"));
        }
        if !bytes[2..].iter().all(|&c| is_blank(c)) {
            return Err(malformed("trailing characters after the leaf"));
        }
        Rhs::Leaf(bytes[0])
    } else {
        let (left, s) =
            take_ident(s).ok_or_else(|| malformed("expected a leaf or two identifiers"))?;
        let trimmed = skip_blanks(s);
        if trimmed.len() == s.len() {
            return Err(malformed("expected whitespace between identifiers"));
        }
        let (right, s) =
            take_ident(trimmed).ok_or_else(|| malformed("expected a second identifier"))?;
        if !skip_blanks(s).is_empty() {
            return Err(malformed("trailing characters after the rule"));
        }
        Rhs::Concat(left, right)
    };
    Ok(ParsedLine { line, name, rhs })
}

impl FromStr for Slp {
    type Err = SlpError;

    fn from_str(text: &str) -> std::result::Result<Slp, SlpError> {
        let mut parsed = Vec::new();
        let mut defined: HashMap<&str, (usize, usize)> = HashMap::new();
        for (n, raw) in text.split('\n').enumerate() {
            let line = n + 1;
            if raw.starts_with('#') || raw.bytes().all(is_blank) {
                continue;
            }
            let p = parse_line(line, raw)?;
            if let Some(&(_, first)) = defined.get(p.name) {
                return Err(SlpError::DuplicateDefinition {
                    line,
                    name: p.name.to_string(),
                    first,
                });
            }
            defined.insert(p.name, (parsed.len(), line));
            parsed.push(p);
        }
        if parsed.is_empty() {
            return Err(SlpError::EmptyProgram);
        }
        let mut rules = Vec::with_capacity(parsed.len());
        for (i, p) in parsed.iter().enumerate() {
            let rule = match p.rhs {
                Rhs::Leaf(b) => Rule::Leaf(b),
                Rhs::Concat(l, r) => {
                    let resolve = |name: &str| match defined.get(name) {
                        None => Err(SlpError::UndefinedReference {
                            line: p.line,
                            name: name.to_string(),
                        }),
                        Some(&(j, _)) if j >= i => Err(SlpError::ForwardReference {
                            line: p.line,
                            name: name.to_string(),
                        }),
                        Some(&(j, _)) => Ok(j),
                    };
                    Rule::Concat(resolve(l)?, resolve(r)?)
                }
            };
            rules.push(rule);
        }
        let names = parsed.iter().map(|p| p.name.to_string()).collect();
        Ok(Slp { rules, names })
    }
}

impl fmt::Display for Slp {
    /// Writes the text format. Only ASCII leaves survive a round trip, since
    /// the format is UTF-8 and a leaf is a single byte.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (rule, name) in self.rules.iter().zip(&self.names) {
            match *rule {
                Rule::Leaf(b) => writeln!(f, "{name} = '{}'", b as char)?,
                Rule::Concat(j, k) => writeln!(f, "{name} = {} {}", self.names[j], self.names[k])?,
            }
        }
        Ok(())
    }
}

/// A program for `w^(2^k)`: leaves for the letters of `w`, a left-leaning
/// chain building `w`, then `k` doubling rules.
pub fn power_of_two(word: &[u8], k: usize) -> Slp {
    assert!(!word.is_empty());
    let mut rules = Vec::new();
    let mut leaf_of = HashMap::new();
    for &b in word {
        leaf_of.entry(b).or_insert_with(|| {
            rules.push(Rule::Leaf(b));
            rules.len() - 1
        });
    }
    let mut acc = leaf_of[&word[0]];
    for b in &word[1..] {
        rules.push(Rule::Concat(acc, leaf_of[b]));
        acc = rules.len() - 1;
    }
    for _ in 0..k {
        rules.push(Rule::Concat(acc, acc));
        acc = rules.len() - 1;
    }
    Slp::from_rules(rules).expect("well-formed by construction")
}
