//! Finite partial words: symbols, compatibility, factors, hole expansion and
//! periodicity.
//!
//! Letters are stored as indices into an [`Alphabet`]; the alphabet is only
//! needed to parse and render text, and to know how many letters a hole can
//! stand for. Text uses `*` for a hole.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Text form of a hole.
pub const HOLE_CHAR: char = '*';

/// Default cap on the number of holes expanded in a single factor.
pub const DEFAULT_EXPANSION_CAP: usize = 20;

/// An ordered set of at least two distinct letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.len() < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "need at least two letters, got {}",
                letters.len()
            )));
        }
        if letters.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet(format!("{} letters is too many", letters.len())));
        }
        for (i, &c) in letters.iter().enumerate() {
            if c == HOLE_CHAR {
                return Err(Error::InvalidAlphabet(format!("`{HOLE_CHAR}` is the hole marker")));
            }
            if c.is_whitespace() || c == ':' {
                return Err(Error::InvalidAlphabet(format!("{c:?} cannot be a letter")));
            }
            if letters[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("letter {c:?} repeated")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars())
    }

    /// The alphabet `{a, b}` used by every preset family.
    pub fn binary() -> Self {
        Alphabet { letters: vec!['a', 'b'] }
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: u8) -> char {
        self.letters[index as usize]
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.letters.iter().position(|&l| l == c).map(|i| i as u8)
    }

    pub fn parse_letter(&self, c: char) -> Result<u8> {
        self.index_of(c).ok_or_else(|| Error::Parse {
            text: c.to_string(),
            reason: format!("not a letter of alphabet `{self}`"),
        })
    }

    /// `k^n`, saturating.
    pub fn word_count(&self, n: usize) -> u128 {
        let k = self.size() as u128;
        let mut acc: u128 = 1;
        for _ in 0..n {
            acc = acc.saturating_mul(k);
        }
        acc
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl TryFrom<String> for Alphabet {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Alphabet::parse(&s)
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Letter(u8),
    Hole,
}

impl Symbol {
    pub fn is_hole(self) -> bool {
        matches!(self, Symbol::Hole)
    }

    pub fn letter(self) -> Option<u8> {
        match self {
            Symbol::Letter(l) => Some(l),
            Symbol::Hole => None,
        }
    }

    pub fn compatible(self, other: Symbol) -> bool {
        match (self, other) {
            (Symbol::Letter(a), Symbol::Letter(b)) => a == b,
            _ => true,
        }
    }

    /// Compatibility with a letter of a full word.
    #[inline]
    pub fn matches(self, letter: u8) -> bool {
        match self {
            Symbol::Letter(a) => a == letter,
            Symbol::Hole => true,
        }
    }
}

/// A finite word over `alphabet ∪ {hole}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartialWord {
    symbols: Vec<Symbol>,
}

impl PartialWord {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        PartialWord { symbols }
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let symbols = text
            .chars()
            .map(|c| {
                if c == HOLE_CHAR {
                    Ok(Symbol::Hole)
                } else {
                    alphabet.index_of(c).map(Symbol::Letter).ok_or_else(|| Error::Parse {
                        text: text.to_string(),
                        reason: format!("{c:?} is neither `{HOLE_CHAR}` nor a letter of `{alphabet}`"),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartialWord { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> Option<Symbol> {
        self.symbols.get(i).copied()
    }

    pub fn hole_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_hole()).count()
    }

    pub fn hole_positions(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.is_hole().then_some(i))
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.symbols.iter().all(|s| !s.is_hole())
    }

    pub fn to_full(&self) -> Option<FullWord> {
        self.symbols.iter().map(|s| s.letter()).collect::<Option<Vec<_>>>().map(FullWord)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                Symbol::Letter(l) => alphabet.letter(*l),
                Symbol::Hole => HOLE_CHAR,
            })
            .collect()
    }

    /// Equal length and agreement wherever both words are defined.
    pub fn compatible(&self, other: &PartialWord) -> bool {
        self.len() == other.len()
            && self.symbols.iter().zip(&other.symbols).all(|(a, b)| a.compatible(*b))
    }

    /// The half-open factor `w[start..end)`.
    pub fn factor(&self, start: usize, end: usize) -> Result<PartialWord> {
        if start > end || end > self.len() {
            return Err(Error::Range { start, end, len: self.len() });
        }
        Ok(PartialWord { symbols: self.symbols[start..end].to_vec() })
    }

    pub fn truncated(&self, len: usize) -> PartialWord {
        PartialWord { symbols: self.symbols[..len.min(self.len())].to_vec() }
    }

    /// Whether defined positions congruent mod `p` always carry the same
    /// letter.
    pub fn is_p_periodic(&self, p: usize) -> Result<bool> {
        if p == 0 {
            return Err(Error::Argument("period must be positive".into()));
        }
        Ok(periodic_from(&self.symbols, 0, p))
    }

    /// Every way of filling the holes, in lexicographic fill order (the first
    /// hole varies slowest).
    pub fn completions(&self, alphabet: &Alphabet, cap: usize) -> Result<Completions> {
        let holes = self.hole_positions();
        if holes.len() > cap {
            return Err(Error::ExpansionCap { holes: holes.len(), cap });
        }
        Ok(Completions::new(self, holes, alphabet.size() as u8))
    }

    /// The set of all completions; exactly `k^holes` distinct full words.
    pub fn completions_of(&self, alphabet: &Alphabet, cap: usize) -> Result<BTreeSet<FullWord>> {
        Ok(self.completions(alphabet, cap)?.collect())
    }

    /// Replaces every hole after the first `keep` holes with `letter`.
    pub fn with_holes_after_filled(&self, keep: usize, letter: u8) -> PartialWord {
        let mut seen = 0;
        let symbols = self
            .symbols
            .iter()
            .map(|&s| {
                if s.is_hole() {
                    seen += 1;
                    if seen > keep {
                        return Symbol::Letter(letter);
                    }
                }
                s
            })
            .collect();
        PartialWord { symbols }
    }
}

impl From<FullWord> for PartialWord {
    fn from(w: FullWord) -> Self {
        PartialWord { symbols: w.0.into_iter().map(Symbol::Letter).collect() }
    }
}

impl FromIterator<Symbol> for PartialWord {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        PartialWord { symbols: iter.into_iter().collect() }
    }
}

/// Whether positions `>= start` of `symbols` are consistent with period `p`.
pub(crate) fn periodic_from(symbols: &[Symbol], start: usize, p: usize) -> bool {
    let mut class: Vec<Option<u8>> = vec![None; p];
    for (offset, s) in symbols.iter().skip(start).enumerate() {
        if let Symbol::Letter(l) = *s {
            let slot = &mut class[offset % p];
            match *slot {
                Some(prev) if prev != l => return false,
                Some(_) => {}
                None => *slot = Some(l),
            }
        }
    }
    true
}

/// A word without holes, stored as letter indices.
///
/// The derived ordering is lexicographic by letter index, which is the
/// deterministic order used for all reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FullWord(pub Vec<u8>);

impl FullWord {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        text.chars().map(|c| alphabet.parse_letter(c)).collect::<Result<Vec<_>>>().map(FullWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.0.iter().map(|&l| alphabet.letter(l)).collect()
    }

    /// Whether this word is compatible with `w[i..i+len)`.
    pub fn occurs_at(&self, w: &PartialWord, i: usize) -> bool {
        matches_at(&self.0, w.symbols(), i)
    }

    pub fn is_subword_of(&self, w: &PartialWord) -> bool {
        !self.is_empty() && (0..w.len()).any(|i| self.occurs_at(w, i))
    }

    /// All start positions where the word occurs.
    pub fn occurrences_in(&self, w: &PartialWord) -> Vec<usize> {
        (0..w.len()).filter(|&i| self.occurs_at(w, i)).collect()
    }

    pub fn letter_count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

#[inline]
pub(crate) fn matches_at(word: &[u8], symbols: &[Symbol], i: usize) -> bool {
    i + word.len() <= symbols.len()
        && symbols[i..i + word.len()].iter().zip(word).all(|(s, &l)| s.matches(l))
}

/// Iterator over the completions of a partial word; see
/// [`PartialWord::completions`].
#[derive(Clone, Debug)]
pub struct Completions {
    current: Vec<u8>,
    holes: Vec<usize>,
    k: u8,
    done: bool,
}

impl Completions {
    fn new(w: &PartialWord, holes: Vec<usize>, k: u8) -> Self {
        let current = w.symbols.iter().map(|s| s.letter().unwrap_or(0)).collect();
        Completions { current, holes, k, done: false }
    }

    pub fn hole_count(&self) -> usize {
        self.holes.len()
    }
}

impl Iterator for Completions {
    type Item = FullWord;

    fn next(&mut self) -> Option<FullWord> {
        if self.done {
            return None;
        }
        let out = FullWord(self.current.clone());
        // odometer, last hole fastest
        let mut carry = true;
        for &h in self.holes.iter().rev() {
            if self.current[h] + 1 < self.k {
                self.current[h] += 1;
                carry = false;
                break;
            }
            self.current[h] = 0;
        }
        if carry {
            self.done = true;
        }
        Some(out)
    }
}
