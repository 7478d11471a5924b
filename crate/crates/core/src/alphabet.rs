use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a symbol within its alphabet.
pub type Sym = u32;

/// A finite ordered alphabet. The order of the symbols is canonical and is
/// the tie-breaker for every enumeration in the crate.
#[derive(Clone)]
pub struct Alphabet(Arc<Inner>);

struct Inner {
    symbols: Vec<String>,
    index: HashMap<String, Sym>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i as Sym).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet(Arc::new(Inner { symbols, index })))
    }

    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.0.symbols
    }

    pub fn symbol(&self, s: Sym) -> &str {
        &self.0.symbols[s as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<Sym> {
        self.0
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn parse_word<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a compact string such as `"0101"`; only valid when every
    /// symbol is a single character.
    pub fn parse_compact(&self, text: &str) -> Result<Word> {
        let names: Vec<String> = text.chars().map(|c| c.to_string()).collect();
        self.parse_word(&names)
    }

    pub fn check(&self, w: &[Sym]) -> Result<()> {
        match w.iter().find(|&&s| s as usize >= self.len()) {
            Some(&index) => Err(Error::SymbolOutOfRange {
                index,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn single_char(&self) -> bool {
        self.0.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Symbol names of `w`.
    pub fn names(&self, w: &[Sym]) -> Vec<String> {
        w.iter().map(|&s| self.symbol(s).to_string()).collect()
    }

    /// Human-readable rendering: plain concatenation for single-character
    /// alphabets, otherwise dot-separated.
    pub fn render(&self, w: &[Sym]) -> String {
        let sep = if self.single_char() { "" } else { "." };
        self.names(w).join(sep)
    }

    pub fn same_as(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.symbols == other.0.symbols
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.symbols.iter()).finish()
    }
}

/// A finite word of symbol indices. Words do not carry their alphabet;
/// validity is checked against an alphabet at API boundaries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Sym] {
        &self.0
    }

    pub fn is_factor_of(&self, other: &[Sym]) -> bool {
        self.0.is_empty() || other.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }
}

impl From<Vec<Sym>> for Word {
    fn from(v: Vec<Sym>) -> Self {
        Word(v)
    }
}

impl From<&[Sym]> for Word {
    fn from(v: &[Sym]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::ops::Deref for Word {
    type Target = [Sym];
    fn deref(&self) -> &[Sym] {
        &self.0
    }
}

impl std::borrow::Borrow<[Sym]> for Word {
    fn borrow(&self) -> &[Sym] {
        &self.0
    }
}
