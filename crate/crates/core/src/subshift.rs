//! One-sided subshifts presented by forbidden words or labeled graphs.
//!
//! Every presentation is compiled once into a trimmed labeled graph and
//! its subset automaton; all language questions are answered exactly from
//! that automaton.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::automaton::{first_word_not_included, Dfa, LabeledGraph};
use crate::error::{Error, Result};
use crate::point::EpPoint;

/// Ordered set of words; iteration order is lexicographic for words of a
/// common length.
pub type Language = BTreeSet<Word>;

#[derive(Clone, Debug, PartialEq)]
pub enum Presentation {
    /// Shift of finite type: points avoid every listed word.
    ForbiddenWords { forbidden: BTreeSet<Word> },
    /// Sofic shift: label sequences of infinite paths.
    LabeledGraph {
        vertices: Vec<String>,
        edges: Vec<(usize, usize, Sym)>,
    },
}

#[derive(Clone)]
pub struct Subshift {
    alphabet: Alphabet,
    presentation: Presentation,
    graph: LabeledGraph,
    dfa: Dfa,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SftVerdict {
    IsNStepSft,
    /// Shortest, lexicographically least word allowed by the candidate
    /// N-step SFT but not by the shift.
    NotNStepSft(Word),
}

/// Result of higher-block recoding: a 1-step SFT over the allowed blocks.
#[derive(Clone, Debug)]
pub struct Recoding {
    pub shift: Subshift,
    pub blocks: Vec<Word>,
    /// Sends each block symbol to its first symbol in the original alphabet.
    pub first_symbol: Vec<Sym>,
}

impl Subshift {
    pub fn sft(alphabet: Alphabet, forbidden: impl IntoIterator<Item = Word>) -> Result<Self> {
        let forbidden: BTreeSet<Word> = forbidden.into_iter().collect();
        for w in &forbidden {
            if w.is_empty() {
                return Err(Error::InvalidPresentation(
                    "forbidden words must be nonempty".into(),
                ));
            }
            alphabet.check(w)?;
        }
        let graph = sft_graph(alphabet.len(), &forbidden).trimmed();
        Self::finish(alphabet, Presentation::ForbiddenWords { forbidden }, graph)
    }

    pub fn full(alphabet: Alphabet) -> Self {
        Self::sft(alphabet, []).expect("full shift is nonempty")
    }

    pub fn sofic(
        alphabet: Alphabet,
        vertices: Vec<String>,
        edges: Vec<(usize, usize, Sym)>,
    ) -> Result<Self> {
        for &(v, t, a) in &edges {
            if v >= vertices.len() || t >= vertices.len() {
                return Err(Error::InvalidPresentation(format!(
                    "edge ({v}, {t}) refers to a missing vertex"
                )));
            }
            alphabet.check(&[a])?;
        }
        let graph =
            LabeledGraph::new(alphabet.len(), vertices.len(), edges.iter().copied()).trimmed();
        Self::finish(
            alphabet,
            Presentation::LabeledGraph { vertices, edges },
            graph,
        )
    }

    /// 1-step SFT whose allowed 2-words are exactly `edges`.
    pub fn one_step(alphabet: Alphabet, edges: &BTreeSet<(Sym, Sym)>) -> Result<Self> {
        let n = alphabet.len() as Sym;
        let forbidden: Vec<Word> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|p| !edges.contains(p))
            .map(|(a, b)| Word(vec![a, b]))
            .collect();
        Self::sft(alphabet, forbidden)
    }

    fn finish(alphabet: Alphabet, presentation: Presentation, graph: LabeledGraph) -> Result<Self> {
        if graph.vertex_count() == 0 {
            return Err(Error::EmptyShift);
        }
        let dfa = Dfa::determinize(&graph);
        Ok(Subshift {
            alphabet,
            presentation,
            graph,
            dfa,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn is_sft_presentation(&self) -> bool {
        matches!(self.presentation, Presentation::ForbiddenWords { .. })
    }

    /// Length of the longest forbidden word, for SFT presentations.
    pub fn max_forbidden_len(&self) -> Option<usize> {
        match &self.presentation {
            Presentation::ForbiddenWords { forbidden } => {
                Some(forbidden.iter().map(Word::len).max().unwrap_or(0))
            }
            Presentation::LabeledGraph { .. } => None,
        }
    }

    /// Presented by forbidden words of length at most 2.
    pub fn is_one_step_presentation(&self) -> bool {
        self.max_forbidden_len().is_some_and(|k| k <= 2)
    }

    pub(crate) fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub(crate) fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn is_allowed(&self, w: &[Sym]) -> Result<bool> {
        self.alphabet.check(w)?;
        Ok(self.dfa.accepts(w))
    }

    pub(crate) fn allows(&self, w: &[Sym]) -> bool {
        self.dfa.accepts(w)
    }

    /// All allowed words of length `n`, in lexicographic order.
    pub fn language(&self, n: usize) -> Language {
        self.dfa.words(n).into_iter().map(Word).collect()
    }

    pub fn language_size(&self, n: usize) -> usize {
        // counting DP over automaton states
        let mut counts = vec![0u128; self.dfa.state_count()];
        counts[0] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; counts.len()];
            for (s, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for a in 0..self.alphabet.len() as Sym {
                    if let Some(t) = self.dfa.step(s, a) {
                        next[t] += c;
                    }
                }
            }
            counts = next;
        }
        counts.iter().sum::<u128>() as usize
    }

    /// Words of length at most `n` that are not allowed although every
    /// proper factor is.
    pub fn minimal_forbidden_words(&self, n: usize) -> Language {
        let mut out = Language::new();
        let k = self.alphabet.len() as Sym;
        if n >= 1 {
            for a in 0..k {
                if !self.allows(&[a]) {
                    out.insert(Word(vec![a]));
                }
            }
        }
        for len in 2..=n {
            for u in self.dfa.words(len - 1) {
                for a in 0..k {
                    let mut w = u.clone();
                    w.push(a);
                    if !self.allows(&w) && self.allows(&w[1..]) {
                        out.insert(Word(w));
                    }
                }
            }
        }
        out
    }

    /// Recodes an SFT as the 1-step SFT of its allowed `n`-blocks.
    pub fn higher_block_recode(&self, n: usize) -> Result<Recoding> {
        let k = self.max_forbidden_len().ok_or(Error::NotAnSft)?;
        let required = k.saturating_sub(1).max(1);
        if n < required {
            return Err(Error::BlockLengthTooSmall { n, required });
        }
        let blocks: Vec<Word> = self.language(n).into_iter().collect();
        let index: HashMap<&[Sym], Sym> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.letters(), i as Sym))
            .collect();
        let mut edges = BTreeSet::new();
        for w in self.dfa.words(n + 1) {
            edges.insert((index[&w[..n]], index[&w[1..]]));
        }
        let names: Vec<String> = blocks.iter().map(|b| self.alphabet.render(b)).collect();
        let alphabet = Alphabet::new(names)?;
        let shift = Subshift::one_step(alphabet, &edges)?;
        let first_symbol = blocks.iter().map(|b| b[0]).collect();
        Ok(Recoding {
            shift,
            blocks,
            first_symbol,
        })
    }

    /// Decides exactly whether the shift equals the N-step SFT built from
    /// its allowed (N+1)-words.
    pub fn is_sft_up_to(&self, n: usize) -> Result<SftVerdict> {
        if n == 0 {
            return Err(Error::Precondition("memory N must be at least 1".into()));
        }
        let candidate = self.candidate_sft_graph(n);
        let candidate = Dfa::determinize(&candidate);
        Ok(match first_word_not_included(&candidate, &self.dfa) {
            None => SftVerdict::IsNStepSft,
            Some(w) => SftVerdict::NotNStepSft(Word(w)),
        })
    }

    /// Graph presenting the sequences all of whose (N+1)-windows are
    /// allowed: vertices are allowed N-words, edges labeled by the first
    /// letter of their source.
    fn candidate_sft_graph(&self, n: usize) -> LabeledGraph {
        let vertices = self.dfa.words(n);
        let index: HashMap<&[Sym], usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_slice(), i))
            .collect();
        let mut edges = Vec::new();
        for (i, u) in vertices.iter().enumerate() {
            for a in 0..self.alphabet.len() as Sym {
                let mut w = u.clone();
                w.push(a);
                if self.allows(&w) {
                    edges.push((i, index[&w[1..]], u[0]));
                }
            }
        }
        LabeledGraph::new(self.alphabet.len(), vertices.len(), edges).trimmed()
    }

    /// Shortest, lexicographically least word allowed here but not in
    /// `other`; `None` iff this shift is a subshift of `other`.
    pub fn inclusion_witness(&self, other: &Subshift) -> Result<Option<Word>> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(first_word_not_included(&self.dfa, &other.dfa).map(Word))
    }

    /// Whether an eventually periodic point lies in the shift, i.e. every
    /// prefix is allowed.
    pub fn contains_point(&self, x: &EpPoint) -> Result<bool> {
        if x.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let Some(mut s) = self.dfa.run(x.preperiod()) else {
            return Ok(false);
        };
        let mut seen = std::collections::HashSet::new();
        while seen.insert(s) {
            match self.dfa.run_from(s, x.period()) {
                Some(t) => s = t,
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Lexicographically least point of the shift beginning with `w`.
    pub fn least_completion(&self, w: &[Sym]) -> Option<EpPoint> {
        let s = self.dfa.run(w)?;
        let (mut pre, period) = self.dfa.least_continuation(s);
        let mut prefix = w.to_vec();
        prefix.append(&mut pre);
        Some(EpPoint::new(self.alphabet.clone(), prefix, period).expect("period nonempty"))
    }

    pub fn render(&self, w: &[Sym]) -> String {
        self.alphabet.render(w)
    }
}

impl fmt::Debug for Subshift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subshift")
            .field("alphabet", &self.alphabet)
            .field("presentation", &self.presentation)
            .finish()
    }
}

impl PartialEq for Subshift {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.presentation == other.presentation
    }
}

/// Graph for a forbidden-word presentation: vertices are the
/// forbidden-free words of length `max_len - 1`, each edge labeled by the
/// first letter of its source.
fn sft_graph(n_symbols: usize, forbidden: &BTreeSet<Word>) -> LabeledGraph {
    let k = forbidden.iter().map(Word::len).max().unwrap_or(0);
    let memory = k.saturating_sub(1);
    let lookup: HashSet<&[Sym]> = forbidden.iter().map(|w| w.letters()).collect();
    let clean_suffix =
        |w: &[Sym]| (1..=w.len().min(k)).all(|l| !lookup.contains(&w[w.len() - l..]));
    if memory == 0 {
        let edges = (0..n_symbols as Sym)
            .filter(|&a| clean_suffix(&[a]))
            .map(|a| (0, 0, a));
        return LabeledGraph::new(n_symbols, 1, edges);
    }
    let mut vertices: Vec<Vec<Sym>> = vec![Vec::new()];
    for _ in 0..memory {
        let mut next = Vec::new();
        for v in &vertices {
            for a in 0..n_symbols as Sym {
                let mut w = v.clone();
                w.push(a);
                if clean_suffix(&w) {
                    next.push(w);
                }
            }
        }
        vertices = next;
    }
    let index: HashMap<&[Sym], usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, u) in vertices.iter().enumerate() {
        for a in 0..n_symbols as Sym {
            let mut w = u.clone();
            w.push(a);
            if clean_suffix(&w) {
                edges.push((i, index[&w[1..]], u[0]));
            }
        }
    }
    LabeledGraph::new(n_symbols, vertices.len(), edges)
}
