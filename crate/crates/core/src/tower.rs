//! Inverse sequences of 1-step SFTs with letter-map bondings, threads of
//! the inverse limit at finite depth, and the two tower constructions from
//! cover sequences.

use std::collections::BTreeSet;

use crate::alphabet::{Sym, Word};
use crate::automaton::{first_word_not_included, Dfa};
use crate::circle::ClosedSet;
use crate::cover::{map_language, star_selection, CellShape, Cover, StarSelection};
use crate::error::{Error, Result};
use crate::numeric::{dyadic, Rational};
use crate::shadowing::cover_criterion;
use crate::subshift::Subshift;
use crate::system::System;

/// Levels `X_0, …, X_k` (1-step SFTs) with bondings
/// `g_n : alphabet(X_{n+1}) → alphabet(X_n)`.
#[derive(Clone, Debug)]
pub struct SftTower {
    levels: Vec<Subshift>,
    bondings: Vec<Vec<Sym>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerVerdict {
    Valid,
    /// An allowed word of `X_{level+1}` whose image is not allowed in
    /// `X_level`.
    EdgeNotMapped {
        level: usize,
        word: Word,
    },
    /// A word of `X_level` outside the image of `X_{level+1}`.
    NotSurjective {
        level: usize,
        word: Word,
    },
}

/// Compatible words `u_0, …, u_k` of a common length, `u_n = g_n(u_{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Thread {
    pub words: Vec<Word>,
}

impl Thread {
    pub fn depth(&self) -> usize {
        self.words.len() - 1
    }

    pub fn top(&self) -> &Word {
        self.words.last().unwrap()
    }
}

impl SftTower {
    pub fn new(levels: Vec<Subshift>, bondings: Vec<Vec<Sym>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidTower(
                "a tower needs at least one level".into(),
            ));
        }
        if bondings.len() + 1 != levels.len() {
            return Err(Error::InvalidTower(format!(
                "{} levels need {} bondings, got {}",
                levels.len(),
                levels.len() - 1,
                bondings.len()
            )));
        }
        for (n, x) in levels.iter().enumerate() {
            if !x.is_one_step_presentation() {
                return Err(Error::InvalidTower(format!(
                    "level {n} is not presented as a 1-step SFT"
                )));
            }
        }
        for (n, g) in bondings.iter().enumerate() {
            if g.len() != levels[n + 1].alphabet().len() {
                return Err(Error::InvalidTower(format!(
                    "bonding {n} has {} entries for {} symbols",
                    g.len(),
                    levels[n + 1].alphabet().len()
                )));
            }
            levels[n].alphabet().check(g)?;
        }
        Ok(SftTower { levels, bondings })
    }

    pub fn levels(&self) -> &[Subshift] {
        &self.levels
    }

    pub fn bondings(&self) -> &[Vec<Sym>] {
        &self.bondings
    }

    /// Index of the top level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn bond(&self, n: usize, w: &[Sym]) -> Word {
        Word(w.iter().map(|&s| self.bondings[n][s as usize]).collect())
    }

    /// Checks that every bonding maps allowed 2-words to allowed 2-words
    /// and is onto the lower level's language, both exactly.
    pub fn validate(&self) -> TowerVerdict {
        for n in 0..self.bondings.len() {
            let (lower, upper) = (&self.levels[n], &self.levels[n + 1]);
            for len in 1..=2 {
                for w in upper.language(len) {
                    if !lower.allows(&self.bond(n, &w)) {
                        return TowerVerdict::EdgeNotMapped { level: n, word: w };
                    }
                }
            }
            let image = Dfa::determinize(
                &upper
                    .graph()
                    .relabeled(&self.bondings[n], lower.alphabet().len()),
            );
            if let Some(w) = first_word_not_included(lower.dfa(), &image) {
                return TowerVerdict::NotSurjective {
                    level: n,
                    word: Word(w),
                };
            }
        }
        TowerVerdict::Valid
    }

    /// Thread of depth 0 through an allowed word of the bottom level.
    pub fn thread(&self, word: Word) -> Result<Thread> {
        if !self.levels[0].is_allowed(&word)? {
            return Err(Error::Precondition("word is not allowed at level 0".into()));
        }
        Ok(Thread { words: vec![word] })
    }

    /// Extends a thread by the lexicographically least word of the next
    /// level mapping onto its top word.
    pub fn thread_extend(&self, t: &Thread) -> Result<Thread> {
        let d = t.depth();
        if d >= self.depth() {
            return Err(Error::Precondition(format!(
                "the tower has no level above {d}"
            )));
        }
        let upper = &self.levels[d + 1];
        let g = &self.bondings[d];
        let top = t.top();
        let dfa = upper.dfa();
        let mut buf = Vec::with_capacity(top.len());
        fn dfs(dfa: &Dfa, g: &[Sym], top: &[Sym], state: usize, buf: &mut Vec<Sym>) -> bool {
            if buf.len() == top.len() {
                return true;
            }
            let want = top[buf.len()];
            for a in 0..dfa.n_symbols() as Sym {
                if g[a as usize] != want {
                    continue;
                }
                if let Some(s) = dfa.step(state, a) {
                    buf.push(a);
                    if dfs(dfa, g, top, s, buf) {
                        return true;
                    }
                    buf.pop();
                }
            }
            false
        }
        if !dfs(dfa, g, top, 0, &mut buf) {
            return Err(Error::Internal(format!(
                "no preimage at level {} although bondings are onto",
                d + 1
            )));
        }
        let mut words = t.words.clone();
        words.push(Word(buf));
        Ok(Thread { words })
    }

    /// All threads through levels `0 … k` with words of length `len`, one
    /// per allowed word of level `k`, in order of those words.
    pub fn threads(&self, k: usize, len: usize) -> Vec<Thread> {
        self.levels[k]
            .language(len)
            .into_iter()
            .map(|top| {
                let mut words = vec![top];
                for n in (0..k).rev() {
                    let below = self.bond(n, words.last().unwrap());
                    words.push(below);
                }
                words.reverse();
                Thread { words }
            })
            .collect()
    }
}

/// Tower of pseudo-orbit shifts of cylinder covers of increasing depth,
/// bonded by the refinement maps.
#[derive(Clone, Debug)]
pub struct PoTower {
    pub tower: SftTower,
    pub covers: Vec<Cover>,
    pub depths: Vec<usize>,
    /// Length at which each consecutive pair satisfied the cover criterion.
    pub len: usize,
}

/// Builds levels `PO(𝒰_{n_i})` after certifying the cover criterion between
/// each consecutive pair of depths at length `len`.
pub fn build_po_tower(system: &System, depths: &[usize], len: usize) -> Result<PoTower> {
    if depths.is_empty() || depths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(
            "depths must be nonempty and strictly increasing".into(),
        ));
    }
    let covers = depths
        .iter()
        .map(|&d| Cover::cylinders(system, d))
        .collect::<Result<Vec<_>>>()?;
    for (i, pair) in covers.windows(2).enumerate() {
        if !cover_criterion(&pair[0], &pair[1], len)?.holds() {
            return Err(Error::CriterionFails { pair: i });
        }
    }
    let mut levels = Vec::with_capacity(covers.len());
    for c in &covers {
        levels.push(c.po_shift()?.1);
    }
    let bondings = covers
        .windows(2)
        .map(|p| crate::cover::iota(&p[1], &p[0]).map(|r| r.assignment))
        .collect::<Result<Vec<_>>>()?;
    let tower = SftTower::new(levels, bondings)?;
    match tower.validate() {
        TowerVerdict::Valid => {}
        v => {
            return Err(Error::InvalidTower(format!(
                "pseudo-orbit tower failed validation: {v:?}"
            )))
        }
    }
    Ok(PoTower {
        tower,
        covers,
        depths: depths.to_vec(),
        len,
    })
}

impl PoTower {
    /// Level-`n` cylinder word of every symbol.
    pub fn cell_words(&self) -> Vec<Vec<Word>> {
        self.covers.iter().map(cylinder_words).collect()
    }

    /// Diameter bound `2^-d_n` of the fibers of the projection onto level
    /// `n`: limit points with equal level-`n` coordinate share a depth-`d_n`
    /// cylinder.
    pub fn projection_fiber_diameter(&self, n: usize) -> Result<Rational> {
        self.depths
            .get(n)
            .map(|&d| dyadic(d as u32))
            .ok_or_else(|| Error::Precondition(format!("no level {n}")))
    }

    pub fn conjugacy_check(&self, len: usize, k: usize) -> Result<ConjugacyCheck> {
        finite_conjugacy_check(&self.tower, &self.cell_words(), len, k)
    }
}

fn cylinder_words(c: &Cover) -> Vec<Word> {
    c.cells()
        .iter()
        .map(|cell| match &cell.shape {
            CellShape::Cylinder(w) => w.clone(),
            CellShape::Arc(_) => Word::empty(),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ConjugacyCheck {
    pub threads: usize,
    /// Pairs of distinct threads whose cell intersections meet at every
    /// position.
    pub collisions: Vec<(Thread, Thread)>,
}

/// Intersection of nested cylinders, as the longest word, or `None` if
/// two of them are disjoint.
fn nested_cylinder(words: &[&Word]) -> Option<Word> {
    let mut best: &Word = words[0];
    for w in words {
        if w.len() > best.len() {
            if !w.starts_with(best) {
                return None;
            }
            best = w;
        } else if !best.starts_with(w) {
            return None;
        }
    }
    Some(best.clone())
}

/// For all depth-`k` threads of length `len`, checks that distinct
/// threads represent distinct point sequences: at some position their
/// cell intersections `⋂_n cl (u_n)_j` are disjoint. `cells[n][a]` is the
/// cylinder word of symbol `a` at level `n`.
pub fn finite_conjugacy_check(
    tower: &SftTower,
    cells: &[Vec<Word>],
    len: usize,
    k: usize,
) -> Result<ConjugacyCheck> {
    if k > tower.depth() || cells.len() < k + 1 {
        return Err(Error::Precondition(format!("depth {k} exceeds the tower")));
    }
    let threads = tower.threads(k, len);
    let sets: Vec<Option<Vec<Word>>> = threads
        .iter()
        .map(|t| {
            (0..len)
                .map(|j| {
                    let ws: Vec<&Word> =
                        (0..=k).map(|n| &cells[n][t.words[n][j] as usize]).collect();
                    nested_cylinder(&ws)
                })
                .collect()
        })
        .collect();
    let mut collisions = Vec::new();
    for i in 0..threads.len() {
        for j in i + 1..threads.len() {
            let (Some(a), Some(b)) = (&sets[i], &sets[j]) else {
                continue;
            };
            let meet = a
                .iter()
                .zip(b)
                .all(|(u, v)| u.starts_with(v) || v.starts_with(u));
            if meet {
                collisions.push((threads[i].clone(), threads[j].clone()));
            }
        }
    }
    Ok(ConjugacyCheck {
        threads: threads.len(),
        collisions,
    })
}

/// Tower over the even-indexed covers of a sequence `𝒰_0, …, 𝒰_{2m}`,
/// bonded by star selections `w : 𝒰_{2i+2} → 𝒰_{2i}`.
#[derive(Clone, Debug)]
pub struct GeneralTower {
    pub tower: SftTower,
    pub covers: Vec<Cover>,
    pub selections: Vec<StarSelection>,
    pub len: usize,
    /// Hypothesis taken on trust rather than decided.
    pub assumption: String,
    /// Result of [`SftTower::validate`]; bondings need not be onto.
    pub bonding_verdict: TowerVerdict,
}

pub const WITNESS_ASSUMPTION: &str =
    "each cover U_{n+1} witnesses U_n-shadowing (not decided; checked only through the inclusion at L)";

pub fn build_general_tower(covers: Vec<Cover>, len: usize) -> Result<GeneralTower> {
    if covers.is_empty() || covers.len().is_multiple_of(2) {
        return Err(Error::Precondition(
            "the cover sequence must have odd length".into(),
        ));
    }
    let mut selections = Vec::new();
    let mut po_words = Vec::new();
    let mut levels = Vec::new();
    for c in covers.iter().step_by(2) {
        let (_, po) = c.po_shift()?;
        po_words.push(po.language(len));
        levels.push(po);
    }
    for i in 0..levels.len() - 1 {
        let (coarse, middle, fine) = (&covers[2 * i], &covers[2 * i + 1], &covers[2 * i + 2]);
        let sel = star_selection(coarse, middle, fine)?;
        let orbit = coarse.orbit_language(len);
        let image = map_language(&sel.assignment, &po_words[i + 1]);
        if let Some(w) = image.iter().find(|w| !orbit.contains(*w)) {
            return Err(Error::InclusionFails {
                level: i,
                witness: coarse.alphabet().names(w),
            });
        }
        selections.push(sel);
    }
    let bondings = selections.iter().map(|s| s.assignment.clone()).collect();
    let tower = SftTower::new(levels, bondings)?;
    let bonding_verdict = tower.validate();
    if let TowerVerdict::EdgeNotMapped { level, word } = &bonding_verdict {
        return Err(Error::InclusionFails {
            level: *level,
            witness: tower.levels()[level + 1].alphabet().names(word),
        });
    }
    Ok(GeneralTower {
        tower,
        covers,
        selections,
        len,
        assumption: WITNESS_ASSUMPTION.into(),
        bonding_verdict,
    })
}

impl GeneralTower {
    /// `⋂_n cl (u_n)_j` for a thread `u` and position `j`, on circle
    /// systems.
    pub fn fiber(&self, t: &Thread, j: usize) -> Result<ClosedSet> {
        let mut set = ClosedSet::full();
        for (n, w) in t.words.iter().enumerate() {
            let cover = &self.covers[2 * n];
            match &cover.cell(w[j]).shape {
                CellShape::Arc(a) => set = set.intersect(&a.closure()),
                CellShape::Cylinder(_) => {
                    return Err(Error::Precondition(
                        "fibers are computed on circle systems".into(),
                    ))
                }
            }
        }
        Ok(set)
    }
}

/// Symbols of `X_{n+1}` mapping to each symbol of `X_n`.
pub fn bonding_fibers(tower: &SftTower, n: usize) -> Vec<BTreeSet<Sym>> {
    let mut out = vec![BTreeSet::new(); tower.levels[n].alphabet().len()];
    for (a, &b) in tower.bondings[n].iter().enumerate() {
        out[b as usize].insert(a as Sym);
    }
    out
}
