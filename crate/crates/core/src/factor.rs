//! Sliding-block codes between subshifts: application to points,
//! semiconjugacy verification, and exact lifting checks for pseudo-orbit
//! patterns of cylinder covers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::alphabet::{Sym, Word};
use crate::automaton::{first_word_not_included, Dfa, LabeledGraph};
use crate::cover::{closure_image_intersects, CellShape, Cover};
use crate::error::{Error, Result};
use crate::numeric::{dyadic_exponent, render, Rational};
use crate::point::EpPoint;
use crate::shadowing::{pattern_pseudo_orbit, PseudoOrbit};
use crate::subshift::Subshift;
use crate::system::System;

/// Code with window `m`: `φ(x)_i = rule(x_i … x_{i+m-1})`.
#[derive(Clone, Debug)]
pub struct BlockCode {
    source: Arc<Subshift>,
    target: Arc<Subshift>,
    window: usize,
    rule: BTreeMap<Word, Sym>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiconjugacyVerdict {
    Confirmed,
    /// An allowed source word whose image is not allowed in the target.
    NotInto {
        source: Word,
        image: Word,
    },
    /// A target word with no preimage.
    NotOnto {
        word: Word,
    },
}

impl BlockCode {
    pub fn new(
        source: Arc<Subshift>,
        target: Arc<Subshift>,
        window: usize,
        rule: BTreeMap<Word, Sym>,
    ) -> Result<Self> {
        if window == 0 {
            return Err(Error::InvalidCode("window must be at least 1".into()));
        }
        for (w, &b) in &rule {
            if w.len() != window {
                return Err(Error::InvalidCode(format!(
                    "rule key {} does not have length {window}",
                    source.render(w)
                )));
            }
            target.alphabet().check(&[b])?;
        }
        for w in source.language(window) {
            if !rule.contains_key(&w) {
                return Err(Error::InvalidCode(format!(
                    "no rule for the allowed block {}",
                    source.render(&w)
                )));
            }
        }
        Ok(BlockCode {
            source,
            target,
            window,
            rule,
        })
    }

    /// Window-1 code given by a letter map.
    pub fn letter(source: Arc<Subshift>, target: Arc<Subshift>, map: &[Sym]) -> Result<Self> {
        if map.len() != source.alphabet().len() {
            return Err(Error::InvalidCode(format!(
                "letter map has {} entries for {} symbols",
                map.len(),
                source.alphabet().len()
            )));
        }
        let rule = map
            .iter()
            .enumerate()
            .map(|(a, &b)| (Word(vec![a as Sym]), b))
            .collect();
        Self::new(source, target, 1, rule)
    }

    pub fn identity(x: Arc<Subshift>) -> Self {
        let map: Vec<Sym> = (0..x.alphabet().len() as Sym).collect();
        Self::letter(x.clone(), x, &map).expect("identity letter map")
    }

    pub fn source(&self) -> &Arc<Subshift> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Subshift> {
        &self.target
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn rule(&self) -> &BTreeMap<Word, Sym> {
        &self.rule
    }

    /// Image of a word of length `≥ m`, of length `len - m + 1`.
    pub fn apply_word(&self, w: &[Sym]) -> Result<Word> {
        if w.len() < self.window {
            return Ok(Word::empty());
        }
        w.windows(self.window)
            .map(|b| {
                self.rule.get(b).copied().ok_or_else(|| {
                    Error::Precondition(format!("block {} is not allowed", self.source.render(b)))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn apply(&self, x: &EpPoint) -> Result<EpPoint> {
        if !self.source.contains_point(x)? {
            return Err(Error::PointNotInShift);
        }
        let (p, q) = (x.preperiod().len(), x.period().len());
        let window = x.prefix(p + q + self.window - 1);
        let image = self.apply_word(&window)?;
        EpPoint::new(
            self.target.alphabet().clone(),
            image[..p].to_vec(),
            image[p..].to_vec(),
        )
    }

    /// Graph presenting the image: vertices pair a source vertex with the
    /// `m-1` letters read next, and each edge emits the rule of the window
    /// it consumes.
    fn image_graph(&self) -> LabeledGraph {
        let g = self.source.graph();
        let m = self.window;
        let mut readable: Vec<(usize, Vec<Sym>)> = Vec::new();
        for v in 0..g.vertex_count() {
            let mut stack = vec![(v, Vec::new())];
            while let Some((u, w)) = stack.pop() {
                if w.len() == m - 1 {
                    readable.push((v, w));
                    continue;
                }
                for (from, to, a) in g.edges() {
                    if from == u {
                        let mut w2 = w.clone();
                        w2.push(a);
                        stack.push((to, w2));
                    }
                }
            }
        }
        readable.sort();
        readable.dedup();
        let index: HashMap<&(usize, Vec<Sym>), usize> =
            readable.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut edges = Vec::new();
        for (i, (v, u)) in readable.iter().enumerate() {
            for b in 0..self.source.alphabet().len() as Sym {
                let mut full = u.clone();
                full.push(b);
                let Some(&label) = self.rule.get(full.as_slice()) else {
                    continue;
                };
                for (from, to, a) in g.edges() {
                    if from != *v || a != full[0] {
                        continue;
                    }
                    if let Some(&j) = index.get(&(to, full[1..].to_vec())) {
                        edges.push((i, j, label));
                    }
                }
            }
        }
        LabeledGraph::new(self.target.alphabet().len(), readable.len(), edges).trimmed()
    }

    /// Least allowed source word of length `|w| + m - 1` mapping onto `w`.
    pub fn preimage_word(&self, w: &[Sym]) -> Option<Word> {
        let n = w.len() + self.window - 1;
        let dfa = self.source.dfa();
        let mut buf = Vec::with_capacity(n);
        fn go(
            code: &BlockCode,
            dfa: &Dfa,
            w: &[Sym],
            n: usize,
            s: usize,
            buf: &mut Vec<Sym>,
        ) -> bool {
            if buf.len() >= code.window {
                let start = buf.len() - code.window;
                if code.rule.get(&buf[start..]) != Some(&w[start]) {
                    return false;
                }
            }
            if buf.len() == n {
                return true;
            }
            for a in 0..dfa.n_symbols() as Sym {
                if let Some(t) = dfa.step(s, a) {
                    buf.push(a);
                    if go(code, dfa, w, n, t, buf) {
                        return true;
                    }
                    buf.pop();
                }
            }
            false
        }
        go(self, dfa, w, n, 0, &mut buf).then_some(Word(buf))
    }

    /// Decides exactly that the code maps the source into and onto the
    /// target.
    pub fn semiconjugacy_check(&self) -> SemiconjugacyVerdict {
        let image = Dfa::determinize(&self.image_graph());
        if let Some(w) = first_word_not_included(&image, self.target.dfa()) {
            let source = self.preimage_word(&w).expect("image word has a preimage");
            return SemiconjugacyVerdict::NotInto {
                source,
                image: Word(w),
            };
        }
        if let Some(w) = first_word_not_included(self.target.dfa(), &image) {
            return SemiconjugacyVerdict::NotOnto { word: Word(w) };
        }
        SemiconjugacyVerdict::Confirmed
    }
}

fn cylinder_word(c: &Cover, s: Sym) -> &Word {
    match &c.cell(s).shape {
        CellShape::Cylinder(w) => w,
        CellShape::Arc(_) => unreachable!("cylinder covers only"),
    }
}

/// Graph over source pseudo-orbit cells whose edges emit every target cell
/// agreeing with the source cell's image on `compare` symbols.
fn liftable_dfa(code: &BlockCode, source: &Cover, target: &Cover, compare: usize) -> Result<Dfa> {
    let images: Vec<Word> = (0..source.len() as Sym)
        .map(|d| code.apply_word(cylinder_word(source, d)))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for &(d, d2) in &source.po_graph().edges {
        for c in 0..target.len() as Sym {
            if cylinder_word(target, c)[..compare] == images[d as usize][..compare] {
                edges.push((d as usize, d2 as usize, c));
            }
        }
    }
    Ok(Dfa::determinize(
        &LabeledGraph::new(target.len(), source.len(), edges).trimmed(),
    ))
}

fn cylinder_cover(x: &Arc<Subshift>, depth: usize) -> Result<Cover> {
    Cover::cylinders(&System::Shift(x.clone()), depth)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftsAttempt {
    pub depth: usize,
    /// Shortest target pattern with no exact lift, if one has length `≤ L`.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftsReport {
    pub source_depth: usize,
    pub len: usize,
    pub attempts: Vec<LiftsAttempt>,
}

impl LiftsReport {
    /// First target depth at which every pattern of length `L` lifts.
    pub fn lifting_depth(&self) -> Option<usize> {
        self.attempts
            .iter()
            .find(|a| a.witness.is_none())
            .map(|a| a.depth)
    }
}

/// For each target cylinder depth, decides whether every pseudo-orbit
/// pattern of length `len` is the image pattern of a source pseudo-orbit
/// pattern at `source_depth`. Cells are compared on as many symbols as both
/// the target cell and the image of the source cell determine.
pub fn lifts_check(
    code: &BlockCode,
    source_depth: usize,
    target_depths: &[usize],
    len: usize,
) -> Result<LiftsReport> {
    if source_depth < code.window {
        return Err(Error::Precondition(format!(
            "source depth must be at least the window {}",
            code.window
        )));
    }
    let source = cylinder_cover(&code.source, source_depth)?;
    let mut attempts = Vec::new();
    for &d in target_depths {
        let target = cylinder_cover(&code.target, d)?;
        let compare = d.min(source_depth - code.window + 1);
        let lift = liftable_dfa(code, &source, &target, compare)?;
        let (_, po) = target.po_shift()?;
        let witness = first_word_not_included(po.dfa(), &lift)
            .filter(|w| w.len() <= len)
            .map(|w| target.alphabet().names(&w));
        attempts.push(LiftsAttempt { depth: d, witness });
    }
    Ok(LiftsReport {
        source_depth,
        len,
        attempts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlpQuery {
    pub epsilon: Rational,
    pub eta: Rational,
    pub delta: Rational,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub enum AlpVerdict {
    LiftedAll,
    Counterexample {
        /// Target cells, canonically least among unliftable patterns.
        pattern: Vec<String>,
        pseudo_orbit: PseudoOrbit,
        /// Independent search found no source pattern passing the
        /// necessary closeness test against the concrete points.
        revalidated: bool,
    },
}

#[derive(Clone, Debug)]
pub struct AlpReport {
    pub query: AlpQuery,
    /// Target cylinder depth `d` with `2^-d < δ ≤ 2^-(d-1)`.
    pub target_depth: usize,
    pub source_depth: usize,
    /// Symbols on which target cells and source images are compared.
    pub compared: usize,
    pub verdict: AlpVerdict,
}

impl AlpReport {
    pub fn lifted_all(&self) -> bool {
        matches!(self.verdict, AlpVerdict::LiftedAll)
    }

    pub fn describe_grid(&self) -> String {
        format!(
            "eps={} eta={} delta={} L={} (target depth {}, source depth {}, {} symbols compared)",
            render(&self.query.epsilon),
            render(&self.query.eta),
            render(&self.query.delta),
            self.query.len,
            self.target_depth,
            self.source_depth,
            self.compared
        )
    }
}

fn exponent(name: &str, x: &Rational) -> Result<usize> {
    dyadic_exponent(x).map(|k| k as usize).ok_or_else(|| {
        Error::Precondition(format!("{name} must be a power 2^-k, got {}", render(x)))
    })
}

/// Lexicographically least word of length `len` accepted by `outer` whose
/// prefixes leave `inner` at some point.
fn first_escape(outer: &Dfa, inner: &Dfa, len: usize) -> Option<Vec<Sym>> {
    type Key = (usize, Option<usize>, usize);
    fn escapes(outer: &Dfa, inner: &Dfa, key: Key, memo: &mut HashMap<Key, bool>) -> bool {
        let (s, t, rem) = key;
        if t.is_none() {
            return true;
        }
        if rem == 0 {
            return false;
        }
        if let Some(&r) = memo.get(&key) {
            return r;
        }
        let r = (0..outer.n_symbols() as Sym).any(|a| {
            outer.step(s, a).is_some_and(|s2| {
                escapes(
                    outer,
                    inner,
                    (s2, t.and_then(|t| inner.step(t, a)), rem - 1),
                    memo,
                )
            })
        });
        memo.insert(key, r);
        r
    }
    let mut memo = HashMap::new();
    let mut key = (0, Some(0), len);
    if !escapes(outer, inner, key, &mut memo) {
        return None;
    }
    let mut word = Vec::with_capacity(len);
    while word.len() < len {
        let (s, t, rem) = key;
        for a in 0..outer.n_symbols() as Sym {
            let Some(s2) = outer.step(s, a) else { continue };
            let next = (s2, t.and_then(|t| inner.step(t, a)), rem - 1);
            if escapes(outer, inner, next, &mut memo) {
                word.push(a);
                key = next;
                break;
            }
        }
    }
    Some(word)
}

/// Decides at dyadic resolution whether every target `δ`-pseudo-orbit of
/// length `L` is followed `ε`-closely by the image of a source
/// `η`-pseudo-orbit. `ε = 2^-e`, `η = 2^-j`, `δ = 2^-k` select cylinder
/// depths `j + 1` (source) and `k + 1` (target), and closeness is tested on
/// `min(e + 1, j + 2 - m, k + 1)` symbols.
pub fn alp_check(code: &BlockCode, q: &AlpQuery) -> Result<AlpReport> {
    if q.len < 2 {
        return Err(Error::Precondition("L must be at least 2".into()));
    }
    let e = exponent("epsilon", &q.epsilon)?;
    let j = exponent("eta", &q.eta)?;
    let k = exponent("delta", &q.delta)?;
    let (source_depth, target_depth) = (j + 1, k + 1);
    if source_depth < code.window {
        return Err(Error::Precondition(format!(
            "eta is too coarse for a window of {}",
            code.window
        )));
    }
    let compared = (e + 1)
        .min(source_depth - code.window + 1)
        .min(target_depth);
    let source = cylinder_cover(&code.source, source_depth)?;
    let target = cylinder_cover(&code.target, target_depth)?;
    let lift = liftable_dfa(code, &source, &target, compared)?;
    let (_, po) = target.po_shift()?;
    let verdict = match first_escape(po.dfa(), &lift, q.len) {
        None => AlpVerdict::LiftedAll,
        Some(pattern) => {
            let pseudo_orbit = pattern_pseudo_orbit(&target, &pattern)?;
            let revalidated = naive_lift(code, &source, &pseudo_orbit, e)?.is_none();
            AlpVerdict::Counterexample {
                pattern: target.alphabet().names(&pattern),
                pseudo_orbit,
                revalidated,
            }
        }
    };
    Ok(AlpReport {
        query: q.clone(),
        target_depth,
        source_depth,
        compared,
        verdict,
    })
}

/// Depth-first search for source cells `D_0 … D_{L-1}`, adjacent in the
/// pseudo-orbit graph by the definitional closure test, with `φ(D_i)`
/// agreeing with the concrete point `y_i` on `min(e + 1, |φ(D_i)|)`
/// symbols.
fn naive_lift(
    code: &BlockCode,
    source: &Cover,
    y: &PseudoOrbit,
    e: usize,
) -> Result<Option<Vec<Sym>>> {
    let n = source.len() as Sym;
    let mut ok_at: Vec<Vec<Sym>> = Vec::with_capacity(y.len());
    for p in y.points() {
        let p = p.as_seq().expect("symbolic pseudo-orbit");
        let mut ok = Vec::new();
        for d in 0..n {
            let img = code.apply_word(cylinder_word(source, d))?;
            let c = img.len().min(e + 1);
            if img[..c] == p.prefix(c)[..] {
                ok.push(d);
            }
        }
        ok_at.push(ok);
    }
    let system = source.system();
    let mut path: Vec<Sym> = Vec::new();
    fn go(
        system: &System,
        source: &Cover,
        ok_at: &[Vec<Sym>],
        path: &mut Vec<Sym>,
    ) -> Result<bool> {
        if path.len() == ok_at.len() {
            return Ok(true);
        }
        for &d in &ok_at[path.len()] {
            if let Some(&prev) = path.last() {
                if !closure_image_intersects(system, source.cell(prev), source.cell(d))? {
                    continue;
                }
            }
            path.push(d);
            if go(system, source, ok_at, path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
    Ok(go(system, source, &ok_at, &mut path)?.then_some(path))
}

/// The one-sided SFT `Y` over {0,1,2} forbidding 02, 10, 11, 20, 21, with
/// the code `0 ↦ 0, 1 ↦ 1, 2 ↦ 0` onto the shift of sequences with at most
/// one 1.
pub fn sofic_counterexample() -> BlockCode {
    let y = Arc::new(crate::builtins::sofic_cover_y());
    let x = Arc::new(crate::builtins::at_most_one_one());
    BlockCode::letter(y, x, &[0, 1, 0]).expect("valid letter map")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::numeric::frac;

    fn p(x: &Subshift, pre: &str, per: &str) -> EpPoint {
        EpPoint::parse(x.alphabet(), pre, per).unwrap()
    }

    // times at which a pattern of cylinder cells shows the symbol 1
    fn one_times(cells: &[String]) -> std::collections::BTreeSet<usize> {
        let mut out = std::collections::BTreeSet::new();
        for (i, c) in cells.iter().enumerate() {
            for (j, ch) in c.chars().enumerate() {
                if ch == '1' {
                    out.insert(i + j);
                }
            }
        }
        out
    }

    fn xor_code() -> BlockCode {
        let f = Arc::new(builtins::full_shift(2));
        let rule = [("00", 0), ("01", 1), ("10", 1), ("11", 0)]
            .into_iter()
            .map(|(w, b)| (f.alphabet().parse_compact(w).unwrap(), b))
            .collect();
        BlockCode::new(f.clone(), f, 2, rule).unwrap()
    }

    #[test]
    fn apply_examples() {
        let c = sofic_counterexample();
        let x = p(c.source(), "01", "2");
        assert_eq!(c.apply(&x).unwrap(), p(c.target(), "01", "0"));

        let gm = Arc::new(builtins::golden_mean());
        let x = p(&gm, "0", "01");
        assert_eq!(BlockCode::identity(gm).apply(&x).unwrap(), x);

        let c = xor_code();
        let x = p(c.source(), "", "01");
        assert_eq!(c.apply(&x).unwrap(), p(c.target(), "", "1"));
        let x = p(c.source(), "1", "0");
        assert_eq!(c.apply(&x).unwrap(), p(c.target(), "1", "0"));

        let c = sofic_counterexample();
        assert_eq!(
            c.apply(&p(c.source(), "", "1")).unwrap_err(),
            Error::PointNotInShift
        );
    }

    #[test]
    fn invalid_codes() {
        let gm = Arc::new(builtins::golden_mean());
        assert!(BlockCode::new(gm.clone(), gm.clone(), 0, BTreeMap::new()).is_err());
        let partial = [(Word(vec![0]), 0)].into_iter().collect();
        assert!(matches!(
            BlockCode::new(gm.clone(), gm.clone(), 1, partial),
            Err(Error::InvalidCode(_))
        ));
        assert!(BlockCode::letter(gm.clone(), gm, &[0, 5]).is_err());
    }

    #[test]
    fn semiconjugacy_examples() {
        let c = sofic_counterexample();
        assert_eq!(c.semiconjugacy_check(), SemiconjugacyVerdict::Confirmed);
        let gm = Arc::new(builtins::golden_mean());
        assert_eq!(
            BlockCode::identity(gm.clone()).semiconjugacy_check(),
            SemiconjugacyVerdict::Confirmed
        );
        assert_eq!(
            xor_code().semiconjugacy_check(),
            SemiconjugacyVerdict::Confirmed
        );

        let full = Arc::new(builtins::full_shift(2));
        let c = BlockCode::letter(c.source().clone(), full.clone(), &[0, 1, 0]).unwrap();
        assert_eq!(
            c.semiconjugacy_check(),
            SemiconjugacyVerdict::NotOnto {
                word: Word(vec![1, 1])
            }
        );

        let c = BlockCode::identity(full);
        let c = BlockCode::letter(c.source().clone(), gm, &[0, 1]).unwrap();
        assert_eq!(
            c.semiconjugacy_check(),
            SemiconjugacyVerdict::NotInto {
                source: Word(vec![1, 1]),
                image: Word(vec![1, 1])
            }
        );
    }

    #[test]
    fn window_two_into_golden_mean() {
        // 2-blocks of the full shift: 11 ↦ 0, everything else its first letter
        let full = Arc::new(builtins::full_shift(2));
        let gm = Arc::new(builtins::golden_mean());
        let rule = [("00", 0), ("01", 0), ("10", 1), ("11", 0)]
            .into_iter()
            .map(|(w, b)| (full.alphabet().parse_compact(w).unwrap(), b))
            .collect();
        let c = BlockCode::new(full, gm, 2, rule).unwrap();
        assert_eq!(c.semiconjugacy_check(), SemiconjugacyVerdict::Confirmed);
        assert_eq!(c.preimage_word(&[1, 0, 1]), Some(Word(vec![1, 0, 1, 0])));
    }

    #[test]
    fn lifts_examples() {
        let gm = Arc::new(builtins::golden_mean());
        let r = lifts_check(&BlockCode::identity(gm.clone()), 3, &[3], 8).unwrap();
        assert_eq!(r.lifting_depth(), Some(3));

        let c = sofic_counterexample();
        let r = lifts_check(&c, 2, &[2, 3, 4, 5, 6], 10).unwrap();
        assert_eq!(r.lifting_depth(), None);
        for a in &r.attempts {
            assert_eq!(one_times(a.witness.as_ref().unwrap()).len(), 2);
        }

        let rec = gm.higher_block_recode(2).unwrap();
        let src = Arc::new(rec.shift.clone());
        let c = BlockCode::letter(src, gm, &rec.first_symbol).unwrap();
        assert_eq!(c.semiconjugacy_check(), SemiconjugacyVerdict::Confirmed);
        let r = lifts_check(&c, 2, &[2, 3], 8).unwrap();
        assert_eq!(r.lifting_depth(), Some(2));
    }

    #[test]
    fn alp_identity_and_counterexample() {
        let gm = Arc::new(builtins::golden_mean());
        let q = AlpQuery {
            epsilon: frac(1, 4),
            eta: frac(1, 8),
            delta: frac(1, 2),
            len: 6,
        };
        let r = alp_check(&BlockCode::identity(gm), &q).unwrap();
        assert!(r.lifted_all());
        assert_eq!((r.target_depth, r.source_depth, r.compared), (2, 4, 2));

        let c = sofic_counterexample();
        let q = AlpQuery {
            epsilon: frac(1, 4),
            eta: frac(1, 4),
            delta: frac(1, 8),
            len: 12,
        };
        let r = alp_check(&c, &q).unwrap();
        let AlpVerdict::Counterexample {
            pattern,
            pseudo_orbit,
            revalidated,
        } = &r.verdict
        else {
            panic!("expected a counterexample");
        };
        assert!(revalidated);
        assert_eq!(pattern.len(), 12);
        assert_eq!(pseudo_orbit.delta(), &frac(1, 8));
        assert!(one_times(pattern).len() >= 2);

        let bad = AlpQuery {
            epsilon: frac(1, 3),
            ..q
        };
        assert!(alp_check(&c, &bad).is_err());
    }

    #[test]
    fn first_escape_is_lex_least() {
        let full = builtins::full_shift(2);
        let gm = builtins::golden_mean();
        assert_eq!(first_escape(full.dfa(), gm.dfa(), 3), Some(vec![0, 1, 1]));
        assert_eq!(first_escape(gm.dfa(), full.dfa(), 5), None);
    }
}
