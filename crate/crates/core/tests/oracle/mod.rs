//! Brute-force reference implementations. Everything here works straight
//! from the definitions (enumerate all words, test each directly) and
//! shares no code with the library's automata or cover machinery.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type W = Vec<u32>;

pub fn q(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

/// A shift given by raw data.
#[derive(Clone, Debug)]
pub enum NaiveShift {
    /// Alphabet size and forbidden words.
    Sft { k: u32, forbidden: Vec<W> },
    /// Alphabet size, vertex count, labeled edges.
    Sofic {
        k: u32,
        n: usize,
        edges: Vec<(usize, usize, u32)>,
    },
}

pub fn golden_mean() -> NaiveShift {
    NaiveShift::Sft {
        k: 2,
        forbidden: vec![vec![1, 1]],
    }
}

pub fn full_shift(k: u32) -> NaiveShift {
    NaiveShift::Sft {
        k,
        forbidden: vec![],
    }
}

pub fn at_most_one_one() -> NaiveShift {
    NaiveShift::Sofic {
        k: 2,
        n: 2,
        edges: vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)],
    }
}

pub fn sofic_cover_y() -> NaiveShift {
    NaiveShift::Sft {
        k: 3,
        forbidden: vec![vec![0, 2], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]],
    }
}

/// All words of length `n` over `k` letters, lexicographically.
pub fn all_words(k: u32, n: usize) -> Vec<W> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: W| {
                (0..k).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn has_factor(w: &[u32], f: &[u32]) -> bool {
    !f.is_empty() && w.windows(f.len()).any(|x| x == f)
}

impl NaiveShift {
    pub fn k(&self) -> u32 {
        match self {
            NaiveShift::Sft { k, .. } | NaiveShift::Sofic { k, .. } => *k,
        }
    }

    /// Extension length after which a word that still extends extends
    /// forever (a path this long must revisit a state).
    fn horizon(&self) -> usize {
        match self {
            NaiveShift::Sft { k, forbidden } => {
                let m = forbidden.iter().map(Vec::len).max().unwrap_or(1).max(1);
                (*k as usize).pow(m as u32 - 1) + 1
            }
            NaiveShift::Sofic { n, .. } => *n + 1,
        }
    }

    fn avoids(&self, w: &[u32]) -> bool {
        match self {
            NaiveShift::Sft { forbidden, .. } => !forbidden.iter().any(|f| has_factor(w, f)),
            NaiveShift::Sofic { .. } => unreachable!(),
        }
    }

    fn sft_extends(&self, w: &mut W, more: usize) -> bool {
        if !self.avoids(w) {
            return false;
        }
        if more == 0 {
            return true;
        }
        for a in 0..self.k() {
            w.push(a);
            let ok = self.sft_extends(w, more - 1);
            w.pop();
            if ok {
                return true;
            }
        }
        false
    }

    /// Vertices reached from some vertex along a path labeled `w`.
    fn sofic_ends(&self, w: &[u32]) -> BTreeSet<usize> {
        let NaiveShift::Sofic { n, edges, .. } = self else {
            unreachable!()
        };
        let mut cur: BTreeSet<usize> = (0..*n).collect();
        for &a in w {
            cur = edges
                .iter()
                .filter(|&&(v, _, l)| l == a && cur.contains(&v))
                .map(|&(_, t, _)| t)
                .collect();
        }
        cur
    }

    /// `w` occurs in some point: it avoids the forbidden words and can be
    /// continued far enough, or labels a path that can be continued far
    /// enough.
    pub fn allowed(&self, w: &[u32]) -> bool {
        match self {
            NaiveShift::Sft { .. } => self.sft_extends(&mut w.to_vec(), self.horizon()),
            NaiveShift::Sofic { k, .. } => {
                let h = self.horizon();
                all_words(*k, h).iter().any(|ext| {
                    let mut full = w.to_vec();
                    full.extend_from_slice(ext);
                    !self.sofic_ends(&full).is_empty()
                })
            }
        }
    }

    pub fn language(&self, n: usize) -> BTreeSet<W> {
        all_words(self.k(), n)
            .into_iter()
            .filter(|w| self.allowed(w))
            .collect()
    }

    /// Depth-`d` cylinder pseudo-orbit edges: some point of `U` has its
    /// shift in `V`.
    pub fn po_edges(&self, d: usize) -> BTreeSet<(W, W)> {
        let mut out = BTreeSet::new();
        for z in self.language(d + 1) {
            out.insert((z[..d].to_vec(), z[1..].to_vec()));
        }
        out
    }

    /// Sequences of `len` depth-`d` cells, consecutive ones joined by an
    /// edge.
    pub fn po_language(&self, d: usize, len: usize) -> BTreeSet<Vec<W>> {
        let cells: Vec<W> = self.language(d).into_iter().collect();
        let edges = self.po_edges(d);
        paths(&cells, len, |u, v| edges.contains(&(u.clone(), v.clone())))
    }

    /// Sequences of depth-`d` cells visited by an orbit.
    pub fn orbit_language(&self, d: usize, len: usize) -> BTreeSet<Vec<W>> {
        self.language(len + d - 1)
            .into_iter()
            .map(|w| (0..len).map(|i| w[i..i + d].to_vec()).collect())
            .collect()
    }
}

/// All sequences of `len` items, consecutive ones related by `edge`.
pub fn paths<T: Clone + Ord>(
    items: &[T],
    len: usize,
    edge: impl Fn(&T, &T) -> bool,
) -> BTreeSet<Vec<T>> {
    let mut out = BTreeSet::new();
    if len == 0 {
        out.insert(vec![]);
        return out;
    }
    let mut stack: Vec<Vec<T>> = items.iter().map(|c| vec![c.clone()]).collect();
    while let Some(p) = stack.pop() {
        if p.len() == len {
            out.insert(p);
            continue;
        }
        for c in items {
            if edge(p.last().unwrap(), c) {
                let mut q = p.clone();
                q.push(c.clone());
                stack.push(q);
            }
        }
    }
    out
}

/// First index where two eventually periodic sequences differ, checked
/// letter by letter; `None` if they agree on the first `bound` letters.
pub fn first_difference(
    a: impl Fn(usize) -> u32,
    b: impl Fn(usize) -> u32,
    bound: usize,
) -> Option<usize> {
    (0..bound).find(|&i| a(i) != b(i))
}

pub fn render(w: &[u32]) -> String {
    w.iter().map(|a| a.to_string()).collect()
}

// Circle maps. A closed set is a list of closed intervals inside [0, 1],
// where 0 and 1 name the same point.

pub type Set = Vec<(Q, Q)>;

/// Lift data of a piecewise-linear circle map.
#[derive(Clone, Debug)]
pub struct NaiveCircle {
    pub breakpoints: Vec<Q>,
    pub values: Vec<Q>,
}

fn floor(x: &Q) -> Q {
    x.floor()
}

fn frac_part(x: &Q) -> Q {
    x - floor(x)
}

/// Closure of the open arc starting at `lo` of length `len`.
pub fn arc_closure(lo: &Q, len: &Q) -> Set {
    let one = Q::one();
    if *len >= one {
        return vec![(Q::zero(), one)];
    }
    let hi = lo + len;
    if hi <= one {
        vec![(lo.clone(), hi)]
    } else {
        vec![(lo.clone(), one.clone()), (Q::zero(), hi - one)]
    }
}

pub fn set_contains(s: &Set, x: &Q) -> bool {
    let x = frac_part(x);
    s.iter()
        .any(|(a, b)| (*a <= x && x <= *b) || (x.is_zero() && *b == Q::one()))
}

pub fn intersect(s: &Set, t: &Set) -> Set {
    let mut out = Vec::new();
    for (a, b) in s {
        for (c, d) in t {
            let lo = a.max(c).clone();
            let hi = b.min(d).clone();
            if lo <= hi {
                out.push((lo, hi));
            }
        }
    }
    // 0 and 1 are one point
    if set_contains(s, &Q::zero()) && set_contains(t, &Q::zero()) {
        out.push((Q::zero(), Q::zero()));
    }
    merge(out)
}

/// Sorted, with overlapping intervals joined.
fn merge(mut s: Set) -> Set {
    s.sort();
    let mut out: Set = Vec::new();
    for (a, b) in s {
        match out.last_mut() {
            Some(last) if a <= last.1 => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => out.push((a, b)),
        }
    }
    out
}

impl NaiveCircle {
    fn pieces(&self) -> Vec<(Q, Q, Q, Q)> {
        let mut ends = self.breakpoints.clone();
        ends.push(Q::one());
        (0..self.breakpoints.len())
            .map(|j| {
                (
                    ends[j].clone(),
                    ends[j + 1].clone(),
                    self.values[j].clone(),
                    self.values[j + 1].clone(),
                )
            })
            .collect()
    }

    pub fn apply(&self, x: &Q) -> Q {
        let x = frac_part(x);
        for (b0, b1, v0, v1) in self.pieces() {
            if b0 <= x && x <= b1 {
                return frac_part(&(&v0 + (&v1 - &v0) * (&x - &b0) / (&b1 - &b0)));
            }
        }
        unreachable!()
    }

    /// `f^{-1}(S)` by inverting every linear piece against every integer
    /// translate of every interval of `S`.
    pub fn preimage(&self, s: &Set) -> Set {
        let mut out = Vec::new();
        for (b0, b1, v0, v1) in self.pieces() {
            if v0 == v1 {
                if set_contains(s, &v0) {
                    out.push((b0.clone(), b1.clone()));
                }
                continue;
            }
            let (lo, hi) = if v0 < v1 {
                (v0.clone(), v1.clone())
            } else {
                (v1.clone(), v0.clone())
            };
            let slope = (&v1 - &v0) / (&b1 - &b0);
            let inv = |y: &Q| &b0 + (y - &v0) / &slope;
            for (a, c) in s {
                let mut t = floor(&(&lo - c));
                while &t + a <= hi {
                    let ya = (&t + a).max(lo.clone());
                    let yc = (&t + c).min(hi.clone());
                    if ya <= yc {
                        let (xa, xc) = (inv(&ya), inv(&yc));
                        let (x0, x1) = if xa <= xc { (xa, xc) } else { (xc, xa) };
                        out.push((x0, x1));
                    }
                    t += Q::one();
                }
            }
        }
        out
    }

    /// Some point `x` has `f^i(x) ∈ cl U_i` for every `i`, decided
    /// backwards through preimages.
    pub fn orbit_pattern(&self, closures: &[Set]) -> bool {
        let mut s = closures.last().unwrap().clone();
        for c in closures[..closures.len() - 1].iter().rev() {
            s = intersect(c, &self.preimage(&s));
            if s.is_empty() {
                return false;
            }
        }
        !s.is_empty()
    }

    pub fn po_edge(&self, u: &Set, v: &Set) -> bool {
        self.orbit_pattern(&[u.clone(), v.clone()])
    }

    /// Index sequences of length `len` realized by an orbit, grown
    /// backwards: prepending `c` keeps the points of `cl c` whose image
    /// follows the rest.
    pub fn orbit_sequences(&self, closures: &[Set], len: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<(Vec<usize>, Set)> = closures
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (vec![i], c))
            .collect();
        while let Some((p, s)) = stack.pop() {
            if p.len() == len {
                out.insert(p.into_iter().rev().collect());
                continue;
            }
            let pre = self.preimage(&s);
            for (i, c) in closures.iter().enumerate() {
                let t = intersect(c, &pre);
                if !t.is_empty() {
                    let mut q = p.clone();
                    q.push(i);
                    stack.push((q, t));
                }
            }
        }
        out
    }
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}
