//! Labeled graphs with the "every vertex is initial" semantics used for
//! one-sided sofic shifts, their subset-construction automata, and the
//! product-automaton language inclusion test.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::Sym;

/// Edge-labeled directed graph. The one-sided shift it presents is the set
/// of label sequences of infinite forward paths starting anywhere.
#[derive(Clone, Debug)]
pub(crate) struct LabeledGraph {
    n_symbols: usize,
    /// Out-edges per vertex as `(label, target)`, sorted.
    out: Vec<Vec<(Sym, usize)>>,
}

impl LabeledGraph {
    pub fn new(
        n_symbols: usize,
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sym)>,
    ) -> Self {
        let mut out = vec![Vec::new(); n_vertices];
        for (from, to, label) in edges {
            out[from].push((label, to));
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        LabeledGraph { n_symbols, out }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn n_symbols(&self) -> usize {
        self.n_symbols
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sym)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().map(move |&(a, t)| (v, t, a)))
    }

    /// Restricts to the vertices that begin an infinite forward path, so
    /// that every path label extends to a point.
    pub fn trimmed(&self) -> LabeledGraph {
        let n = self.out.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut live_out: Vec<usize> = vec![0; n];
        for (v, list) in self.out.iter().enumerate() {
            live_out[v] = list.len();
            for &(_, t) in list {
                preds[t].push(v);
            }
        }
        let mut alive = vec![true; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| live_out[v] == 0).collect();
        for &v in &queue {
            alive[v] = false;
        }
        while let Some(v) = queue.pop_front() {
            for &p in &preds[v] {
                if alive[p] {
                    live_out[p] -= 1;
                    if live_out[p] == 0 {
                        alive[p] = false;
                        queue.push_back(p);
                    }
                }
            }
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if alive[v] {
                renumber[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(v, t, _)| alive[v] && alive[t])
            .map(|(v, t, a)| (renumber[v], renumber[t], a))
            .collect::<Vec<_>>();
        LabeledGraph::new(self.n_symbols, next, edges)
    }

    pub fn relabeled(&self, map: &[Sym], n_symbols: usize) -> LabeledGraph {
        LabeledGraph::new(
            n_symbols,
            self.vertex_count(),
            self.edges().map(|(v, t, a)| (v, t, map[a as usize])),
        )
    }

    fn step_set(&self, set: &[usize], a: Sym) -> Vec<usize> {
        let mut next: Vec<usize> = Vec::new();
        for &v in set {
            let list = &self.out[v];
            let start = list.partition_point(|&(l, _)| l < a);
            next.extend(
                list[start..]
                    .iter()
                    .take_while(|&&(l, _)| l == a)
                    .map(|&(_, t)| t),
            );
        }
        next.sort_unstable();
        next.dedup();
        next
    }
}

/// Deterministic automaton obtained from a trimmed labeled graph by the
/// subset construction started from the set of all vertices. A word is in
/// the language iff its run never reaches the empty subset.
#[derive(Clone, Debug)]
pub(crate) struct Dfa {
    n_symbols: usize,
    trans: Vec<Vec<Option<u32>>>,
}

impl Dfa {
    pub fn determinize(g: &LabeledGraph) -> Dfa {
        let n_symbols = g.n_symbols();
        let start: Vec<usize> = (0..g.vertex_count()).collect();
        let mut ids: HashMap<Vec<usize>, u32> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut trans: Vec<Vec<Option<u32>>> = Vec::new();
        ids.insert(start.clone(), 0);
        subsets.push(start);
        let mut i = 0;
        while i < subsets.len() {
            let cur = subsets[i].clone();
            let mut row = Vec::with_capacity(n_symbols);
            for a in 0..n_symbols as Sym {
                let next = g.step_set(&cur, a);
                if next.is_empty() {
                    row.push(None);
                    continue;
                }
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len() as u32;
                        ids.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                row.push(Some(id));
            }
            trans.push(row);
            i += 1;
        }
        Dfa { n_symbols, trans }
    }

    pub fn n_symbols(&self) -> usize {
        self.n_symbols
    }

    pub fn state_count(&self) -> usize {
        self.trans.len()
    }

    #[inline]
    pub fn step(&self, state: usize, a: Sym) -> Option<usize> {
        self.trans[state]
            .get(a as usize)
            .copied()
            .flatten()
            .map(|s| s as usize)
    }

    pub fn run_from(&self, state: usize, w: &[Sym]) -> Option<usize> {
        w.iter().try_fold(state, |s, &a| self.step(s, a))
    }

    pub fn run(&self, w: &[Sym]) -> Option<usize> {
        self.run_from(0, w)
    }

    pub fn accepts(&self, w: &[Sym]) -> bool {
        self.run(w).is_some()
    }

    /// All accepted words of length `n`, in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Vec<Sym>> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(n);
        self.collect(0, n, &mut buf, &mut out);
        out
    }

    fn collect(&self, state: usize, n: usize, buf: &mut Vec<Sym>, out: &mut Vec<Vec<Sym>>) {
        if buf.len() == n {
            out.push(buf.clone());
            return;
        }
        for a in 0..self.n_symbols as Sym {
            if let Some(t) = self.step(state, a) {
                buf.push(a);
                self.collect(t, n, buf, out);
                buf.pop();
            }
        }
    }

    /// Lexicographically least infinite continuation from `state`, as an
    /// eventually periodic `(preperiod, period)` pair.
    pub fn least_continuation(&self, state: usize) -> (Vec<Sym>, Vec<Sym>) {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut letters = Vec::new();
        let mut s = state;
        loop {
            if let Some(&pos) = seen.get(&s) {
                let period = letters[pos..].to_vec();
                letters.truncate(pos);
                return (letters, period);
            }
            seen.insert(s, letters.len());
            let (a, t) = (0..self.n_symbols as Sym)
                .find_map(|a| self.step(s, a).map(|t| (a, t)))
                .expect("trimmed automaton state without a live transition");
            letters.push(a);
            s = t;
        }
    }
}

/// Shortest, then lexicographically least, word accepted by `a` but not
/// by `b`; `None` when `L(a) ⊆ L(b)`. Both automata must share the
/// alphabet size.
pub(crate) fn first_word_not_included(a: &Dfa, b: &Dfa) -> Option<Vec<Sym>> {
    debug_assert_eq!(a.n_symbols(), b.n_symbols());
    type Pair = (usize, usize);
    let mut parent: HashMap<Pair, (Pair, Sym)> = HashMap::new();
    let mut queue = VecDeque::new();
    let root = (0usize, 0usize);
    parent.insert(root, (root, 0));
    queue.push_back(root);
    let path_to = |parent: &HashMap<Pair, (Pair, Sym)>, mut node: Pair| {
        let mut w = Vec::new();
        while node != root {
            let (p, s) = parent[&node];
            w.push(s);
            node = p;
        }
        w.reverse();
        w
    };
    while let Some((sa, sb)) = queue.pop_front() {
        for s in 0..a.n_symbols() as Sym {
            let Some(na) = a.step(sa, s) else { continue };
            match b.step(sb, s) {
                None => {
                    let mut w = path_to(&parent, (sa, sb));
                    w.push(s);
                    return Some(w);
                }
                Some(nb) => {
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry((na, nb)) {
                        e.insert(((sa, sb), s));
                        queue.push_back((na, nb));
                    }
                }
            }
        }
    }
    None
}
