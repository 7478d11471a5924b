//! Finite taut open covers of a system, the pseudo-orbit pattern shift
//! PO(𝒰), truncated orbit pattern languages O(𝒰)|_L, refinement maps and
//! star selections.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::circle::{uncovered_points, ClosedSet, OpenArc};
use crate::error::{Error, Result};
use crate::numeric::{dyadic, frac, int, Rational};
use crate::subshift::{Language, Subshift};
use crate::system::System;

#[derive(Clone, PartialEq, Eq)]
pub enum CellShape {
    /// Points of the subshift with this prefix.
    Cylinder(Word),
    Arc(OpenArc),
}

#[derive(Clone, PartialEq, Eq)]
pub struct CoverCell {
    pub id: String,
    pub shape: CellShape,
}

impl fmt::Debug for CoverCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            CellShape::Cylinder(_) => write!(f, "[{}]", self.id),
            CellShape::Arc(a) => write!(f, "{}={:?}", self.id, a),
        }
    }
}

#[derive(Clone)]
pub struct Cover {
    system: System,
    cells: Vec<CoverCell>,
    alphabet: Alphabet,
    depth: Option<usize>,
}

impl fmt::Debug for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cells.iter()).finish()
    }
}

impl Cover {
    /// Depth-`n` cylinder cover: one cell per allowed word of length `n`.
    pub fn cylinders(system: &System, n: usize) -> Result<Cover> {
        let x = system
            .as_shift()
            .ok_or_else(|| Error::Precondition("cylinder covers need a subshift system".into()))?;
        if n == 0 {
            return Err(Error::Precondition(
                "cylinder depth must be at least 1".into(),
            ));
        }
        let cells: Vec<CoverCell> = x
            .language(n)
            .into_iter()
            .map(|w| CoverCell {
                id: x.render(&w),
                shape: CellShape::Cylinder(w),
            })
            .collect();
        let alphabet = Alphabet::new(cells.iter().map(|c| c.id.clone()))?;
        Ok(Cover {
            system: system.clone(),
            cells,
            alphabet,
            depth: Some(n),
        })
    }

    /// Validated cover by open arcs, with cell ids `u0, u1, …`.
    pub fn arcs(system: &System, arcs: Vec<OpenArc>) -> Result<Cover> {
        if system.as_circle().is_none() {
            return Err(Error::Precondition(
                "arc covers need a circle system".into(),
            ));
        }
        let uncovered = uncovered_points(&arcs);
        if !uncovered.is_empty() {
            return Err(Error::NotACover { uncovered });
        }
        let cells: Vec<CoverCell> = arcs
            .into_iter()
            .enumerate()
            .map(|(i, a)| CoverCell {
                id: format!("u{i}"),
                shape: CellShape::Arc(a),
            })
            .collect();
        for (i, a) in cells.iter().enumerate() {
            for b in &cells[i + 1..] {
                let (CellShape::Arc(p), CellShape::Arc(q)) = (&a.shape, &b.shape) else {
                    unreachable!()
                };
                if p.closures_meet(q) && !p.meets(q) {
                    return Err(Error::NotTaut {
                        first: a.id.clone(),
                        second: b.id.clone(),
                    });
                }
            }
        }
        let alphabet = Alphabet::new(cells.iter().map(|c| c.id.clone()))?;
        Ok(Cover {
            system: system.clone(),
            cells,
            alphabet,
            depth: None,
        })
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn cells(&self) -> &[CoverCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Alphabet of cell ids, in cell order.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Cylinder depth, for cylinder covers.
    pub fn depth(&self) -> Option<usize> {
        self.depth
    }

    pub fn cell(&self, s: Sym) -> &CoverCell {
        &self.cells[s as usize]
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        if self.depth.is_some() {
            return true;
        }
        (0..self.len())
            .all(|i| (i + 1..self.len()).all(|j| !cells_meet(&self.cells[i], &self.cells[j])))
    }

    /// Largest cell diameter: `2^-n` for depth-`n` cylinders, the longest
    /// arc length for arcs.
    pub fn mesh(&self) -> Rational {
        match self.depth {
            Some(n) => dyadic(n as u32),
            None => self
                .cells
                .iter()
                .filter_map(|c| match &c.shape {
                    CellShape::Arc(a) => Some(a.len()),
                    CellShape::Cylinder(_) => None,
                })
                .max()
                .unwrap_or_else(|| int(0)),
        }
    }

    /// Every set of diameter below this number lies inside one cell. For
    /// arcs: every arc of length below it lies in one cell; computed
    /// exactly as `min` over arc left ends `a` of the longest forward
    /// reach `hi - a` of an arc containing `a`.
    pub fn lebesgue_number(&self) -> Rational {
        if let Some(n) = self.depth {
            return dyadic(n as u32 - 1);
        }
        let arcs: Vec<&OpenArc> = self.open_arcs().collect();
        arcs.iter()
            .map(|start| {
                let x = start.lo();
                arcs.iter()
                    .filter_map(|u| {
                        [int(0), int(1)].into_iter().find_map(|k| {
                            let y = x + &k;
                            (u.lo() < &y && &y < u.hi()).then(|| u.hi() - &y)
                        })
                    })
                    .max()
                    .unwrap_or_else(|| int(0))
            })
            .min()
            .unwrap_or_else(|| int(0))
    }

    fn open_arcs(&self) -> impl Iterator<Item = &OpenArc> {
        self.cells.iter().filter_map(|c| match &c.shape {
            CellShape::Arc(a) => Some(a),
            CellShape::Cylinder(_) => None,
        })
    }

    fn closure(&self, s: Sym) -> ClosedSet {
        match &self.cells[s as usize].shape {
            CellShape::Arc(a) => a.closure(),
            CellShape::Cylinder(_) => unreachable!("cylinder closures are handled symbolically"),
        }
    }

    fn shift(&self) -> Option<&Subshift> {
        self.system.as_shift().map(|x| x.as_ref())
    }

    fn cylinder_index(&self) -> HashMap<&[Sym], Sym> {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(i, c)| match &c.shape {
                CellShape::Cylinder(w) => Some((w.letters(), i as Sym)),
                CellShape::Arc(_) => None,
            })
            .collect()
    }

    /// Whether `f(cl U) ∩ cl V ≠ ∅` for cells `u`, `v` of this cover.
    pub fn closure_image_intersects(&self, u: Sym, v: Sym) -> bool {
        match (&self.cell(u).shape, &self.cell(v).shape) {
            (CellShape::Cylinder(w), CellShape::Cylinder(x)) => {
                cylinder_successor(self.shift().unwrap(), w, x)
            }
            _ => {
                let f = self.system.as_circle().unwrap();
                !f.image(&self.closure(u))
                    .intersect(&self.closure(v))
                    .is_empty()
            }
        }
    }

    /// [`Cover::closure_image_intersects`] by cell id.
    pub fn closure_image_intersects_ids(&self, first: &str, second: &str) -> Result<bool> {
        let u = self.alphabet.index_of(first)?;
        let v = self.alphabet.index_of(second)?;
        Ok(self.closure_image_intersects(u, v))
    }

    pub fn po_graph(&self) -> PoGraph {
        let n = self.len() as Sym;
        let edges = match self.system.as_circle() {
            Some(f) => {
                let closures: Vec<ClosedSet> = (0..n).map(|s| self.closure(s)).collect();
                let mut edges = BTreeSet::new();
                for u in 0..n {
                    let img = f.image(&closures[u as usize]);
                    for v in 0..n {
                        if !img.intersect(&closures[v as usize]).is_empty() {
                            edges.insert((u, v));
                        }
                    }
                }
                edges
            }
            None => (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| self.closure_image_intersects(u, v))
                .collect(),
        };
        PoGraph {
            alphabet: self.alphabet.clone(),
            edges,
        }
    }

    /// The pseudo-orbit pattern shift as a 1-step SFT over the cell ids.
    pub fn po_shift(&self) -> Result<(PoGraph, Subshift)> {
        let g = self.po_graph();
        let shift = Subshift::one_step(self.alphabet.clone(), &g.edges)?;
        Ok((g, shift))
    }

    /// Cell words `U_0 … U_{L-1}` with `⋂ f^{-i}(cl U_i) ≠ ∅`.
    pub fn orbit_language(&self, len: usize) -> Language {
        if len == 0 {
            return std::iter::once(Word::empty()).collect();
        }
        match self.system.as_shift() {
            Some(x) => {
                let n = self.depth.unwrap();
                let index = self.cylinder_index();
                x.language(len + n - 1)
                    .into_iter()
                    .map(|w| Word(w.windows(n).map(|c| index[c]).collect()))
                    .collect()
            }
            None => {
                let mut out = Language::new();
                let mut buf = Vec::with_capacity(len);
                for u in 0..self.len() as Sym {
                    buf.push(u);
                    self.orbit_dfs(self.closure(u), len, &mut buf, &mut out);
                    buf.pop();
                }
                out
            }
        }
    }

    fn orbit_dfs(&self, reach: ClosedSet, len: usize, buf: &mut Vec<Sym>, out: &mut Language) {
        if buf.len() == len {
            out.insert(Word(buf.clone()));
            return;
        }
        let img = self.system.as_circle().unwrap().image(&reach);
        for v in 0..self.len() as Sym {
            let next = img.intersect(&self.closure(v));
            if !next.is_empty() {
                buf.push(v);
                self.orbit_dfs(next, len, buf, out);
                buf.pop();
            }
        }
    }

    /// Whether every cell of `self` lies inside some cell of `coarse`.
    pub fn refines(&self, coarse: &Cover) -> bool {
        self.cells
            .iter()
            .all(|c| coarse.cells.iter().any(|d| cell_contains(d, c)))
    }

    /// Cells of `self` meeting `cell`.
    pub fn star(&self, cell: &CoverCell) -> Vec<Sym> {
        (0..self.len() as Sym)
            .filter(|&s| cells_meet(self.cell(s), cell))
            .collect()
    }
}

/// Whether the two cells share a point.
pub fn cells_meet(a: &CoverCell, b: &CoverCell) -> bool {
    match (&a.shape, &b.shape) {
        (CellShape::Cylinder(u), CellShape::Cylinder(v)) => u.starts_with(v) || v.starts_with(u),
        (CellShape::Arc(p), CellShape::Arc(q)) => p.meets(q),
        _ => false,
    }
}

/// Whether `small ⊆ big`.
pub fn cell_contains(big: &CoverCell, small: &CoverCell) -> bool {
    match (&big.shape, &small.shape) {
        (CellShape::Cylinder(u), CellShape::Cylinder(v)) => v.starts_with(u),
        (CellShape::Arc(p), CellShape::Arc(q)) => p.contains_arc(q),
        _ => false,
    }
}

fn cylinder_successor(x: &Subshift, w: &[Sym], v: &[Sym]) -> bool {
    if w.len() != v.len() || w[1..] != v[..v.len() - 1] {
        return false;
    }
    let mut merged = Vec::with_capacity(w.len() + 1);
    merged.push(w[0]);
    merged.extend_from_slice(v);
    x.allows(&merged)
}

/// Decides `f(cl U) ∩ cl V ≠ ∅` for two cells of covers of `system`.
pub fn closure_image_intersects(system: &System, u: &CoverCell, v: &CoverCell) -> Result<bool> {
    match (system, &u.shape, &v.shape) {
        (System::Shift(x), CellShape::Cylinder(w), CellShape::Cylinder(y)) => {
            if w.len() != y.len() {
                return Err(Error::Precondition("cylinders of different depths".into()));
            }
            Ok(cylinder_successor(x, w, y))
        }
        (System::Circle(f), CellShape::Arc(a), CellShape::Arc(b)) => {
            Ok(!f.image(&a.closure()).intersect(&b.closure()).is_empty())
        }
        _ => Err(Error::MixedSystems),
    }
}

/// Transition graph of the pseudo-orbit pattern shift.
#[derive(Clone, Debug)]
pub struct PoGraph {
    pub alphabet: Alphabet,
    pub edges: BTreeSet<(Sym, Sym)>,
}

impl PoGraph {
    pub fn has_edge(&self, u: Sym, v: Sym) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Edges as id pairs, in order.
    pub fn named_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                (
                    self.alphabet.symbol(u).to_string(),
                    self.alphabet.symbol(v).to_string(),
                )
            })
            .collect()
    }
}

/// Letterwise image of a language under a symbol map.
pub fn map_language(map: &[Sym], lang: &Language) -> Language {
    lang.iter()
        .map(|w| Word(w.iter().map(|&s| map[s as usize]).collect()))
        .collect()
}

/// The refinement map ι sending each fine cell to the unique coarse cell
/// containing it.
#[derive(Clone, Debug)]
pub struct RefinementMap {
    pub assignment: Vec<Sym>,
    pub fine: Alphabet,
    pub coarse: Alphabet,
}

impl RefinementMap {
    pub fn image_language(&self, lang: &Language) -> Language {
        map_language(&self.assignment, lang)
    }

    pub fn then(&self, next: &RefinementMap) -> Result<RefinementMap> {
        if self.coarse != next.fine {
            return Err(Error::AlphabetMismatch);
        }
        Ok(RefinementMap {
            assignment: self
                .assignment
                .iter()
                .map(|&s| next.assignment[s as usize])
                .collect(),
            fine: self.fine.clone(),
            coarse: next.coarse.clone(),
        })
    }
}

pub fn iota(fine: &Cover, coarse: &Cover) -> Result<RefinementMap> {
    if !fine.system.same_as(&coarse.system) {
        return Err(Error::MixedSystems);
    }
    if !fine.is_pairwise_disjoint() || !coarse.is_pairwise_disjoint() {
        return Err(Error::AmbiguousIota);
    }
    let assignment = fine
        .cells
        .iter()
        .map(|c| {
            coarse
                .cells
                .iter()
                .position(|d| cell_contains(d, c))
                .map(|i| i as Sym)
                .ok_or(Error::NotARefinement)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinementMap {
        assignment,
        fine: fine.alphabet.clone(),
        coarse: coarse.alphabet.clone(),
    })
}

/// Choice of a coarse cell `W(U) ⊇ st(U, 𝒰_{n+1})` for every cell `U` of
/// `𝒰_{n+2}`.
#[derive(Clone, Debug)]
pub struct StarSelection {
    pub assignment: Vec<Sym>,
    pub stars: Vec<Vec<Sym>>,
    pub fine: Alphabet,
    pub coarse: Alphabet,
}

impl StarSelection {
    pub fn image_language(&self, lang: &Language) -> Language {
        map_language(&self.assignment, lang)
    }
}

pub fn star_selection(coarse: &Cover, middle: &Cover, fine: &Cover) -> Result<StarSelection> {
    if !coarse.system.same_as(&middle.system) || !middle.system.same_as(&fine.system) {
        return Err(Error::MixedSystems);
    }
    if !middle.refines(coarse) || !fine.refines(middle) {
        return Err(Error::NotARefinement);
    }
    let mut assignment = Vec::with_capacity(fine.len());
    let mut stars = Vec::with_capacity(fine.len());
    for u in &fine.cells {
        let star = middle.star(u);
        let w = coarse
            .cells
            .iter()
            .position(|w| star.iter().all(|&s| cell_contains(w, middle.cell(s))));
        match w {
            Some(w) => {
                assignment.push(w as Sym);
                stars.push(star);
            }
            None => {
                return Err(Error::StarConditionFails {
                    cell: u.id.clone(),
                    star: star.iter().map(|&s| middle.cell(s).id.clone()).collect(),
                })
            }
        }
    }
    Ok(StarSelection {
        assignment,
        stars,
        fine: fine.alphabet.clone(),
        coarse: coarse.alphabet.clone(),
    })
}

pub fn w_image_language(sel: &StarSelection, po_language: &Language) -> Language {
    sel.image_language(po_language)
}

/// `k` arcs of length `3/(2k)` centred at `i/k`; consecutive arcs overlap
/// and no two closures touch without overlapping. Lebesgue number
/// `1/(2k)`.
pub fn uniform_arc_cover(system: &System, k: usize) -> Result<Cover> {
    if k < 2 {
        return Err(Error::Precondition(
            "uniform arc covers need at least 2 arcs".into(),
        ));
    }
    let k = k as i64;
    let r = frac(3, 4 * k);
    let arcs = (0..k)
        .map(|i| {
            let c = frac(i, k);
            OpenArc::new(&c - &r, &c + &r)
        })
        .collect::<Result<Vec<_>>>()?;
    Cover::arcs(system, arcs)
}

/// Uniform arc covers with `k_0` arcs, then each next cover the coarsest
/// uniform one whose mesh is below a third of the previous Lebesgue
/// number, scaled up by `growth`.
pub fn metric_gen_sequence(
    system: &System,
    k0: usize,
    count: usize,
    growth: usize,
) -> Result<Vec<Cover>> {
    let mut out: Vec<Cover> = Vec::with_capacity(count);
    let mut k = k0;
    for _ in 0..count {
        if let Some(prev) = out.last() {
            let bound = prev.lebesgue_number() / int(3);
            k = 2;
            while frac(3, 2 * k as i64) >= bound {
                k += 1;
            }
            k *= growth.max(1);
        }
        out.push(uniform_arc_cover(system, k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn ids(c: &Cover) -> Vec<&str> {
        c.cells().iter().map(|c| c.id.as_str()).collect()
    }

    fn lang(c: &Cover, ws: &[&[&str]]) -> Language {
        ws.iter()
            .map(|w| c.alphabet().parse_word(w).unwrap())
            .collect()
    }

    fn gm() -> System {
        System::shift(builtins::golden_mean())
    }

    fn doubling() -> System {
        System::circle(builtins::doubling_map())
    }

    fn arc(a: &str, b: &str) -> OpenArc {
        use crate::numeric::parse_rational as q;
        OpenArc::new(q(a).unwrap(), q(b).unwrap()).unwrap()
    }

    #[test]
    fn cylinder_cover_examples() {
        assert_eq!(ids(&Cover::cylinders(&gm(), 1).unwrap()), ["0", "1"]);
        assert_eq!(
            ids(&Cover::cylinders(&gm(), 2).unwrap()),
            ["00", "01", "10"]
        );
        let x = System::shift(builtins::at_most_one_one());
        assert_eq!(Cover::cylinders(&x, 3).unwrap().len(), 4);
        assert!(Cover::cylinders(&gm(), 0).is_err());
        assert!(Cover::cylinders(&doubling(), 1).is_err());
    }

    #[test]
    fn arc_cover_validation() {
        let f = doubling();
        let c = Cover::arcs(
            &f,
            vec![arc("0", "2/5"), arc("3/10", "7/10"), arc("13/20", "21/20")],
        )
        .unwrap();
        assert_eq!(c.mesh(), frac(2, 5));
        assert!(!c.is_pairwise_disjoint());
        assert_eq!(
            Cover::arcs(&f, vec![arc("0", "1/2"), arc("1/2", "1")]).unwrap_err(),
            Error::NotACover {
                uncovered: vec![int(0), frac(1, 2)]
            }
        );
        assert_eq!(
            Cover::arcs(&f, vec![arc("0", "1")]).unwrap_err(),
            Error::NotACover {
                uncovered: vec![int(0)]
            }
        );
        // covers, but u0 and u2 only touch at 1/2
        assert_eq!(
            Cover::arcs(
                &f,
                vec![arc("-1/8", "1/2"), arc("1/4", "15/16"), arc("1/2", "3/4")]
            )
            .unwrap_err(),
            Error::NotTaut {
                first: "u0".into(),
                second: "u2".into()
            }
        );
    }

    #[test]
    fn closure_image_examples() {
        let c = Cover::cylinders(&gm(), 1).unwrap();
        assert!(!c.closure_image_intersects_ids("1", "1").unwrap());
        assert!(c.closure_image_intersects_ids("0", "1").unwrap());
        let f = doubling();
        let u = CoverCell {
            id: "a".into(),
            shape: CellShape::Arc(arc("0", "1/4")),
        };
        let v = CoverCell {
            id: "b".into(),
            shape: CellShape::Arc(arc("1/2", "3/4")),
        };
        assert!(closure_image_intersects(&f, &u, &v).unwrap());
        let w = CoverCell {
            id: "c".into(),
            shape: CellShape::Arc(arc("5/8", "3/4")),
        };
        assert!(!closure_image_intersects(&f, &u, &w).unwrap());
        assert_eq!(
            closure_image_intersects(&gm(), &u, &v).unwrap_err(),
            Error::MixedSystems
        );
    }

    #[test]
    fn po_shift_examples() {
        let c = Cover::cylinders(&gm(), 1).unwrap();
        let (g, po) = c.po_shift().unwrap();
        assert_eq!(g.edges, BTreeSet::from([(0, 0), (0, 1), (1, 0)]));
        assert_eq!(po.language(6), builtins::golden_mean().language(6));
        let full = System::shift(builtins::full_shift(2));
        let (g, _) = Cover::cylinders(&full, 1).unwrap().po_shift().unwrap();
        assert_eq!(g.edges.len(), 4);
        let c2 = Cover::cylinders(&gm(), 2).unwrap();
        let (g, _) = c2.po_shift().unwrap();
        assert_eq!(
            g.edges,
            BTreeSet::from([(0, 0), (0, 1), (1, 2), (2, 0), (2, 1)])
        );
    }

    #[test]
    fn orbit_language_examples() {
        let c = Cover::cylinders(&gm(), 1).unwrap();
        assert_eq!(
            c.orbit_language(3),
            lang(
                &c,
                &[
                    &["0", "0", "0"],
                    &["0", "0", "1"],
                    &["0", "1", "0"],
                    &["1", "0", "0"],
                    &["1", "0", "1"]
                ]
            )
        );
        let full = System::shift(builtins::full_shift(2));
        assert_eq!(
            Cover::cylinders(&full, 1).unwrap().orbit_language(2).len(),
            4
        );
        let c = Cover::arcs(
            &doubling(),
            vec![arc("0", "2/5"), arc("3/10", "7/10"), arc("13/20", "21/20")],
        )
        .unwrap();
        let o2 = c.orbit_language(2);
        // for pairs, the orbit condition is the closure-image condition
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(
                    o2.contains(&Word(vec![u, v])),
                    c.closure_image_intersects(u, v)
                );
            }
        }
    }

    #[test]
    fn iota_examples() {
        let c1 = Cover::cylinders(&gm(), 1).unwrap();
        let c2 = Cover::cylinders(&gm(), 2).unwrap();
        let c3 = Cover::cylinders(&gm(), 3).unwrap();
        assert_eq!(iota(&c2, &c1).unwrap().assignment, vec![0, 0, 1]);
        assert_eq!(iota(&c3, &c2).unwrap().assignment, vec![0, 0, 1, 2, 2]);
        let f = doubling();
        let a = uniform_arc_cover(&f, 3).unwrap();
        let b = uniform_arc_cover(&f, 30).unwrap();
        assert_eq!(iota(&b, &a).unwrap_err(), Error::AmbiguousIota);
        assert_eq!(iota(&c1, &c2).unwrap_err(), Error::NotARefinement);
        assert_eq!(iota(&c1, &a).unwrap_err(), Error::MixedSystems);
    }

    #[test]
    fn star_selection_on_cylinders_is_truncation() {
        let c: Vec<Cover> = (1..=3)
            .map(|n| Cover::cylinders(&gm(), n).unwrap())
            .collect();
        let sel = star_selection(&c[0], &c[1], &c[2]).unwrap();
        let direct = iota(&c[2], &c[0]).unwrap();
        assert_eq!(sel.assignment, direct.assignment);
    }

    #[test]
    fn star_selection_needs_shrinking_mesh() {
        let f = doubling();
        let seq = metric_gen_sequence(&f, 3, 3, 1).unwrap();
        assert!(star_selection(&seq[0], &seq[1], &seq[2]).is_ok());
        let same = uniform_arc_cover(&f, 4).unwrap();
        assert!(matches!(
            star_selection(&same, &same, &same),
            Err(Error::StarConditionFails { .. })
        ));
    }

    #[test]
    fn lebesgue_number_of_uniform_cover() {
        let f = doubling();
        for k in [2usize, 3, 7] {
            let c = uniform_arc_cover(&f, k).unwrap();
            assert_eq!(c.lebesgue_number(), frac(1, 2 * k as i64));
            assert_eq!(c.mesh(), frac(3, 2 * k as i64));
        }
        let seq = metric_gen_sequence(&f, 3, 3, 1).unwrap();
        let ks: Vec<usize> = seq.iter().map(Cover::len).collect();
        assert_eq!(ks, [3, 28, 253]);
        for w in seq.windows(2) {
            assert!(w[1].mesh() * int(3) < w[0].lebesgue_number());
        }
    }
}
