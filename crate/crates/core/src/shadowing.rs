//! Metric pseudo-orbits and shadowing points, and the cover criterion
//! `ι(PO(𝒲))|_L = O(𝒰)|_L` with the search for a witnessing refinement.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::alphabet::{Sym, Word};
use crate::builtins;
use crate::cover::{iota, CellShape, Cover};
use crate::error::{Error, Result};
use crate::numeric::{dyadic, int, Rational};
use crate::point::EpPoint;
use crate::subshift::Subshift;
use crate::system::{Point, System};

/// A finite sequence of points with every gap `d(f(x_i), x_{i+1})`
/// strictly below `delta`.
#[derive(Clone, Debug)]
pub struct PseudoOrbit {
    system: System,
    points: Vec<Point>,
    delta: Rational,
}

impl PseudoOrbit {
    pub fn new(system: &System, points: Vec<Point>, delta: Rational) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPseudoOrbit);
        }
        for p in &points {
            if !system.contains(p)? {
                return Err(Error::PointNotInShift);
            }
        }
        for (i, w) in points.windows(2).enumerate() {
            let gap = system.distance(&system.apply(&w[0])?, &w[1])?;
            if gap >= delta {
                return Err(Error::GapTooLarge { index: i, gap });
            }
        }
        Ok(PseudoOrbit {
            system: system.clone(),
            points,
            delta,
        })
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn gaps(&self) -> Vec<Rational> {
        self.points
            .windows(2)
            .map(|w| {
                self.system
                    .distance(&self.system.apply(&w[0]).unwrap(), &w[1])
                    .unwrap()
            })
            .collect()
    }

    /// `max_i d(f^i(z), x_i)`.
    pub fn tracking_distance(&self, z: &Point) -> Result<Rational> {
        let mut cur = z.clone();
        let mut worst = int(0);
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                cur = self.system.apply(&cur)?;
            }
            let d = self.system.distance(&cur, p)?;
            if d > worst {
                worst = d;
            }
        }
        Ok(worst)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Shadowed {
        point: Point,
        max_distance: Rational,
    },
    NotShadowed {
        /// Description of the exhausted candidate set.
        candidates: String,
        checked: usize,
        /// Whether the candidate set provably contains every possible
        /// shadowing point, making the verdict a refutation.
        complete: bool,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShadowReport {
    pub epsilon: Rational,
    pub verdict: Verdict,
}

impl ShadowReport {
    pub fn is_shadowed(&self) -> bool {
        matches!(self.verdict, Verdict::Shadowed { .. })
    }
}

/// Shadowing point of a pseudo-orbit in a 1-step SFT built from the first
/// symbols of the points: `z = (x_0)_0 (x_1)_0 … (x_{L-2})_0 · x_{L-1}`.
/// Requires `delta <= 2^-(n+1)`; the result `2^-n`-shadows and is
/// re-verified exactly.
pub fn stitch_shadowing_point(po: &PseudoOrbit, n: u32) -> Result<ShadowReport> {
    let x = po
        .system
        .as_shift()
        .ok_or_else(|| Error::Precondition("stitching needs a subshift system".into()))?;
    if !x.is_one_step_presentation() {
        return Err(Error::Precondition(
            "stitching needs a 1-step SFT presentation".into(),
        ));
    }
    if po.delta > dyadic(n + 1) {
        return Err(Error::Precondition(format!(
            "delta must be at most 2^-{}",
            n + 1
        )));
    }
    let seqs: Vec<&EpPoint> = po.points.iter().map(|p| p.as_seq().unwrap()).collect();
    let last = seqs.last().unwrap();
    let mut pre: Vec<Sym> = seqs[..seqs.len() - 1].iter().map(|p| p.at(0)).collect();
    pre.extend_from_slice(last.preperiod());
    let z = EpPoint::new(x.alphabet().clone(), pre, last.period().to_vec())?;
    if !x.contains_point(&z)? {
        return Err(Error::Internal("stitched point left the shift".into()));
    }
    let z = Point::Seq(z);
    let max_distance = po.tracking_distance(&z)?;
    let epsilon = dyadic(n);
    if max_distance >= epsilon {
        return Err(Error::Internal(format!(
            "stitched point is only {max_distance}-close"
        )));
    }
    Ok(ShadowReport {
        epsilon,
        verdict: Verdict::Shadowed {
            point: z,
            max_distance,
        },
    })
}

/// Finite families of candidate shadowing points.
#[derive(Clone, Debug)]
pub enum CandidateSet {
    /// The least point of the shift beginning with each allowed word of
    /// length `len`, in lexicographic order of the words.
    Prefixes {
        len: usize,
    },
    Explicit(Vec<Point>),
    /// `0^ω`, then `0^k 1 0^ω` for `k = 0 … k_max`.
    OnesPosition {
        k_max: usize,
    },
}

impl CandidateSet {
    pub fn describe(&self) -> String {
        match self {
            CandidateSet::Prefixes { len } => {
                format!("least completions of all allowed words of length {len}")
            }
            CandidateSet::Explicit(v) => format!("{} explicit points", v.len()),
            CandidateSet::OnesPosition { k_max } => {
                format!("0^w and 0^k 1 0^w for k <= {k_max}")
            }
        }
    }

    fn points(&self, system: &System) -> Result<Vec<Point>> {
        match self {
            CandidateSet::Explicit(v) => Ok(v.clone()),
            CandidateSet::Prefixes { len } => {
                let x = shift_of(system)?;
                Ok(x.language(*len)
                    .iter()
                    .filter_map(|w| x.least_completion(w))
                    .map(Point::Seq)
                    .collect())
            }
            CandidateSet::OnesPosition { k_max } => {
                let x = shift_of(system)?;
                let a = x.alphabet();
                let zero = a.index_of("0")?;
                let one = a.index_of("1")?;
                let mut out = vec![Point::Seq(EpPoint::constant(a.clone(), zero)?)];
                for k in 0..=*k_max {
                    let mut pre = vec![zero; k];
                    pre.push(one);
                    out.push(Point::Seq(EpPoint::new(a.clone(), pre, vec![zero])?));
                }
                Ok(out)
            }
        }
    }
}

fn shift_of(system: &System) -> Result<&Arc<Subshift>> {
    system
        .as_shift()
        .ok_or_else(|| Error::Precondition("candidate family needs a subshift system".into()))
}

/// Smallest `r` with `2^-r < epsilon`: agreement on coordinates `0 … r-1`
/// is exactly the condition `d < epsilon`.
fn agreement_length(epsilon: &Rational) -> u32 {
    let mut r = 0;
    while dyadic(r) >= *epsilon {
        r += 1;
    }
    r
}

/// Returns the first candidate (in the family's order) lying in the system
/// and `epsilon`-shadowing the pseudo-orbit.
///
/// For [`CandidateSet::OnesPosition`] on a subshift of the at-most-one-1
/// shift, exhaustion is a complete refutation once
/// `k_max >= len + r - 2`, where `r` is the agreement length of `epsilon`:
/// every point of such a shift is `0^ω` or `0^k 1 0^ω`, and when
/// `k > len + r - 2` the coordinates inspected by the tracking condition
/// are those of `0^ω`.
pub fn search_shadowing_point(
    po: &PseudoOrbit,
    epsilon: &Rational,
    candidates: &CandidateSet,
) -> Result<ShadowReport> {
    if *epsilon <= int(0) {
        return Err(Error::Precondition("epsilon must be positive".into()));
    }
    let points = candidates.points(&po.system)?;
    let mut checked = 0;
    for z in points {
        if !po.system.contains(&z)? {
            continue;
        }
        checked += 1;
        let d = po.tracking_distance(&z)?;
        if d < *epsilon {
            return Ok(ShadowReport {
                epsilon: epsilon.clone(),
                verdict: Verdict::Shadowed {
                    point: z,
                    max_distance: d,
                },
            });
        }
    }
    let complete = match candidates {
        CandidateSet::OnesPosition { k_max } => {
            let r = agreement_length(epsilon) as usize;
            let x = shift_of(&po.system)?;
            let inside = x.alphabet() == builtins::at_most_one_one().alphabet()
                && x.inclusion_witness(&builtins::at_most_one_one())?.is_none();
            inside && k_max + 2 >= po.len() + r
        }
        _ => false,
    };
    Ok(ShadowReport {
        epsilon: epsilon.clone(),
        verdict: Verdict::NotShadowed {
            candidates: candidates.describe(),
            checked,
            complete,
        },
    })
}

/// `2^-m`-pseudo-orbit of the at-most-one-1 shift: `1 0^ω`, then
/// `0^(m+1) 1 0^ω` followed by its orbit until the 1 is back at
/// coordinate 0.
pub fn two_ones_pseudo_orbit(m: u32) -> Result<PseudoOrbit> {
    let x = builtins::at_most_one_one();
    let a = x.alphabet().clone();
    let mut points = vec![Point::Seq(EpPoint::new(a.clone(), vec![1], vec![0])?)];
    let mut pre = vec![0; m as usize + 1];
    pre.push(1);
    let mut p = EpPoint::new(a, pre, vec![0])?;
    for _ in 0..=m + 1 {
        points.push(Point::Seq(p.clone()));
        p = p.shift();
    }
    PseudoOrbit::new(&System::shift(x), points, dyadic(m))
}

/// Realizes a pseudo-orbit pattern of a depth-`m` cylinder cover by
/// concrete points: cell `c_i` becomes the least point beginning with
/// `(c_i)_0 · c_{i+1}` (the last cell by its own least point). Adjacent
/// points then agree after one shift on `m` coordinates, so the result is a
/// `2^-(m-1)`-pseudo-orbit.
pub fn pattern_pseudo_orbit(cover: &Cover, pattern: &[Sym]) -> Result<PseudoOrbit> {
    let m = cover
        .depth()
        .ok_or_else(|| Error::Precondition("patterns are realized on cylinder covers".into()))?;
    let x = shift_of(cover.system())?;
    let word = |s: Sym| match &cover.cell(s).shape {
        CellShape::Cylinder(w) => w.clone(),
        CellShape::Arc(_) => unreachable!(),
    };
    let mut points = Vec::with_capacity(pattern.len());
    for (i, &c) in pattern.iter().enumerate() {
        let cell = word(c);
        let prefix = match pattern.get(i + 1) {
            Some(&next) => {
                if !cover.closure_image_intersects(c, next) {
                    return Err(Error::Precondition(format!(
                        "cells {} and {} are not adjacent in the pseudo-orbit graph",
                        cover.cell(c).id,
                        cover.cell(next).id
                    )));
                }
                let mut p = vec![cell[0]];
                p.extend_from_slice(&word(next));
                p
            }
            None => cell.0,
        };
        let p = x
            .least_completion(&prefix)
            .ok_or_else(|| Error::Internal("adjacent cells do not extend".into()))?;
        points.push(Point::Seq(p));
    }
    PseudoOrbit::new(cover.system(), points, dyadic(m as u32 - 1))
}

/// Random `2^-(n+1)`-pseudo-orbit of the given length: a uniform walk on
/// the pseudo-orbit graph of the depth-`(n+2)` cylinder cover, realized by
/// [`pattern_pseudo_orbit`].
pub fn random_pseudo_orbit<R: Rng>(
    x: &Arc<Subshift>,
    n: u32,
    len: usize,
    rng: &mut R,
) -> Result<PseudoOrbit> {
    if len == 0 {
        return Err(Error::EmptyPseudoOrbit);
    }
    let system = System::Shift(x.clone());
    let cover = Cover::cylinders(&system, n as usize + 2)?;
    let graph = cover.po_graph();
    let mut succ: Vec<Vec<Sym>> = vec![Vec::new(); cover.len()];
    for &(u, v) in &graph.edges {
        succ[u as usize].push(v);
    }
    let mut pattern = vec![rng.gen_range(0..cover.len()) as Sym];
    while pattern.len() < len {
        let last = *pattern.last().unwrap() as usize;
        let next = *succ[last]
            .choose(rng)
            .ok_or_else(|| Error::Internal("cell without successor".into()))?;
        pattern.push(next);
    }
    pattern_pseudo_orbit(&cover, &pattern)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `ι(PO(𝒲))|_L ⊆ O(𝒰)|_L` fails.
    Subset,
    /// `O(𝒰)|_L ⊆ ι(PO(𝒲))|_L` fails; impossible for valid covers.
    Superset,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CriterionVerdict {
    EqualAtL,
    Fails {
        side: Side,
        /// Word over the coarse cells.
        witness: Word,
        /// For [`Side::Subset`], the pseudo-orbit pattern of the fine cover
        /// mapping onto `witness`.
        source: Option<Word>,
    },
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub len: usize,
    pub image_size: usize,
    pub orbit_size: usize,
    pub verdict: CriterionVerdict,
}

impl CriterionReport {
    pub fn holds(&self) -> bool {
        self.verdict == CriterionVerdict::EqualAtL
    }
}

/// Compares `ι(PO(fine))|_L` with `O(coarse)|_L` for pairwise disjoint
/// covers, `fine` refining `coarse`.
pub fn cover_criterion(coarse: &Cover, fine: &Cover, len: usize) -> Result<CriterionReport> {
    let rho = iota(fine, coarse)?;
    let (_, po) = fine.po_shift()?;
    let po_words = po.language(len);
    let orbit = coarse.orbit_language(len);
    let image = rho.image_language(&po_words);
    let mut verdict = CriterionVerdict::EqualAtL;
    if let Some(src) = po_words
        .iter()
        .find(|w| !orbit.contains(&map_word(&rho.assignment, w)))
    {
        verdict = CriterionVerdict::Fails {
            side: Side::Subset,
            witness: map_word(&rho.assignment, src),
            source: Some(src.clone()),
        };
    } else if let Some(w) = orbit.iter().find(|w| !image.contains(*w)) {
        verdict = CriterionVerdict::Fails {
            side: Side::Superset,
            witness: w.clone(),
            source: None,
        };
    }
    Ok(CriterionReport {
        len,
        image_size: image.len(),
        orbit_size: orbit.len(),
        verdict,
    })
}

fn map_word(map: &[Sym], w: &[Sym]) -> Word {
    Word(w.iter().map(|&s| map[s as usize]).collect())
}

#[derive(Clone, Debug)]
pub struct WitnessSearch {
    /// First depth whose cylinder cover satisfies the criterion.
    pub found: Option<usize>,
    /// Every depth tried, with its outcome.
    pub checked: Vec<(usize, bool)>,
}

/// Scans cylinder covers of the given depths (in order) for one that
/// satisfies the cover criterion against `coarse` at length `len`.
pub fn witness_search(
    coarse: &Cover,
    depths: impl IntoIterator<Item = usize>,
    len: usize,
) -> Result<WitnessSearch> {
    let n = coarse
        .depth()
        .ok_or_else(|| Error::Precondition("witness search needs a cylinder cover".into()))?;
    let mut checked = Vec::new();
    for d in depths {
        if d < n {
            continue;
        }
        let fine = Cover::cylinders(coarse.system(), d)?;
        let ok = cover_criterion(coarse, &fine, len)?.holds();
        checked.push((d, ok));
        if ok {
            return Ok(WitnessSearch {
                found: Some(d),
                checked,
            });
        }
    }
    Ok(WitnessSearch {
        found: None,
        checked,
    })
}
