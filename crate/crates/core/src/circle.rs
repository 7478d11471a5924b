//! Exact arithmetic on the circle ℝ/ℤ: closed subsets as finite unions of
//! closed intervals with rational endpoints, open arcs, and continuous
//! piecewise-linear circle maps.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{fract, int, render, Rational};

/// Closed subset of the circle, stored as disjoint sorted closed intervals
/// of `[0, 1]`. The set is kept saturated: it contains `0` iff it contains
/// `1`, so set operations on `[0, 1]` agree with those on the circle.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ClosedSet {
    intervals: Vec<(Rational, Rational)>,
}

impl ClosedSet {
    pub fn empty() -> Self {
        ClosedSet::default()
    }

    pub fn full() -> Self {
        ClosedSet {
            intervals: vec![(int(0), int(1))],
        }
    }

    pub fn point(x: &Rational) -> Self {
        let x = fract(x);
        Self::from_intervals(vec![(x.clone(), x)])
    }

    /// The closed arc `[lo, lo + len]` on the circle.
    pub fn arc(lo: &Rational, len: &Rational) -> Self {
        if len.is_negative() {
            return Self::empty();
        }
        if *len >= int(1) {
            return Self::full();
        }
        let a = fract(lo);
        let b = &a + len;
        if b <= int(1) {
            Self::from_intervals(vec![(a, b)])
        } else {
            Self::from_intervals(vec![(a, int(1)), (int(0), b - int(1))])
        }
    }

    /// Normalizes intervals of `[0, 1]`: sorts, merges overlapping or
    /// touching pieces, and saturates the point `0 ≡ 1`.
    fn from_intervals(mut iv: Vec<(Rational, Rational)>) -> Self {
        iv.retain(|(a, b)| a <= b);
        let has0 = iv.iter().any(|(a, _)| a.is_zero());
        let has1 = iv.iter().any(|(_, b)| b.is_one());
        if has0 && !has1 {
            iv.push((int(1), int(1)));
        }
        if has1 && !has0 {
            iv.push((int(0), int(0)));
        }
        iv.sort();
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(iv.len());
        for (a, b) in iv {
            match out.last_mut() {
                Some((_, hi)) if a <= *hi => {
                    if b > *hi {
                        *hi = b;
                    }
                }
                _ => out.push((a, b)),
            }
        }
        ClosedSet { intervals: out }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn union(&self, other: &ClosedSet) -> ClosedSet {
        let mut iv = self.intervals.clone();
        iv.extend(other.intervals.iter().cloned());
        Self::from_intervals(iv)
    }

    pub fn intersect(&self, other: &ClosedSet) -> ClosedSet {
        let mut iv = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let (a, b) = &self.intervals[i];
            let (c, d) = &other.intervals[j];
            let lo = a.max(c).clone();
            let hi = b.min(d).clone();
            if lo <= hi {
                iv.push((lo, hi));
            }
            if b < d {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::from_intervals(iv)
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        let x = fract(x);
        self.intervals.iter().any(|(a, b)| *a <= x && x <= *b)
    }
}

impl fmt::Debug for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(a, b)| format!("[{}, {}]", render(a), render(b)))
            .collect();
        write!(f, "{{{}}}", parts.join(" ∪ "))
    }
}

/// Open arc `(lo, hi)` of the circle, with `0 <= lo < 1` and
/// `0 < hi - lo <= 1`; length 1 is the circle minus one point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpenArc {
    lo: Rational,
    hi: Rational,
}

impl OpenArc {
    /// Accepts any lift `lo < hi <= lo + 1`; `hi` may exceed 1 for arcs
    /// through `0`.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if hi <= lo {
            return Err(Error::InvalidArc(format!(
                "({}, {}) is empty",
                render(&lo),
                render(&hi)
            )));
        }
        if &hi - &lo > int(1) {
            return Err(Error::InvalidArc(format!(
                "({}, {}) is longer than the circle",
                render(&lo),
                render(&hi)
            )));
        }
        let shift = lo.floor();
        Ok(OpenArc {
            lo: &lo - &shift,
            hi: &hi - &shift,
        })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn closure(&self) -> ClosedSet {
        ClosedSet::arc(&self.lo, &self.len())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let x = fract(x);
        (self.lo < x && x < self.hi) || (self.lo < &x + int(1) && &x + int(1) < self.hi)
    }

    /// Whether the open arcs share a point.
    pub fn meets(&self, other: &OpenArc) -> bool {
        [-1, 0, 1].iter().any(|&k| {
            let c = &other.lo + int(k);
            let d = &other.hi + int(k);
            self.lo.clone().max(c) < self.hi.clone().min(d)
        })
    }

    /// Whether the closures share a point.
    pub fn closures_meet(&self, other: &OpenArc) -> bool {
        [-1, 0, 1].iter().any(|&k| {
            let c = &other.lo + int(k);
            let d = &other.hi + int(k);
            self.lo.clone().max(c) <= self.hi.clone().min(d)
        })
    }

    /// Whether `other ⊆ self`.
    pub fn contains_arc(&self, other: &OpenArc) -> bool {
        [-1, 0, 1]
            .iter()
            .any(|&k| self.lo <= &other.lo + int(k) && &other.hi + int(k) <= self.hi)
    }
}

impl fmt::Debug for OpenArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", render(&self.lo), render(&self.hi))
    }
}

/// Points of `[0, 1)` covered by no arc, as the left ends of the
/// uncovered closed pieces. Empty iff the arcs cover the circle.
pub fn uncovered_points(arcs: &[OpenArc]) -> Vec<Rational> {
    let mut lifted: Vec<(Rational, Rational)> = Vec::with_capacity(arcs.len() * 2);
    for a in arcs {
        lifted.push((a.lo.clone(), a.hi.clone()));
        lifted.push((&a.lo - int(1), &a.hi - int(1)));
    }
    lifted.sort();
    let one = int(1);
    let mut pos = int(0);
    let mut gaps = Vec::new();
    for (a, b) in lifted {
        if pos >= one {
            break;
        }
        if a >= pos {
            gaps.push(pos.clone());
        }
        if b > pos {
            pos = b;
        }
    }
    if pos < one {
        gaps.push(pos);
    }
    gaps
}

/// Continuous circle map whose lift is linear between consecutive
/// breakpoints `0 = b_0 < b_1 < … < b_{k-1} < 1` (and `b_k = 1`), taking
/// value `values[i]` at `b_i`. The degree is `values[k] - values[0]`.
#[derive(Clone, PartialEq, Eq)]
pub struct CircleMap {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl CircleMap {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.first().is_none_or(|b| !b.is_zero()) {
            return Err(Error::InvalidCircleMap(
                "breakpoints must start at 0".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) || breakpoints.last().unwrap() >= &int(1) {
            return Err(Error::InvalidCircleMap(
                "breakpoints must be strictly increasing in [0, 1)".into(),
            ));
        }
        if values.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidCircleMap(format!(
                "expected {} values (one per breakpoint plus the value at 1), got {}",
                breakpoints.len() + 1,
                values.len()
            )));
        }
        let degree = values.last().unwrap() - &values[0];
        if !degree.is_integer() {
            return Err(Error::InvalidCircleMap(
                "values at 0 and 1 differ by a non-integer; the map is not continuous on the circle"
                    .into(),
            ));
        }
        Ok(CircleMap {
            breakpoints,
            values,
        })
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    fn node(&self, i: usize) -> Rational {
        self.breakpoints.get(i).cloned().unwrap_or_else(|| int(1))
    }

    fn laps(&self) -> usize {
        self.breakpoints.len()
    }

    /// Lift value at `x ∈ [0, 1]`.
    fn lift(&self, x: &Rational) -> Rational {
        let i = match self.breakpoints.iter().rposition(|b| b <= x) {
            Some(i) => i.min(self.laps() - 1),
            None => 0,
        };
        let (a, b) = (self.node(i), self.node(i + 1));
        let (fa, fb) = (&self.values[i], &self.values[i + 1]);
        fa + (fb - fa) * (x - &a) / (b - a)
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        fract(&self.lift(&fract(x)))
    }

    /// Exact image of a closed set: each piece is split along the laps,
    /// each lap piece maps to the closed interval between its end values.
    pub fn image(&self, set: &ClosedSet) -> ClosedSet {
        let mut out = ClosedSet::empty();
        for (s, t) in set.intervals() {
            for i in 0..self.laps() {
                let (a, b) = (self.node(i), self.node(i + 1));
                let p = s.clone().max(a);
                let q = t.clone().min(b);
                if p > q {
                    continue;
                }
                let (fp, fq) = (self.lift(&p), self.lift(&q));
                let (lo, hi) = if fp <= fq { (fp, fq) } else { (fq, fp) };
                let len = &hi - &lo;
                out = out.union(&ClosedSet::arc(&lo, &len));
            }
        }
        out
    }
}

impl fmt::Debug for CircleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.breakpoints.iter().map(render).collect();
        let v: Vec<String> = self.values.iter().map(render).collect();
        write!(f, "CircleMap {{ breakpoints: {b:?}, values: {v:?} }}")
    }
}

/// Circle distance `min(|x - y| mod 1, 1 - |x - y| mod 1)`.
pub fn circle_distance(x: &Rational, y: &Rational) -> Rational {
    let d = fract(&(x - y));
    let e = int(1) - &d;
    d.min(e)
}
