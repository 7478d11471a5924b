use std::fmt;
use std::sync::Arc;

use crate::circle::{circle_distance, CircleMap};
use crate::error::{Error, Result};
use crate::numeric::{fract, render, Rational};
use crate::point::EpPoint;
use crate::subshift::Subshift;

/// A finitely presented dynamical system: a subshift with the shift map,
/// or a piecewise-linear circle map.
#[derive(Clone)]
pub enum System {
    Shift(Arc<Subshift>),
    Circle(Arc<CircleMap>),
}

/// An exactly represented point of a [`System`].
#[derive(Clone, PartialEq, Eq)]
pub enum Point {
    Seq(EpPoint),
    Circle(Rational),
}

impl System {
    pub fn shift(x: Subshift) -> Self {
        System::Shift(Arc::new(x))
    }

    pub fn circle(f: CircleMap) -> Self {
        System::Circle(Arc::new(f))
    }

    pub fn as_shift(&self) -> Option<&Arc<Subshift>> {
        match self {
            System::Shift(x) => Some(x),
            System::Circle(_) => None,
        }
    }

    pub fn as_circle(&self) -> Option<&Arc<CircleMap>> {
        match self {
            System::Circle(f) => Some(f),
            System::Shift(_) => None,
        }
    }

    pub fn same_as(&self, other: &System) -> bool {
        match (self, other) {
            (System::Shift(a), System::Shift(b)) => Arc::ptr_eq(a, b) || **a == **b,
            (System::Circle(a), System::Circle(b)) => Arc::ptr_eq(a, b) || **a == **b,
            _ => false,
        }
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        match (self, p) {
            (System::Shift(x), Point::Seq(q)) => x.contains_point(q),
            (System::Circle(_), Point::Circle(_)) => Ok(true),
            _ => Err(Error::MixedSystems),
        }
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        match (self, p) {
            (System::Shift(_), Point::Seq(q)) => Ok(Point::Seq(q.shift())),
            (System::Circle(f), Point::Circle(x)) => Ok(Point::Circle(f.apply(x))),
            _ => Err(Error::MixedSystems),
        }
    }

    pub fn distance(&self, p: &Point, q: &Point) -> Result<Rational> {
        match (self, p, q) {
            (System::Shift(_), Point::Seq(a), Point::Seq(b)) => a.distance(b),
            (System::Circle(_), Point::Circle(a), Point::Circle(b)) => Ok(circle_distance(a, b)),
            _ => Err(Error::MixedSystems),
        }
    }
}

impl fmt::Debug for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            System::Shift(x) => x.fmt(f),
            System::Circle(m) => m.fmt(f),
        }
    }
}

impl Point {
    pub fn circle(x: Rational) -> Self {
        Point::Circle(fract(&x))
    }

    pub fn as_seq(&self) -> Option<&EpPoint> {
        match self {
            Point::Seq(p) => Some(p),
            Point::Circle(_) => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Point::Seq(p) => p.render(),
            Point::Circle(x) => render(x),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<EpPoint> for Point {
    fn from(p: EpPoint) -> Self {
        Point::Seq(p)
    }
}
