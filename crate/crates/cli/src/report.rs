use serde_json::Value;
use shadowlab::cover::Cover;
use shadowlab::{Point, Rational, Subshift, Sym};

/// Result of one command: a structured document, its text rendering, and
/// whether the checked property holds.
pub struct Outcome {
    pub json: Value,
    pub text: Vec<String>,
    pub holds: bool,
}

/// Always `p/q`, integers included.
pub fn rat(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn point(p: &Point) -> String {
    match p {
        Point::Circle(x) => rat(x),
        Point::Seq(_) => p.render(),
    }
}

pub fn cells(c: &Cover, w: &[Sym]) -> Vec<String> {
    c.alphabet().names(w)
}

pub fn word(x: &Subshift, w: &[Sym]) -> String {
    x.render(w)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
