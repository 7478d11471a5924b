//! JSON specifications of systems, covers, block codes, and towers.
//!
//! Rationals are written as `"p/q"` strings. A system referenced from a
//! code or tower may be given inline or as a path relative to the file
//! that mentions it.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::circle::{CircleMap, OpenArc};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::factor::BlockCode;
use crate::numeric::{parse_rational, render, Rational};
use crate::point::EpPoint;
use crate::subshift::{Presentation, Subshift};
use crate::system::{Point, System};
use crate::tower::SftTower;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemSpec {
    Sft {
        alphabet: Vec<String>,
        forbidden: Vec<Vec<String>>,
    },
    Sofic {
        alphabet: Vec<String>,
        vertices: Vec<String>,
        edges: Vec<(VertexRef, VertexRef, String)>,
    },
    PlCircle {
        breakpoints: Vec<String>,
        values: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoverSpec {
    Cylinders { depth: usize },
    Arcs { arcs: Vec<(String, String)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemRef {
    Inline(SystemSpec),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CodeSpec {
    BlockCode {
        window: usize,
        /// Window (compact, or `.`-separated for multi-character symbols)
        /// to target symbol.
        rule: BTreeMap<String, String>,
        source: SystemRef,
        target: SystemRef,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerSpec {
    pub levels: Vec<SystemRef>,
    /// `bondings[n]` sends each symbol of level `n + 1` to one of level `n`.
    pub bondings: Vec<BTreeMap<String, String>>,
}

fn rationals(xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter().map(|s| parse_rational(s)).collect()
}

fn sym(a: &Alphabet, name: &str) -> Result<Sym> {
    a.index_of(name)
}

/// Parses a word written as its rendering.
pub fn parse_word_text(a: &Alphabet, text: &str) -> Result<Word> {
    if a.single_char() {
        a.parse_compact(text)
    } else if text.is_empty() {
        Ok(Word::empty())
    } else {
        a.parse_word(&text.split('.').collect::<Vec<_>>())
    }
}

impl SystemSpec {
    pub fn build(&self) -> Result<System> {
        match self {
            SystemSpec::Sft {
                alphabet,
                forbidden,
            } => {
                let a = Alphabet::new(alphabet.iter().cloned())?;
                let words = forbidden
                    .iter()
                    .map(|w| a.parse_word(w))
                    .collect::<Result<Vec<_>>>()?;
                Ok(System::shift(Subshift::sft(a, words)?))
            }
            SystemSpec::Sofic {
                alphabet,
                vertices,
                edges,
            } => {
                let a = Alphabet::new(alphabet.iter().cloned())?;
                let vertex = |r: &VertexRef| -> Result<usize> {
                    match r {
                        VertexRef::Index(i) => Ok(*i),
                        VertexRef::Name(n) => {
                            vertices.iter().position(|v| v == n).ok_or_else(|| {
                                Error::InvalidPresentation(format!("unknown vertex {n:?}"))
                            })
                        }
                    }
                };
                let edges = edges
                    .iter()
                    .map(|(v, w, l)| Ok((vertex(v)?, vertex(w)?, sym(&a, l)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(System::shift(Subshift::sofic(a, vertices.clone(), edges)?))
            }
            SystemSpec::PlCircle {
                breakpoints,
                values,
            } => Ok(System::circle(CircleMap::new(
                rationals(breakpoints)?,
                rationals(values)?,
            )?)),
        }
    }

    /// Specification reproducing a system's presentation.
    pub fn of(system: &System) -> SystemSpec {
        match system {
            System::Shift(x) => {
                let a = x.alphabet();
                let alphabet = a.symbols().to_vec();
                match x.presentation() {
                    Presentation::ForbiddenWords { forbidden } => SystemSpec::Sft {
                        alphabet,
                        forbidden: forbidden.iter().map(|w| a.names(w)).collect(),
                    },
                    Presentation::LabeledGraph { vertices, edges } => SystemSpec::Sofic {
                        alphabet,
                        vertices: vertices.clone(),
                        edges: edges
                            .iter()
                            .map(|&(v, w, l)| {
                                (
                                    VertexRef::Name(vertices[v].clone()),
                                    VertexRef::Name(vertices[w].clone()),
                                    a.symbol(l).to_string(),
                                )
                            })
                            .collect(),
                    },
                }
            }
            System::Circle(f) => SystemSpec::PlCircle {
                breakpoints: f.breakpoints().iter().map(render).collect(),
                values: f.values().iter().map(render).collect(),
            },
        }
    }
}

impl CoverSpec {
    pub fn build(&self, system: &System) -> Result<Cover> {
        match self {
            CoverSpec::Cylinders { depth } => Cover::cylinders(system, *depth),
            CoverSpec::Arcs { arcs } => {
                let arcs = arcs
                    .iter()
                    .map(|(lo, hi)| OpenArc::new(parse_rational(lo)?, parse_rational(hi)?))
                    .collect::<Result<Vec<_>>>()?;
                Cover::arcs(system, arcs)
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Spec(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Spec(format!("{}: {e}", path.display())))
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

impl SystemRef {
    pub fn resolve(&self, base: &Path) -> Result<System> {
        match self {
            SystemRef::Inline(s) => s.build(),
            SystemRef::Path(p) => load_system(&base.join(p)),
        }
    }
}

fn shift_of(system: System, role: &str) -> Result<Arc<Subshift>> {
    match system {
        System::Shift(x) => Ok(x),
        System::Circle(_) => Err(Error::Spec(format!("the {role} must be a subshift"))),
    }
}

impl CodeSpec {
    pub fn build(&self, base: &Path) -> Result<BlockCode> {
        let CodeSpec::BlockCode {
            window,
            rule,
            source,
            target,
        } = self;
        let source = shift_of(source.resolve(base)?, "code source")?;
        let target = shift_of(target.resolve(base)?, "code target")?;
        let rule = rule
            .iter()
            .map(|(k, v)| {
                Ok((
                    parse_word_text(source.alphabet(), k)?,
                    sym(target.alphabet(), v)?,
                ))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        BlockCode::new(source, target, *window, rule)
    }

    /// Inline specification of a code.
    pub fn of(code: &BlockCode) -> CodeSpec {
        let (s, t) = (code.source(), code.target());
        CodeSpec::BlockCode {
            window: code.window(),
            rule: code
                .rule()
                .iter()
                .map(|(w, &b)| (s.render(w), t.alphabet().symbol(b).to_string()))
                .collect(),
            source: SystemRef::Inline(SystemSpec::of(&System::Shift(s.clone()))),
            target: SystemRef::Inline(SystemSpec::of(&System::Shift(t.clone()))),
        }
    }
}

impl TowerSpec {
    pub fn build(&self, base: &Path) -> Result<SftTower> {
        let levels = self
            .levels
            .iter()
            .map(|r| shift_of(r.resolve(base)?, "tower level").map(|x| (*x).clone()))
            .collect::<Result<Vec<_>>>()?;
        if self.bondings.len() + 1 != levels.len() {
            return Err(Error::InvalidTower(format!(
                "{} levels need {} bondings",
                levels.len(),
                levels.len().saturating_sub(1)
            )));
        }
        let mut bondings = Vec::new();
        for (n, map) in self.bondings.iter().enumerate() {
            let (lower, upper) = (levels[n].alphabet(), levels[n + 1].alphabet());
            let mut g = vec![None; upper.len()];
            for (k, v) in map {
                g[sym(upper, k)? as usize] = Some(sym(lower, v)?);
            }
            let g = g
                .into_iter()
                .enumerate()
                .map(|(a, b)| {
                    b.ok_or_else(|| {
                        Error::InvalidTower(format!(
                            "bonding {n} does not map symbol {}",
                            upper.symbol(a as Sym)
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            bondings.push(g);
        }
        SftTower::new(levels, bondings)
    }
}

/// Parses a point: `pre(per)` with an optional trailing `^w` on
/// subshifts (`.`-separated symbols for multi-character alphabets), a
/// rational on circles.
pub fn parse_point(system: &System, text: &str) -> Result<Point> {
    let t = text.trim();
    match system {
        System::Circle(_) => Ok(Point::circle(parse_rational(t)?)),
        System::Shift(x) => {
            let t = t.strip_suffix("^w").unwrap_or(t);
            let (pre, per) = t
                .strip_suffix(')')
                .and_then(|s| s.split_once('('))
                .ok_or_else(|| Error::Spec(format!("not a point: {text:?}, expected pre(per)")))?;
            let a = x.alphabet();
            let p = EpPoint::new(
                a.clone(),
                parse_word_text(a, pre.trim_end_matches('.'))?.0,
                parse_word_text(a, per)?.0,
            )?;
            Ok(Point::Seq(p))
        }
    }
}

pub fn load_system(path: &Path) -> Result<System> {
    parse::<SystemSpec>(path, &read(path)?)?.build()
}

pub fn load_cover(path: &Path, system: &System) -> Result<Cover> {
    parse::<CoverSpec>(path, &read(path)?)?.build(system)
}

pub fn load_code(path: &Path) -> Result<BlockCode> {
    parse::<CodeSpec>(path, &read(path)?)?.build(&base_dir(path))
}

pub fn load_tower(path: &Path) -> Result<SftTower> {
    parse::<TowerSpec>(path, &read(path)?)?.build(&base_dir(path))
}
