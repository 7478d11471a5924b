use std::fmt;

use num_integer::Integer;

use crate::alphabet::{Alphabet, Sym};
use crate::error::{Error, Result};
use crate::numeric::{dyadic, Rational};
use num_traits::Zero;

/// Eventually periodic one-sided sequence `preperiod · period^ω`, stored in
/// canonical form (primitive period, shortest preperiod) so that structural
/// equality is equality of sequences.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpPoint {
    alphabet: Alphabet,
    preperiod: Vec<Sym>,
    period: Vec<Sym>,
}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols().hash(state);
    }
}

impl EpPoint {
    pub fn new(alphabet: Alphabet, preperiod: Vec<Sym>, period: Vec<Sym>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Precondition("period must be nonempty".into()));
        }
        alphabet.check(&preperiod)?;
        alphabet.check(&period)?;
        let mut p = EpPoint {
            alphabet,
            preperiod,
            period,
        };
        p.canonicalize();
        Ok(p)
    }

    /// Builds from compact strings, e.g. `parse(a, "101", "0")` is `101·0^ω`.
    pub fn parse(alphabet: &Alphabet, preperiod: &str, period: &str) -> Result<Self> {
        let pre = alphabet.parse_compact(preperiod)?;
        let per = alphabet.parse_compact(period)?;
        EpPoint::new(alphabet.clone(), pre.0, per.0)
    }

    pub fn constant(alphabet: Alphabet, s: Sym) -> Result<Self> {
        EpPoint::new(alphabet, Vec::new(), vec![s])
    }

    fn canonicalize(&mut self) {
        let n = self.period.len();
        let root = (1..=n)
            .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| self.period[i] == self.period[i - d]))
            .unwrap_or(n);
        self.period.truncate(root);
        while let Some(&last) = self.preperiod.last() {
            if last != *self.period.last().unwrap() {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn preperiod(&self) -> &[Sym] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Sym] {
        &self.period
    }

    pub fn at(&self, i: usize) -> Sym {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<Sym> {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Index of the first coordinate where the points differ, if any.
    pub fn first_disagreement(&self, other: &EpPoint) -> Result<Option<usize>> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let bound = self.preperiod.len().max(other.preperiod.len())
            + self.period.len().lcm(&other.period.len());
        Ok((0..bound).find(|&i| self.at(i) != other.at(i)))
    }

    /// `0` if equal, otherwise `2^(-k)` with `k` the first disagreement.
    pub fn distance(&self, other: &EpPoint) -> Result<Rational> {
        Ok(match self.first_disagreement(other)? {
            None => Rational::zero(),
            Some(k) => dyadic(k as u32),
        })
    }

    pub fn shift(&self) -> EpPoint {
        let mut p = self.clone();
        if p.preperiod.is_empty() {
            p.period.rotate_left(1);
        } else {
            p.preperiod.remove(0);
        }
        p.canonicalize();
        p
    }

    pub fn shift_by(&self, k: usize) -> EpPoint {
        let mut p = self.clone();
        let drop = k.min(p.preperiod.len());
        p.preperiod.drain(..drop);
        let rest = (k - drop) % p.period.len();
        p.period.rotate_left(rest);
        p.canonicalize();
        p
    }

    pub fn render(&self) -> String {
        let pre = self.alphabet.render(&self.preperiod);
        let per = self.alphabet.render(&self.period);
        if pre.is_empty() {
            format!("({per})^w")
        } else {
            format!("{pre}({per})^w")
        }
    }
}

impl fmt::Debug for EpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn bin() -> Alphabet {
        Alphabet::new(["0", "1"]).unwrap()
    }

    #[test]
    fn canonical_form_identifies_expansions() {
        let a = bin();
        assert_eq!(
            EpPoint::parse(&a, "0101", "0101").unwrap(),
            EpPoint::parse(&a, "", "01").unwrap()
        );
        assert_eq!(
            EpPoint::parse(&a, "10", "00").unwrap(),
            EpPoint::parse(&a, "1", "0").unwrap()
        );
        assert!(EpPoint::new(a, vec![], vec![]).is_err());
    }

    #[test]
    fn distance_examples() {
        let a = bin();
        let p = |pre, per| EpPoint::parse(&a, pre, per).unwrap();
        assert_eq!(p("", "01").distance(&p("", "01")).unwrap(), int(0));
        assert_eq!(p("", "10").distance(&p("101", "0")).unwrap(), dyadic(4));
        assert_eq!(p("1", "0").distance(&p("", "0")).unwrap(), int(1));
        let c = Alphabet::new(["0", "1", "2"]).unwrap();
        assert_eq!(
            p("", "0")
                .distance(&EpPoint::parse(&c, "", "0").unwrap())
                .unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn shift_examples() {
        let a = bin();
        let p = |pre, per| EpPoint::parse(&a, pre, per).unwrap();
        assert_eq!(p("1", "0").shift(), p("", "0"));
        assert_eq!(p("", "01").shift(), p("", "10"));
        assert_eq!(p("00", "1").shift().shift(), p("", "1"));
        let x = p("0011", "01");
        let mut y = x.clone();
        for _ in 0..5 {
            y = y.shift();
        }
        assert_eq!(x.shift_by(5), y);
        assert_eq!(x.shift_by(5), p("", "10"));
    }
}
