use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for all distances, gaps and arc endpoints.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^(-k)`.
pub fn dyadic(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k as usize)
}

/// If `x = 2^(-k)` for some `k >= 0`, returns `k`.
pub fn dyadic_exponent(x: &Rational) -> Option<u32> {
    if !x.is_positive() || !x.numer().is_one() {
        return None;
    }
    let d = x.denom();
    let bits = d.bits();
    if bits == 0 {
        return None;
    }
    let k = bits - 1;
    if *d == BigInt::one() << k as usize {
        Some(k as u32)
    } else {
        None
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let parsed = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad(text))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad(text))?;
            if q.is_zero() {
                return Err(bad(text));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(t.parse().map_err(|_| bad(text))?),
    };
    Ok(parsed)
}

fn bad(text: &str) -> Error {
    Error::Spec(format!("not a rational: {text:?}"))
}

/// Canonical `"p/q"` rendering (`"p"` for integers).
pub fn render(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Fractional part in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}
