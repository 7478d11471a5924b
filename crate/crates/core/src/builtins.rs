//! Standard example systems.

use crate::alphabet::{Alphabet, Word};
use crate::circle::CircleMap;
use crate::numeric::int;
use crate::subshift::Subshift;

fn alphabet(k: usize) -> Alphabet {
    Alphabet::new((0..k).map(|i| i.to_string())).expect("nonempty alphabet")
}

fn words(a: &Alphabet, ws: &[&str]) -> Vec<Word> {
    ws.iter()
        .map(|w| a.parse_compact(w).expect("builtin word"))
        .collect()
}

/// Full shift on the symbols `0 … k-1`.
pub fn full_shift(k: usize) -> Subshift {
    Subshift::full(alphabet(k))
}

/// Binary sequences without two consecutive 1s.
pub fn golden_mean() -> Subshift {
    let a = alphabet(2);
    let f = words(&a, &["11"]);
    Subshift::sft(a, f).expect("golden mean")
}

/// Binary sequences containing at most one 1; sofic, not of finite type.
pub fn at_most_one_one() -> Subshift {
    Subshift::sofic(
        alphabet(2),
        vec!["a".into(), "b".into()],
        vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)],
    )
    .expect("at most one 1")
}

/// Sequences over {0,1,2} of the forms `0^k 1 2^ω`, `0^ω`, `1 2^ω`,
/// `2^ω`: the 1-step SFT forbidding `02, 10, 11, 20, 21`.
pub fn sofic_cover_y() -> Subshift {
    let a = alphabet(3);
    let f = words(&a, &["02", "10", "11", "20", "21"]);
    Subshift::sft(a, f).expect("cover of the at-most-one-1 shift")
}

/// `x ↦ 2x mod 1`.
pub fn doubling_map() -> CircleMap {
    CircleMap::new(vec![int(0)], vec![int(0), int(2)]).expect("doubling map")
}
