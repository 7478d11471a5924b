mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use oracle::{NaiveShift, W};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shadowlab::circle::ClosedSet;
use shadowlab::cover::{iota, Cover};
use shadowlab::numeric::{dyadic, frac, parse_rational, render, Rational};
use shadowlab::shadowing::{random_pseudo_orbit, stitch_shadowing_point, Verdict};
use shadowlab::{
    Alphabet, BlockCode, EpPoint, Point, SemiconjugacyVerdict, Subshift, Sym, System, Word,
};

fn alphabet(k: u32) -> Alphabet {
    Alphabet::new((0..k).map(|a| a.to_string())).unwrap()
}

fn forbidden_words() -> impl Strategy<Value = (u32, Vec<W>)> {
    (2u32..=3).prop_flat_map(|k| {
        (
            Just(k),
            prop::collection::vec(prop::collection::vec(0..k, 1..=3), 0..=4),
        )
    })
}

fn one_step_edges() -> impl Strategy<Value = (u32, BTreeSet<(Sym, Sym)>)> {
    (2u32..=3).prop_flat_map(|k| {
        (
            Just(k),
            prop::collection::btree_set((0..k, 0..k), 1..=(k * k) as usize),
        )
    })
}

fn ep_point(k: u32) -> impl Strategy<Value = (Vec<Sym>, Vec<Sym>)> {
    (
        prop::collection::vec(0..k, 0..5),
        prop::collection::vec(0..k, 1..4),
    )
}

fn seq(k: u32, pre: &[Sym], per: &[Sym]) -> EpPoint {
    EpPoint::new(alphabet(k), pre.to_vec(), per.to_vec()).unwrap()
}

fn naive_at(pre: &[Sym], per: &[Sym], i: usize) -> Sym {
    if i < pre.len() {
        pre[i]
    } else {
        per[(i - pre.len()) % per.len()]
    }
}

fn sample_points() -> Vec<Rational> {
    (0..96).map(|j| frac(j, 96)).collect()
}

fn arc_strategy() -> impl Strategy<Value = ClosedSet> {
    (0i64..12, 0i64..=12).prop_map(|(lo, len)| ClosedSet::arc(&frac(lo, 12), &frac(len, 12)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sft_language_matches_brute_force((k, forbidden) in forbidden_words()) {
        let naive = NaiveShift::Sft { k, forbidden: forbidden.clone() };
        let x = match Subshift::sft(alphabet(k), forbidden.into_iter().map(Word)) {
            Ok(x) => x,
            Err(shadowlab::Error::EmptyShift) => {
                prop_assert!(naive.language(1).is_empty());
                return Ok(());
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for n in 1..=6 {
            let lib: BTreeSet<W> = x.language(n).into_iter().map(|w| w.0).collect();
            prop_assert_eq!(lib, naive.language(n));
        }
    }

    #[test]
    fn eventually_periodic_points_are_canonical((pre, per) in ep_point(3), extra in 0usize..3) {
        let a = seq(3, &pre, &per);
        let mut pre2 = pre.clone();
        for i in 0..extra * per.len() {
            pre2.push(per[i % per.len()]);
        }
        let per2: Vec<Sym> = per.iter().chain(per.iter()).copied().collect();
        prop_assert_eq!(&a, &seq(3, &pre2, &per2));
        for i in 0..20 {
            prop_assert_eq!(a.at(i), naive_at(&pre, &per, i));
        }
        for k in 0..6 {
            let s = a.shift_by(k);
            for i in 0..12 {
                prop_assert_eq!(s.at(i), a.at(i + k));
            }
        }
    }

    #[test]
    fn sequence_distance_is_an_ultrametric(p in ep_point(2), q in ep_point(2), r in ep_point(2)) {
        let (x, y, z) = (seq(2, &p.0, &p.1), seq(2, &q.0, &q.1), seq(2, &r.0, &r.1));
        let d = |a: &EpPoint, b: &EpPoint| a.distance(b).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y).max(d(&y, &z)));
        let expected = match oracle::first_difference(|i| x.at(i), |i| y.at(i), 64) {
            Some(i) => dyadic(i as u32),
            None => frac(0, 1),
        };
        prop_assert_eq!(d(&x, &y), expected);
    }

    #[test]
    fn block_codes_commute_with_the_shift(table in prop::collection::vec(0u32..2, 4), (pre, per) in ep_point(2)) {
        let full = Arc::new(Subshift::full(alphabet(2)));
        let rule: BTreeMap<Word, Sym> = (0..4u32).map(|i| (Word(vec![i / 2, i % 2]), table[i as usize])).collect();
        let code = BlockCode::new(full.clone(), full, 2, rule).unwrap();
        let x = seq(2, &pre, &per);
        let y = code.apply(&x).unwrap();
        prop_assert_eq!(code.apply(&x.shift()).unwrap(), y.shift());
        for i in 0..16 {
            prop_assert_eq!(y.at(i), table[(2 * x.at(i) + x.at(i + 1)) as usize]);
        }
    }

    #[test]
    fn semiconjugacy_verdicts_agree_with_word_images(table in prop::collection::vec(0u32..2, 4)) {
        // window-2 codes from the full 2-shift into the golden mean shift
        let full = Arc::new(Subshift::full(alphabet(2)));
        let gm = Arc::new(shadowlab::builtins::golden_mean());
        let rule: BTreeMap<Word, Sym> = (0..4u32).map(|i| (Word(vec![i / 2, i % 2]), table[i as usize])).collect();
        let code = BlockCode::new(full, gm, 2, rule).unwrap();
        let image = |n: usize| -> BTreeSet<W> {
            oracle::all_words(2, n + 1)
                .into_iter()
                .map(|w| w.windows(2).map(|b| table[(2 * b[0] + b[1]) as usize]).collect())
                .collect()
        };
        let target = oracle::golden_mean();
        match code.semiconjugacy_check() {
            SemiconjugacyVerdict::Confirmed => {
                for n in 1..=6 {
                    prop_assert_eq!(image(n), target.language(n));
                }
            }
            SemiconjugacyVerdict::NotInto { source, image: w } => {
                let mapped: W = source.windows(2).map(|b| table[(2 * b[0] + b[1]) as usize]).collect();
                prop_assert_eq!(&mapped, &w.0);
                prop_assert!(!target.allowed(&w));
            }
            SemiconjugacyVerdict::NotOnto { word } => {
                prop_assert!(target.allowed(&word));
                prop_assert!(!image(word.len()).contains(&word.0));
            }
        }
    }

    #[test]
    fn closed_set_operations_match_membership(a in arc_strategy(), b in arc_strategy()) {
        let (u, i) = (a.union(&b), a.intersect(&b));
        for x in sample_points() {
            let (ina, inb) = (a.contains_point(&x), b.contains_point(&x));
            prop_assert_eq!(u.contains_point(&x), ina || inb);
            prop_assert_eq!(i.contains_point(&x), ina && inb);
        }
        prop_assert_eq!(a.contains_point(&frac(0, 1)), a.contains_point(&frac(1, 1)));
    }

    #[test]
    fn rationals_round_trip(p in -200i64..200, q in 1i64..60) {
        let x = frac(p, q);
        prop_assert_eq!(parse_rational(&render(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stitching_shadows_random_pseudo_orbits((k, edges) in one_step_edges(), n in 1u32..=3, seed: u64) {
        let x = Subshift::one_step(alphabet(k), &edges);
        prop_assume!(x.is_ok());
        let x = Arc::new(x.unwrap());
        let po = random_pseudo_orbit(&x, n, 20, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let r = stitch_shadowing_point(&po, n).unwrap();
        let Verdict::Shadowed { point: Point::Seq(z), .. } = &r.verdict else {
            return Err(TestCaseError::fail("not shadowed"));
        };
        prop_assert!(x.contains_point(z).unwrap());
        for (i, p) in po.points().iter().enumerate() {
            let p = p.as_seq().unwrap();
            prop_assert!(oracle::first_difference(|j| z.at(i + j), |j| p.at(j), n as usize + 1).is_none());
        }
    }

    #[test]
    fn refinement_maps_orbit_languages_onto((k, edges) in one_step_edges(), d in 1usize..=2, len in 1usize..=5) {
        let x = Subshift::one_step(alphabet(k), &edges);
        prop_assume!(x.is_ok());
        let x = x.unwrap();
        let s = System::shift(x);
        let coarse = Cover::cylinders(&s, d).unwrap();
        let fine = Cover::cylinders(&s, d + 1).unwrap();
        let rho = iota(&fine, &coarse).unwrap();
        prop_assert_eq!(rho.image_language(&fine.orbit_language(len)), coarse.orbit_language(len));
        let (_, po) = fine.po_shift().unwrap();
        let (_, po_coarse) = coarse.po_shift().unwrap();
        prop_assert!(rho.image_language(&po.language(len)).is_subset(&po_coarse.language(len)));
    }
}
