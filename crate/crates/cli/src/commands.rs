use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use shadowlab::cover::{metric_gen_sequence, Cover};
use shadowlab::numeric::{dyadic, parse_rational};
use shadowlab::shadowing::{
    cover_criterion, random_pseudo_orbit, search_shadowing_point, stitch_shadowing_point,
    two_ones_pseudo_orbit, CandidateSet, CriterionVerdict, PseudoOrbit, ShadowReport, Verdict,
};
use shadowlab::spec::{
    load_code, load_cover, load_system, load_tower, parse_point, CodeSpec, SystemSpec,
};
use shadowlab::{
    alp_check, build_general_tower, build_po_tower, lifts_check, sofic_counterexample, AlpQuery,
    AlpVerdict, Error, Result, SemiconjugacyVerdict, SftVerdict, Subshift, System, TowerVerdict,
};

use crate::report::{cells, point, rat, word, yes_no, Outcome};
use crate::CoverArg;

pub const DEFAULT_SEED: u64 = 20240601;

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn subshift(system: &System) -> Result<Arc<Subshift>> {
    system
        .as_shift()
        .cloned()
        .ok_or_else(|| Error::Spec("this command needs a subshift system".into()))
}

fn cover_of(system: &System, arg: &CoverArg) -> Result<(Cover, Value)> {
    match (&arg.depth, &arg.cover) {
        (Some(d), _) => Ok((Cover::cylinders(system, *d)?, json!({"cylinders": d}))),
        (None, Some(p)) => Ok((load_cover(p, system)?, json!({"file": path_str(p)}))),
        (None, None) => Err(Error::Spec("give --depth or --cover".into())),
    }
}

pub fn language(spec: &Path, n: usize, minimal_forbidden: bool) -> Result<Outcome> {
    let x = subshift(&load_system(spec)?)?;
    let words = if minimal_forbidden {
        x.minimal_forbidden_words(n)
    } else {
        x.language(n)
    };
    let rendered: Vec<String> = words.iter().map(|w| word(&x, w)).collect();
    let what = if minimal_forbidden {
        format!("minimal forbidden words of length <= {n}")
    } else {
        format!("allowed words of length {n}")
    };
    let mut text = vec![format!("{} {what}", rendered.len())];
    text.extend(rendered.iter().cloned());
    Ok(Outcome {
        json: json!({
            "command": "language",
            "spec": path_str(spec),
            "n": n,
            "minimal_forbidden": minimal_forbidden,
            "count": rendered.len(),
            "words": rendered,
        }),
        text,
        holds: true,
    })
}

pub fn check_sft(spec: &Path, n: usize) -> Result<Outcome> {
    let x = subshift(&load_system(spec)?)?;
    let verdict = x.is_sft_up_to(n)?;
    let witness = match &verdict {
        SftVerdict::IsNStepSft => None,
        SftVerdict::NotNStepSft(w) => Some(word(&x, w)),
    };
    let holds = witness.is_none();
    let mut text = vec![format!("{n}-step SFT: {}", yes_no(holds))];
    if let Some(w) = &witness {
        text.push(format!(
            "witness: {w} (all {}-windows allowed, word forbidden)",
            n + 1
        ));
    }
    Ok(Outcome {
        json: json!({
            "command": "check-sft",
            "spec": path_str(spec),
            "n": n,
            "is_sft": holds,
            "witness": witness,
        }),
        text,
        holds,
    })
}

pub fn po(spec: &Path, arg: &CoverArg, len: usize) -> Result<Outcome> {
    let system = load_system(spec)?;
    let (cover, cover_json) = cover_of(&system, arg)?;
    let (graph, shift) = cover.po_shift()?;
    let edges = graph.named_edges();
    let words: Vec<Vec<String>> = shift
        .language(len)
        .iter()
        .map(|w| cells(&cover, w))
        .collect();
    let mut text = vec![
        format!("{} cells, {} edges", cover.len(), edges.len()),
        format!(
            "edges: {}",
            edges
                .iter()
                .map(|(u, v)| format!("{u}->{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        format!("{} pseudo-orbit words of length {len}", words.len()),
    ];
    text.extend(words.iter().map(|w| w.join(" ")));
    Ok(Outcome {
        json: json!({
            "command": "po",
            "spec": path_str(spec),
            "cover": cover_json,
            "L": len,
            "cells": cover.alphabet().symbols(),
            "edges": edges,
            "count": words.len(),
            "words": words,
        }),
        text,
        holds: true,
    })
}

pub fn orbit(spec: &Path, arg: &CoverArg, len: usize) -> Result<Outcome> {
    let system = load_system(spec)?;
    let (cover, cover_json) = cover_of(&system, arg)?;
    let words: Vec<Vec<String>> = cover
        .orbit_language(len)
        .iter()
        .map(|w| cells(&cover, w))
        .collect();
    let mut text = vec![format!("{} orbit words of length {len}", words.len())];
    text.extend(words.iter().map(|w| w.join(" ")));
    Ok(Outcome {
        json: json!({
            "command": "orbit",
            "spec": path_str(spec),
            "cover": cover_json,
            "L": len,
            "cells": cover.alphabet().symbols(),
            "count": words.len(),
            "words": words,
        }),
        text,
        holds: true,
    })
}

pub fn criterion(spec: &Path, coarse: usize, fine: usize, len: usize) -> Result<Outcome> {
    let system = load_system(spec)?;
    let u = Cover::cylinders(&system, coarse)?;
    let w = Cover::cylinders(&system, fine)?;
    let r = cover_criterion(&u, &w, len)?;
    let (verdict, text_verdict) = match &r.verdict {
        CriterionVerdict::EqualAtL => (json!("equal_at_L"), format!("iota(PO) = O at L={len}")),
        CriterionVerdict::Fails {
            side,
            witness,
            source,
        } => (
            json!({"fails": {
                "side": side,
                "witness": cells(&u, witness),
                "source": source.as_ref().map(|s| cells(&w, s)),
            }}),
            format!(
                "fails ({side:?}) at L={len}: witness {}{}",
                cells(&u, witness).join(" "),
                source
                    .as_ref()
                    .map(|s| format!(" from {}", cells(&w, s).join(" ")))
                    .unwrap_or_default()
            ),
        ),
    };
    Ok(Outcome {
        json: json!({
            "command": "criterion",
            "spec": path_str(spec),
            "depths": [coarse, fine],
            "L": len,
            "image_size": r.image_size,
            "orbit_size": r.orbit_size,
            "verdict": verdict,
        }),
        text: vec![
            format!(
                "depths ({coarse}, {fine}), L={len}: |iota(PO)|={}, |O|={}",
                r.image_size, r.orbit_size
            ),
            text_verdict,
        ],
        holds: r.holds(),
    })
}

pub fn witness_search(spec: &Path, depth: usize, depths: &[usize], len: usize) -> Result<Outcome> {
    let system = load_system(spec)?;
    let u = Cover::cylinders(&system, depth)?;
    let r = shadowlab::shadowing::witness_search(&u, depths.iter().copied(), len)?;
    let checked: Vec<Value> = r
        .checked
        .iter()
        .map(|(d, ok)| json!({"depth": d, "holds": ok}))
        .collect();
    let mut text: Vec<String> = r
        .checked
        .iter()
        .map(|(d, ok)| {
            format!(
                "depth {d}: {}",
                if *ok { "criterion holds" } else { "fails" }
            )
        })
        .collect();
    text.push(match r.found {
        Some(d) => format!("witness cover: depth {d} for depth {depth} at L={len}"),
        None => format!("no witness among the tried depths at L={len}"),
    });
    Ok(Outcome {
        json: json!({
            "command": "witness-search",
            "spec": path_str(spec),
            "coarse_depth": depth,
            "L": len,
            "checked": checked,
            "found": r.found,
        }),
        text,
        holds: r.found.is_some(),
    })
}

pub struct ShadowArgs<'a> {
    pub points: &'a [String],
    pub delta: Option<&'a str>,
    pub random: Option<usize>,
    pub n: Option<u32>,
    pub seed: u64,
    pub eps: Option<&'a str>,
    pub ones_position: Option<usize>,
    pub candidates: &'a [String],
}

fn pseudo_orbit_json(po: &PseudoOrbit) -> Value {
    json!({
        "points": po.points().iter().map(point).collect::<Vec<_>>(),
        "delta": rat(po.delta()),
        "gaps": po.gaps().iter().map(rat).collect::<Vec<_>>(),
    })
}

fn shadow_verdict(r: &ShadowReport) -> (Value, String) {
    match &r.verdict {
        Verdict::Shadowed {
            point: z,
            max_distance,
        } => (
            json!({"shadowed": {"point": point(z), "max_distance": rat(max_distance)}}),
            format!(
                "shadowed within {} by {} (max distance {})",
                rat(&r.epsilon),
                point(z),
                rat(max_distance)
            ),
        ),
        Verdict::NotShadowed {
            candidates,
            checked,
            complete,
        } => (
            json!({"not_shadowed": {"candidates": candidates, "checked": checked, "complete": complete}}),
            format!(
                "not shadowed within {} by any of {checked} candidates ({candidates}); {}",
                rat(&r.epsilon),
                if *complete {
                    "the family is complete, so no point shadows"
                } else {
                    "the family is not known to be complete"
                }
            ),
        ),
    }
}

pub fn shadow(spec: &Path, a: &ShadowArgs) -> Result<Outcome> {
    let system = load_system(spec)?;
    let mut source = json!({});
    let po = match a.random {
        Some(len) => {
            let n =
                a.n.ok_or_else(|| Error::Spec("--random needs --n".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            source = json!({"random": {"len": len, "n": n, "seed": a.seed}});
            random_pseudo_orbit(&subshift(&system)?, n, len, &mut rng)?
        }
        None => {
            let delta = a
                .delta
                .ok_or_else(|| Error::Spec("give --points with --delta, or --random".into()))?;
            let points = a
                .points
                .iter()
                .map(|p| parse_point(&system, p))
                .collect::<Result<Vec<_>>>()?;
            PseudoOrbit::new(&system, points, parse_rational(delta)?)?
        }
    };
    let (mode, report) = if a.ones_position.is_some() || !a.candidates.is_empty() {
        let eps = parse_rational(a.eps.expect("clap requires --eps"))?;
        let set = match a.ones_position {
            Some(k_max) => CandidateSet::OnesPosition { k_max },
            None => CandidateSet::Explicit(
                a.candidates
                    .iter()
                    .map(|p| parse_point(&system, p))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        ("search", search_shadowing_point(&po, &eps, &set)?)
    } else {
        let n =
            a.n.ok_or_else(|| Error::Spec("stitching needs --n (epsilon = 2^-n)".into()))?;
        ("stitch", stitch_shadowing_point(&po, n)?)
    };
    let (verdict, line) = shadow_verdict(&report);
    Ok(Outcome {
        json: json!({
            "command": "shadow",
            "spec": path_str(spec),
            "source": source,
            "pseudo_orbit": pseudo_orbit_json(&po),
            "mode": mode,
            "epsilon": rat(&report.epsilon),
            "verdict": verdict,
        }),
        text: vec![
            format!(
                "{}-pseudo-orbit of length {} ({mode})",
                rat(po.delta()),
                po.len()
            ),
            line,
        ],
        holds: report.is_shadowed(),
    })
}

pub fn tower(
    spec: &Path,
    depths: &[usize],
    len: usize,
    conj_len: usize,
    k: Option<usize>,
) -> Result<Outcome> {
    let system = load_system(spec)?;
    let base = json!({"command": "tower", "spec": path_str(spec), "depths": depths, "L": len});
    let pt = match build_po_tower(&system, depths, len) {
        Ok(t) => t,
        Err(Error::CriterionFails { pair }) => {
            let mut json = base;
            json["built"] = json!(false);
            json["criterion_fails"] = json!([depths[pair], depths[pair + 1]]);
            return Ok(Outcome {
                json,
                text: vec![format!(
                    "criterion fails between depths {} and {} at L={len}; no tower",
                    depths[pair],
                    depths[pair + 1]
                )],
                holds: false,
            });
        }
        Err(e) => return Err(e),
    };
    let k = k.unwrap_or(depths.len() - 1);
    let c = pt.conjugacy_check(conj_len, k)?;
    let levels: Vec<Value> = pt
        .tower
        .levels()
        .iter()
        .zip(&pt.depths)
        .map(|(x, d)| json!({"depth": d, "symbols": x.alphabet().len(), "words_at_L": x.language_size(len)}))
        .collect();
    let fibers = (0..depths.len())
        .map(|n| pt.projection_fiber_diameter(n).map(|r| rat(&r)))
        .collect::<Result<Vec<_>>>()?;
    let first = c.collisions.first().map(|(s, t)| {
        let show = |th: &shadowlab::Thread| -> Vec<Vec<String>> {
            th.words
                .iter()
                .zip(&pt.covers)
                .map(|(w, cv)| cells(cv, w))
                .collect()
        };
        json!([show(s), show(t)])
    });
    let mut json = base;
    json["built"] = json!(true);
    json["levels"] = json!(levels);
    json["fiber_diameters"] = json!(fibers);
    json["conjugacy"] = json!({
        "L": conj_len,
        "k": k,
        "threads": c.threads,
        "collisions": c.collisions.len(),
        "first_collision": first,
    });
    let text = vec![
        format!(
            "tower of pseudo-orbit shifts at depths {depths:?} validated (criterion at L={len})"
        ),
        format!("projection fiber diameters: {}", fibers.join(", ")),
        format!(
            "conjugacy check (L={conj_len}, k={k}): {} threads, {} collisions",
            c.threads,
            c.collisions.len()
        ),
    ];
    Ok(Outcome {
        json,
        text,
        holds: c.collisions.is_empty(),
    })
}

pub fn tower_validate(path: &Path) -> Result<Outcome> {
    let t = load_tower(path)?;
    let v = t.validate();
    let (json_v, line) = match &v {
        TowerVerdict::Valid => (
            json!("valid"),
            "valid: bondings map edges to edges and are onto".to_string(),
        ),
        TowerVerdict::EdgeNotMapped { level, word: w } => {
            let x = &t.levels()[level + 1];
            (
                json!({"edge_not_mapped": {"level": level, "word": word(x, w)}}),
                format!("bonding {level}: image of {} is not allowed", word(x, w)),
            )
        }
        TowerVerdict::NotSurjective { level, word: w } => {
            let x = &t.levels()[*level];
            (
                json!({"not_surjective": {"level": level, "word": word(x, w)}}),
                format!("bonding {level}: {} has no preimage", word(x, w)),
            )
        }
    };
    Ok(Outcome {
        json: json!({"command": "tower", "tower": path_str(path), "levels": t.levels().len(), "verdict": json_v}),
        text: vec![line],
        holds: v == TowerVerdict::Valid,
    })
}

pub fn tower_general(
    spec: &Path,
    cover_files: &[PathBuf],
    k0: usize,
    count: usize,
    growth: usize,
    len: usize,
) -> Result<Outcome> {
    let system = load_system(spec)?;
    let (covers, source) = if cover_files.is_empty() {
        (
            metric_gen_sequence(&system, k0, count, growth)?,
            json!({"uniform_arcs": {"k0": k0, "count": count, "growth": growth}}),
        )
    } else {
        (
            cover_files
                .iter()
                .map(|p| load_cover(p, &system))
                .collect::<Result<Vec<_>>>()?,
            json!({"files": cover_files.iter().map(|p| path_str(p)).collect::<Vec<_>>()}),
        )
    };
    let summary: Vec<Value> = covers
        .iter()
        .map(|c| json!({"cells": c.len(), "mesh": rat(&c.mesh()), "lebesgue": rat(&c.lebesgue_number())}))
        .collect();
    let mut json = json!({
        "command": "tower-general",
        "spec": path_str(spec),
        "covers": source,
        "cover_summary": summary,
        "L": len,
    });
    let g = match build_general_tower(covers, len) {
        Ok(g) => g,
        Err(Error::InclusionFails { level, witness }) => {
            json["inclusion"] = json!({"fails": {"level": level, "witness": witness}});
            return Ok(Outcome {
                json,
                text: vec![format!(
                    "inclusion fails at level {level}, L={len}: {}",
                    witness.join(" ")
                )],
                holds: false,
            });
        }
        Err(e) => return Err(e),
    };
    let onto = g.bonding_verdict == TowerVerdict::Valid;
    json["inclusion"] = json!("holds");
    json["levels"] = json!(g
        .tower
        .levels()
        .iter()
        .map(|x| x.alphabet().len())
        .collect::<Vec<_>>());
    json["bondings_onto"] = json!(onto);
    json["assumption"] = json!(g.assumption);
    json["selections"] = json!(g
        .selections
        .iter()
        .map(|s| {
            s.assignment
                .iter()
                .enumerate()
                .map(|(a, &b)| {
                    (
                        s.fine.symbol(a as u32).to_string(),
                        json!(s.coarse.symbol(b)),
                    )
                })
                .collect::<serde_json::Map<_, _>>()
        })
        .collect::<Vec<_>>());
    let text = vec![
        format!(
            "{} covers, levels with {:?} symbols",
            summary.len(),
            g.tower
                .levels()
                .iter()
                .map(|x| x.alphabet().len())
                .collect::<Vec<_>>()
        ),
        format!("star selections found; w-image of PO is inside O at L={len}"),
        format!("bondings onto: {}", yes_no(onto)),
        format!("assumed: {}", g.assumption),
    ];
    Ok(Outcome {
        json,
        text,
        holds: true,
    })
}

fn alp_verdict_json(v: &AlpVerdict) -> (Value, String) {
    match v {
        AlpVerdict::LiftedAll => (
            json!("lifted_all"),
            "every target pseudo-orbit lifts".into(),
        ),
        AlpVerdict::Counterexample {
            pattern,
            pseudo_orbit,
            revalidated,
        } => (
            json!({"counterexample": {
                "pattern": pattern,
                "pseudo_orbit": pseudo_orbit_json(pseudo_orbit),
                "revalidated": revalidated,
            }}),
            format!(
                "counterexample {} (points {}); revalidated: {}",
                pattern.join(" "),
                pseudo_orbit
                    .points()
                    .iter()
                    .map(point)
                    .collect::<Vec<_>>()
                    .join(", "),
                yes_no(*revalidated)
            ),
        ),
    }
}

pub fn alp(code: &Path, eps: &str, eta: &str, delta: &str, len: usize) -> Result<Outcome> {
    let c = load_code(code)?;
    let q = AlpQuery {
        epsilon: parse_rational(eps)?,
        eta: parse_rational(eta)?,
        delta: parse_rational(delta)?,
        len,
    };
    let r = alp_check(&c, &q)?;
    let (verdict, line) = alp_verdict_json(&r.verdict);
    Ok(Outcome {
        json: json!({
            "command": "alp",
            "code": path_str(code),
            "epsilon": rat(&q.epsilon),
            "eta": rat(&q.eta),
            "delta": rat(&q.delta),
            "L": len,
            "target_depth": r.target_depth,
            "source_depth": r.source_depth,
            "compared": r.compared,
            "verdict": verdict,
        }),
        text: vec![r.describe_grid(), line],
        holds: r.lifted_all(),
    })
}

pub fn lifts(code: &Path, depth: usize, depths: &[usize], len: usize) -> Result<Outcome> {
    let c = load_code(code)?;
    let r = lifts_check(&c, depth, depths, len)?;
    let attempts: Vec<Value> = r
        .attempts
        .iter()
        .map(|a| json!({"depth": a.depth, "lifts": a.witness.is_none(), "witness": a.witness}))
        .collect();
    let mut text: Vec<String> = r
        .attempts
        .iter()
        .map(|a| match &a.witness {
            None => format!("target depth {}: every pattern lifts", a.depth),
            Some(w) => format!("target depth {}: no lift of {}", a.depth, w.join(" ")),
        })
        .collect();
    text.insert(0, format!("source depth {depth}, L={len}"));
    Ok(Outcome {
        json: json!({
            "command": "lifts",
            "code": path_str(code),
            "source_depth": depth,
            "L": len,
            "attempts": attempts,
            "lifting_depth": r.lifting_depth(),
        }),
        text,
        holds: r.lifting_depth().is_some(),
    })
}

struct Check {
    name: String,
    holds: bool,
    detail: Value,
}

/// Rebuilds the sofic counterexample and re-runs every check on it.
pub fn demo_sofic() -> Result<Outcome> {
    let code = sofic_counterexample();
    let y = code.source().clone();
    let x = code.target().clone();
    let mut checks = Vec::new();

    let v = code.semiconjugacy_check();
    checks.push(Check {
        name: "code is a semiconjugacy Y -> X".into(),
        holds: v == SemiconjugacyVerdict::Confirmed,
        detail: json!(format!("{v:?}")),
    });

    let counts: Vec<(usize, usize, usize)> = (1..=10)
        .map(|n| (n, y.language_size(n), x.language_size(n)))
        .collect();
    checks.push(Check {
        name: "|L_n(Y)| = n+2 and |L_n(X)| = n+1 for n <= 10".into(),
        holds: counts.iter().all(|&(n, a, b)| a == n + 2 && b == n + 1),
        detail: json!(counts
            .iter()
            .map(|&(n, a, b)| json!({"n": n, "Y": a, "X": b}))
            .collect::<Vec<_>>()),
    });

    let y_sft = y.is_sft_up_to(1)? == SftVerdict::IsNStepSft;
    checks.push(Check {
        name: "Y is a 1-step SFT".into(),
        holds: y_sft,
        detail: json!(y_sft),
    });

    let mut witnesses = Vec::new();
    let mut all = true;
    for n in 1..=8 {
        match x.is_sft_up_to(n)? {
            SftVerdict::IsNStepSft => {
                all = false;
                witnesses.push(json!({"n": n, "witness": null}));
            }
            SftVerdict::NotNStepSft(w) => {
                let expected = format!("1{}1", "0".repeat(n));
                all &= word(&x, &w) == expected;
                witnesses.push(json!({"n": n, "witness": word(&x, &w)}));
            }
        }
    }
    checks.push(Check {
        name: "X is not an N-step SFT for N <= 8 (witness 1 0^N 1)".into(),
        holds: all,
        detail: json!(witnesses),
    });

    let xs = System::Shift(x.clone());
    let mut crit = Vec::new();
    let mut all = true;
    for m in 3..=8 {
        let r = cover_criterion(
            &Cover::cylinders(&xs, 2)?,
            &Cover::cylinders(&xs, m)?,
            2 * m + 4,
        )?;
        let fails_subset = matches!(
            r.verdict,
            CriterionVerdict::Fails {
                side: shadowlab::shadowing::Side::Subset,
                ..
            }
        );
        all &= fails_subset;
        crit.push(json!({"fine_depth": m, "L": 2 * m + 4, "fails_subset": fails_subset}));
    }
    checks.push(Check {
        name: "criterion (depth 2, depth m) fails for X, 3 <= m <= 8".into(),
        holds: all,
        detail: json!(crit),
    });

    let eps = dyadic(2);
    let mut refs = Vec::new();
    let mut all = true;
    for m in 1..=6 {
        let po = two_ones_pseudo_orbit(m)?;
        let r = search_shadowing_point(
            &po,
            &eps,
            &CandidateSet::OnesPosition {
                k_max: po.len() + 2,
            },
        )?;
        let refuted = matches!(r.verdict, Verdict::NotShadowed { complete: true, .. });
        all &= refuted;
        refs.push(json!({"m": m, "delta": rat(po.delta()), "len": po.len(), "refuted": refuted}));
    }
    checks.push(Check {
        name: "two-ones pseudo-orbits of X are not 1/4-shadowed, m <= 6".into(),
        holds: all,
        detail: json!(refs),
    });

    let mut alps = Vec::new();
    let mut all = true;
    for m in 1..=5u32 {
        let q = AlpQuery {
            epsilon: dyadic(2),
            eta: dyadic(2),
            delta: dyadic(m),
            len: 2 * m as usize + 6,
        };
        let r = alp_check(&code, &q)?;
        let ok = matches!(
            r.verdict,
            AlpVerdict::Counterexample {
                revalidated: true,
                ..
            }
        );
        all &= ok;
        alps.push(json!({"grid": r.describe_grid(), "verdict": alp_verdict_json(&r.verdict).0}));
    }
    checks.push(Check {
        name: "code is not ALP: revalidated counterexamples for delta = 2^-m, m <= 5".into(),
        holds: all,
        detail: json!(alps),
    });

    let ys = System::Shift(y.clone());
    let mut found = Vec::new();
    let mut all = true;
    for n in 1..=3 {
        let r = shadowlab::shadowing::witness_search(&Cover::cylinders(&ys, n)?, [n + 1], 8)?;
        all &= r.found == Some(n + 1);
        found.push(json!({"depth": n, "witness_depth": r.found}));
    }
    checks.push(Check {
        name: "Y has shadowing certificates (depth n+1 for depth n, L = 8)".into(),
        holds: all,
        detail: json!(found),
    });

    let holds = checks.iter().all(|c| c.holds);
    let text = checks
        .iter()
        .map(|c| format!("[{}] {}", if c.holds { "ok" } else { "FAILED" }, c.name))
        .collect();
    let to_value = |s: &SystemSpec| serde_json::to_value(s).expect("spec serializes");
    Ok(Outcome {
        json: json!({
            "command": "demo-sofic",
            "Y": to_value(&SystemSpec::of(&ys)),
            "X": to_value(&SystemSpec::of(&xs)),
            "code": serde_json::to_value(CodeSpec::of(&code)).expect("spec serializes"),
            "checks": checks
                .iter()
                .map(|c| json!({"name": c.name, "holds": c.holds, "detail": c.detail}))
                .collect::<Vec<_>>(),
        }),
        text,
        holds,
    })
}
