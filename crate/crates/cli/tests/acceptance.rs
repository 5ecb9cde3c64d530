//! Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Criteria listed in `KNOWN_RED` are reproducible deviations
//! of the published results; they are printed as FAIL together with the
//! evidence. The run fails on any other FAIL and on a known red that starts
//! passing.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use twistfree::{run, Cli};
use twistfree_core::bounds::{
    norm_growth_bound, norm_growth_min_exponent, region_bound_terms, region_min_exponent, uniform_free_power,
    uniform_relpa_power, RatioMode,
};
use twistfree_core::classify::{
    classify_free_2, classify_relpa_2, nonfree_witness_2, standard_pair, torus_triangle, torus_triple_certificate,
    torus_triple_relpa,
};
use twistfree_core::consistency::{check_verdict, OracleBounds};
use twistfree_core::oracle::{find_reducibles, find_relations, rotation_fixing};
use twistfree_core::pingpong::{
    exceptional_curves, region_membership, verify_ppl, verify_ppwtc, verify_wpp, PingPongParams, VerifyConfig,
};
use twistfree_core::rational::{int, ratio, Rational};
use twistfree_core::system::{cauchy_schwarz_holds, twist_intersection_interval};
use twistfree_core::torus::{enumerate_slopes, intersection, twist_matrix, word_matrix};
use twistfree_core::{CurveSystem, Slope, Status, UnimodularMatrix, Verdict, Word};

/// Criteria that fail against the published statements, with the reason.
const KNOWN_RED: &[(u32, &str)] = &[
    (3, "D_b^4 D_a has trace -2 and fixes (1,2), so exponents {1,4} at one intersection are not relatively pseudo-Anosov"),
    (6, "the unit-parameter triple also leaves (1,2) uncovered; the three curves with profile (2,1,1) up to order are exceptional"),
    (9, "weak ping-pong for the (1,4) pair fails: D_a(0,1) = (-1,1) escapes and curves are not absorbed after one syllable"),
];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn s(p: i64, q: i64) -> Slope {
    Slope::new(p, q).unwrap()
}

fn slopes_str(v: &[Slope]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn verified(v: &Verdict) -> bool {
    v.check_witness().unwrap() == Some(true)
}

fn small_pair(a: u32, b: u32) -> bool {
    matches!((a.min(b), a.max(b)), (1, 1..=3))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut nonfree_m1 = BTreeSet::new();
    for m in 0..=4u64 {
        for n1 in 1..=6 {
            for n2 in 1..=6 {
                let v = classify_free_2(m, n1, n2).unwrap();
                let expected_free = m >= 2 || (m == 1 && !small_pair(n1, n2));
                let ok = if expected_free { v.status == Status::Yes } else { v.status == Status::No && verified(&v) };
                if !ok {
                    mismatches.push(format!("({m},{n1},{n2})"));
                }
                if m == 1 && v.status == Status::No {
                    nonfree_m1.insert((n1.min(n2), n1.max(n2)));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches.is_empty() && nonfree_m1.len() == 3 && elapsed < Duration::from_secs(1);
    outcome(
        pass,
        format!("180 cells, mismatches {:?}, non-free multisets at m=1: {:?}, {elapsed:.2?}", mismatches, nonfree_m1),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let pair = standard_pair(1).unwrap();
    let mut ok = true;
    for n in 1..=3 {
        let (lhs, rhs) = nonfree_witness_2(n).unwrap();
        let e = [1, n];
        ok &= word_matrix(&lhs, &pair, &e).unwrap() == word_matrix(&rhs, &pair, &e).unwrap();
        ok &= !(&lhs * &rhs.inverse()).is_empty();
    }
    let ab: Word = "a b".parse().unwrap();
    let neg = UnimodularMatrix::NEG_IDENTITY;
    ok &= word_matrix(&ab.pow(2), &pair, &[1, 2]).unwrap() == neg;
    ok &= word_matrix(&ab.pow(3), &pair, &[1, 1]).unwrap() == neg;
    ok &= word_matrix(&ab.pow(3), &pair, &[1, 3]).unwrap() == UnimodularMatrix::IDENTITY;
    let braid = word_matrix(&"a b a".parse().unwrap(), &pair, &[1, 1]).unwrap();
    ok &= braid.entries() == [0, -1, 1, 0];
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(1), format!("three relations and intermediates, {elapsed:.2?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut bad_witness = Vec::new();
    for m in 1..=3u64 {
        for n1 in 1..=6 {
            for n2 in 1..=6 {
                let v = classify_relpa_2(m, n1, n2).unwrap();
                let listed = matches!((n1.min(n2), n1.max(n2)), (1, 1..=3) | (2, 2));
                let expected_yes = m >= 3 || (m == 2 && (n1, n2) != (1, 1)) || (m == 1 && !listed);
                let got_yes = v.status == Status::Yes;
                if got_yes != expected_yes {
                    mismatches.push(format!("({m},{n1},{n2}) {}", v.status));
                }
                if v.status == Status::No && !verified(&v) {
                    bad_witness.push(format!("({m},{n1},{n2})"));
                }
            }
        }
    }
    // The two named witnesses.
    let m2 = [s(1, 0), s(1, 2)];
    let ba: Word = "b a".parse().unwrap();
    let named_ok = word_matrix(&ba, &m2, &[1, 1]).unwrap().fixed_slope()
        == twistfree_core::FixedSlope::Exactly(s(1, 1))
        && word_matrix(&"b^2 a^2".parse().unwrap(), &standard_pair(1).unwrap(), &[1, 1]).unwrap().trace().abs() == 2;
    let elapsed = start.elapsed();
    let m14 = word_matrix(&"b a".parse().unwrap(), &standard_pair(1).unwrap(), &[1, 4]).unwrap();
    outcome(
        mismatches.is_empty() && bad_witness.is_empty() && named_ok && elapsed < Duration::from_secs(1),
        format!(
            "mismatches {mismatches:?}; invalid witnesses {bad_witness:?}; named witnesses ok: {named_ok}; D_b^4 D_a = {:?} with trace {}",
            m14.rows(),
            m14.trace()
        ),
    )
}

fn sorted(n: [u32; 3]) -> [u32; 3] {
    let mut s = n;
    s.sort_unstable();
    s
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let one = Rational::from_integer(1);
    for a in 1..=12 {
        for b in 1..=12 {
            for c in 1..=12 {
                let n = [a, b, c];
                let sum: Rational = n.iter().map(|&x| ratio(1, x as i128)).sum();
                let free = torus_triple_certificate(a, b, c).unwrap();
                let free_ok = if sum <= one {
                    free.status == Status::Yes
                } else {
                    free.status != Status::Yes && (free.status != Status::No || verified(&free))
                };
                let no_pair = !small_pair(a, b) && !small_pair(a, c) && !small_pair(b, c);
                if !free_ok || (sum > one && no_pair && free.status != Status::Unknown) {
                    problems.push(format!("free {n:?} {}", free.status));
                }
                let relpa = torus_triple_relpa(a, b, c).unwrap();
                let sn = sorted(n);
                let witnessed = matches!(sn, [2, 2, _] | [1, 2, 2] | [2, 3, 6] | [2, 4, 4]);
                let relpa_ok = if sum < one {
                    relpa.status == Status::Yes
                } else if witnessed {
                    relpa.status == Status::No && verified(&relpa)
                } else {
                    // {1,*,*}, {2,3,4}, {2,3,5}, {3,3,3} and the unlisted {2,3,3}.
                    relpa.status == Status::Unknown
                };
                if !relpa_ok {
                    problems.push(format!("relpa {n:?} {}", relpa.status));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        problems.is_empty() && elapsed < Duration::from_secs(5),
        format!("1728 ordered triples, problems {problems:?}, {elapsed:.2?}"),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let triangle = torus_triangle();
    let mut found = Vec::new();
    let mut ok = true;
    for (n, target) in [([2, 4, 4], s(1, 2)), ([2, 3, 6], s(2, 3)), ([2, 2, 5], s(1, 1))] {
        let reducibles = find_reducibles(&triangle, &n, 3, 1).unwrap();
        let hit = reducibles.iter().find_map(|r| rotation_fixing(&r.word, &triangle, &n, target).unwrap());
        match hit {
            Some(w) => found.push(format!("{n:?}: {w} fixes {target}")),
            None => {
                ok = false;
                found.push(format!("{n:?}: nothing fixes {target}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(10), format!("{}; {elapsed:.2?}", found.join("; ")))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let pair = CurveSystem::from_slopes(standard_pair(1).unwrap(), false).unwrap();
    let triple = CurveSystem::from_slopes(torus_triangle(), false).unwrap();
    let skew = PingPongParams::with_mu(3, &[(1, 0, ratio(2, 3)), (2, 0, ratio(1, 3)), (2, 1, ratio(1, 2))]).unwrap();
    let cases = [
        ("pair", exceptional_curves(&pair, &PingPongParams::unit(2), 10).unwrap(), vec![s(1, 1), s(-1, 1)]),
        ("unit triple", exceptional_curves(&triple, &PingPongParams::unit(3), 10).unwrap(), vec![s(-1, 1), s(2, 1)]),
        ("skew triple", exceptional_curves(&triple, &skew, 10).unwrap(), vec![s(2, 3), s(-2, 3), s(4, 3)]),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, got, want) in cases {
        let g: BTreeSet<Slope> = got.iter().copied().collect();
        let w: BTreeSet<Slope> = want.iter().copied().collect();
        let same = g == w;
        ok &= same;
        detail.push(format!(
            "{name}: {} [{}]",
            slopes_str(&got),
            if same { "matches" } else { "published list differs" }
        ));
    }
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(5), format!("{}; {elapsed:.2?}", detail.join("; ")))
}

fn random_params(rng: &mut StdRng, h: usize, finite_lambda: bool) -> PingPongParams {
    let mut entries = Vec::new();
    for i in 0..h {
        for j in i + 1..h {
            entries.push((i, j, ratio(rng.gen_range(1..=12), rng.gen_range(1..=12))));
        }
    }
    let p = PingPongParams::with_mu(h, &entries).unwrap();
    let mut lambdas = vec![None; h * h * h];
    for l in lambdas.iter_mut() {
        if finite_lambda || rng.gen_bool(0.7) {
            *l = Some(int(1) + ratio(rng.gen_range(1..=40), rng.gen_range(1..=8)));
        }
    }
    p.with_lambda(|i, j, k| lambdas[(i * h + j) * h + k]).unwrap()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    let small = enumerate_slopes(12).unwrap();
    let mut twist_checks = 0u64;
    for &a in &small {
        let twists: Vec<_> = (1..=8i64).flat_map(|n| [n, -n]).map(|e| (e, twist_matrix(a, e).unwrap())).collect();
        for &b in &small {
            let ab = intersection(a, b);
            for &x in &small {
                let xa = intersection(x, a);
                let xb = intersection(x, b);
                for (e, m) in &twists {
                    let image = m.apply(x).unwrap();
                    let actual = intersection(image, b) as i128;
                    let (lo, hi) = twist_intersection_interval(xa, ab, xb, e.unsigned_abs());
                    twist_checks += 1;
                    if actual < lo || actual > hi {
                        violations.push(format!("interval a={a} b={b} x={x} n={e}"));
                    }
                    if *e > 0 {
                        let base = *e as i128 * ab as i128 * xa as i128;
                        if actual == base - xb as i128 {
                            let back = intersection(twist_matrix(a, -e).unwrap().apply(x).unwrap(), b) as i128;
                            if back != base + xb as i128 {
                                violations.push(format!("reversal a={a} b={b} x={x} n={e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    let basis = CurveSystem::from_slopes(vec![s(1, 0), s(0, 1)], false).unwrap();
    let mid = enumerate_slopes(20).unwrap();
    for &c1 in &mid {
        for &c2 in &mid {
            if !cauchy_schwarz_holds(c1, c2, &basis, false).unwrap() {
                violations.push(format!("cauchy-schwarz {c1} {c2}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    let triangle = CurveSystem::from_slopes(torus_triangle(), false).unwrap();
    let big = enumerate_slopes(40).unwrap();
    for _ in 0..50 {
        let p = random_params(&mut rng, 3, false);
        for &x in &big {
            let profile = triangle.profile(x).unwrap();
            let hits = (0..3).filter(|&i| region_membership(&profile, i, &triangle, &p).unwrap()).count();
            if hits > 1 {
                violations.push(format!("regions overlap at {x}"));
            }
        }
    }
    for &x in &big {
        let v = triangle.profile(x).unwrap();
        if !(0..3).any(|i| v[i] == v[(i + 1) % 3] + v[(i + 2) % 3]) {
            violations.push(format!("triangle identity at {x}"));
        }
    }
    let elapsed = start.elapsed();
    violations.truncate(5);
    outcome(
        violations.is_empty() && elapsed < Duration::from_secs(60),
        format!("{twist_checks} twist checks, violations {violations:?}, {elapsed:.2?}"),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(8);
    let mut failures = Vec::new();
    for sample in 0..200 {
        let h = rng.gen_range(3..=4);
        let mut inter = vec![vec![0u64; h]; h];
        for i in 0..h {
            for j in i + 1..h {
                let v = rng.gen_range(1..=20);
                inter[i][j] = v;
                inter[j][i] = v;
            }
        }
        let system = CurveSystem::from_intersections(inter, false, true).unwrap();
        let p = random_params(&mut rng, h, true);
        for i in 0..h {
            for mode in [RatioMode::Explicit, RatioMode::Equivalent] {
                let terms: Vec<Rational> = (0..h)
                    .filter(|&j| j != i)
                    .flat_map(|j| region_bound_terms(i, j, &system, &p, mode).unwrap())
                    .map(|t| t.value)
                    .collect();
                let n = int(region_min_exponent(i, &system, &p, mode).unwrap().n as i128);
                let minimal = n == int(1) || terms.iter().any(|t| n - int(1) < *t);
                if !terms.iter().all(|t| n >= *t) || !minimal {
                    failures.push(format!("sample {sample} five-family i={i} {mode:?}"));
                }
            }
            let values: Vec<Rational> =
                (0..h).filter(|&j| j != i).map(|j| norm_growth_bound(i, j, &system, &p).unwrap()).collect();
            let n = int(norm_growth_min_exponent(i, &system, &p).unwrap().n as i128);
            let minimal = n == int(1) || values.iter().any(|v| n - int(1) < *v);
            if !values.iter().all(|v| n >= *v) || !minimal {
                failures.push(format!("sample {sample} norm-growth i={i}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(failures.is_empty(), format!("200 systems, failures {failures:?}, {elapsed:.2?}"))
}

fn criterion_9() -> Outcome {
    let triple = CurveSystem::from_slopes(torus_triangle(), false).unwrap();
    let unit3 = PingPongParams::unit(3);
    let ppl = verify_ppl(&triple, &[3, 3, 3], &unit3, 40, 5).unwrap();
    let growth = verify_ppwtc(&triple, &[3, 3, 3], &unit3, 40, 5).unwrap();
    let part1 = ppl.passed() && growth.norm_losses().count() == 0;

    let pair = CurveSystem::from_slopes(standard_pair(1).unwrap(), false).unwrap();
    let cfg1 = VerifyConfig { height: 20, power_bound: 5, n0: 1 };
    let w14 = verify_wpp(&pair, &[1, 4], &PingPongParams::unit(2), &cfg1).unwrap();
    let cfg3 = VerifyConfig { height: 20, power_bound: 3, n0: 3 };
    let w334 = verify_wpp(&triple, &[3, 3, 4], &unit3, &cfg3).unwrap();
    let first_escape = w14.escapes().next().map(|v| format!("{v:?}")).unwrap_or_default();
    outcome(
        part1 && w14.passed() && w334.passed(),
        format!(
            "ppl (3,3,3): {} with {} norm losses; wpp (1,4) n0=1: {} escapes, {} unabsorbed, first {first_escape}; wpp (3,3,4) n0=3: {}",
            if ppl.passed() { "pass" } else { "fail" },
            growth.norm_losses().count(),
            w14.escapes().count(),
            w14.unabsorbed().count(),
            if w334.passed() { "pass" } else { "fail" },
        ),
    )
}

fn criterion_10() -> Outcome {
    let slopes = vec![s(3, 1), s(1, 3), s(2, 3)];
    let system = CurveSystem::from_slopes(slopes.clone(), false).unwrap();
    let stats = system.stats().unwrap();
    let stats_ok = stats.min == 3 && stats.max == 8 && stats.max_ratio == Some(ratio(8, 21));
    let free_n = uniform_free_power(&system).unwrap().n;
    let relpa_n = uniform_relpa_power(&system).unwrap().n;
    let ppl = verify_ppl(&system, &[3, 3, 3], &PingPongParams::unit(3), 40, 5).unwrap();
    let rel3 = find_relations(&slopes, &[3, 3, 3], 6, 2).unwrap();
    let rel16 = find_relations(&slopes, &[16, 16, 16], 6, 2).unwrap();
    let ok = stats_ok && free_n == 3 && relpa_n == 16 && ppl.passed() && rel3.is_empty() && rel16.is_empty();
    outcome(
        ok,
        format!(
            "stats ({}, {}, {:?}), free exponent {free_n}, relpa exponent {relpa_n}, ppl at 3: {}, relations at 3/16: {}/{}",
            stats.min,
            stats.max,
            stats.max_ratio.map(|r| r.to_string()),
            ppl.passed(),
            rel3.len(),
            rel16.len()
        ),
    )
}

fn cli(args: &[&str]) -> i32 {
    let cli = Cli::try_parse_from(std::iter::once("twistfree").chain(args.iter().copied())).unwrap();
    run(&cli).code
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let mut contradictions = Vec::new();
    let mut runs = 0;
    for m in 0..=4 {
        for n1 in 1..=6 {
            for n2 in 1..=6 {
                for q in ["free", "relpa"] {
                    let (m, n1, n2) = (m.to_string(), n1.to_string(), n2.to_string());
                    runs += 1;
                    if cli(&["classify2", "--m", &m, "--n1", &n1, "--n2", &n2, "--question", q]) == 3 {
                        contradictions.push(format!("classify2 {m} {n1} {n2} {q}"));
                    }
                }
            }
        }
    }
    for a in 1..=12 {
        for b in 1..=12 {
            for c in 1..=12 {
                for q in ["free", "relpa"] {
                    let n = format!("{a},{b},{c}");
                    runs += 1;
                    if cli(&["torus-triple", "--exponents", &n, "--question", q]) == 3 {
                        contradictions.push(format!("torus-triple {n} {q}"));
                    }
                }
            }
        }
    }
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");
    let triangle = format!("{corpus}/torus-triangle.json");
    let spread = format!("{corpus}/spread-triple.json");
    let pair = format!("{corpus}/pair-m1.json");
    let file_runs: Vec<Vec<&str>> = vec![
        vec!["verify", "--input", &triangle, "--exponents", "3,3,3", "--mode", "ppl", "--height", "40"],
        vec![
            "verify",
            "--input",
            &triangle,
            "--exponents",
            "3,3,4",
            "--mode",
            "wpp",
            "--height",
            "20",
            "--n0",
            "3",
            "--power-bound",
            "3",
        ],
        vec!["verify", "--input", &pair, "--exponents", "1,4", "--mode", "wpp", "--height", "20", "--n0", "1"],
        vec!["verify", "--input", &spread, "--exponents", "3,3,3", "--mode", "ppl", "--height", "40"],
        vec!["bounds", "--input", &spread],
        vec!["bounds", "--input", &spread, "--lambda", "auto"],
        vec!["bounds", "--input", &triangle, "--lambda", "triangle"],
    ];
    for args in &file_runs {
        runs += 1;
        if cli(args) == 3 {
            contradictions.push(args.join(" "));
        }
    }
    // Direct oracle cross-check of every grid verdict with the default bounds.
    for a in 1..=8 {
        for b in 1..=8 {
            for c in 1..=8 {
                for v in [torus_triple_certificate(a, b, c).unwrap(), torus_triple_relpa(a, b, c).unwrap()] {
                    if check_verdict(&v, Some(OracleBounds::default_for(v.question))).unwrap().is_contradiction() {
                        contradictions.push(format!("oracle ({a},{b},{c}) {}", v.question));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(contradictions.is_empty(), format!("{runs} CLI runs, contradictions {contradictions:?}, {elapsed:.2?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "two-curve freeness table", criterion_1),
        (2, "relation witnesses", criterion_2),
        (3, "two-curve relatively pseudo-Anosov table", criterion_3),
        (4, "torus triples", criterion_4),
        (5, "oracle finds the reducible triple words", criterion_5),
        (6, "exceptional-curve lists", criterion_6),
        (7, "property sweeps", criterion_7),
        (8, "bound-calculator minimality", criterion_8),
        (9, "bounded ping-pong verification", criterion_9),
        (10, "spread triple example", criterion_10),
        (11, "consistency gate", criterion_11),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        if filter.is_some_and(|x| x != id) {
            continue;
        }
        let o = f();
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        println!("{} criterion {id:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        match (o.pass, known) {
            (false, Some((_, why))) => println!("     known deviation: {why}"),
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {id} passed but is listed as a known deviation")),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
