//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use cuspidal::convex_preorder::verify_axioms;
use cuspidal::cuspidal::cuspidal_ribbon;
use cuspidal::dilation::{dilate, undilate};
use cuspidal::oracle::{self, CheckReport, Exec};
use cuspidal::skew_shape::{steps_to_string, Step};
use cuspidal::tiling::DEFAULT_NODE_CAP;
use cuspidal::{gamma_tiling, is_semicuspidal, ConvexPreorder, Node, RootVector, SkewShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }

    fn from_reports(reports: &[CheckReport]) -> Self {
        let checked: usize = reports.iter().map(|r| r.checked).sum();
        let failures: Vec<&String> = reports.iter().flat_map(|r| &r.failures).collect();
        let mut detail = format!("{checked} cases, {} failures", failures.len());
        for f in failures.iter().take(3) {
            detail.push_str(&format!("\n      {f}"));
        }
        Self { pass: failures.is_empty(), detail }
    }
}

/// Both presets paired with their reverses.
fn orientations() -> Vec<(String, ConvexPreorder)> {
    let mut out = Vec::new();
    for (name, pre) in [("e2-standard", ConvexPreorder::e2_standard()), ("bigex", ConvexPreorder::bigex())] {
        out.push((format!("{name} rev"), pre.reverse()));
        out.push((name.to_string(), pre));
    }
    out
}

fn young_partitions() -> Outcome {
    let pre = ConvexPreorder::bigex();
    let mut bad = Vec::new();
    for (charge, want) in YOUNG_KAPPA.iter().enumerate() {
        let start = Instant::now();
        let s = SkewShape::from_skew_partition(3, &YOUNG_LAMBDA, &[], charge as i64).unwrap();
        let got = gamma_tiling(&s, &pre).unwrap().partition().notation(&pre);
        let took = start.elapsed();
        if got != *want || took >= Duration::from_secs(1) {
            bad.push(format!("charge {charge}: {got} in {took:?}"));
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { "3 charges match".into() } else { bad.join("; ") })
}

fn e2_partition() -> Outcome {
    let pre = ConvexPreorder::e2_standard();
    let s = SkewShape::from_skew_partition(2, &E2_LAMBDA, &E2_MU, 0).unwrap();
    let got = gamma_tiling(&s, &pre).unwrap().partition().notation(&pre);
    Outcome::check(got == E2_KAPPA, got)
}

fn figure_ribbons() -> Outcome {
    let mut bad = Vec::new();
    for &(fig, e, beta, t, want) in RIBBONS {
        let beta = rv(beta);
        let z = cuspidal_ribbon(&beta, Node::new(0, t), &preset(e)).unwrap();
        let got = steps_to_string(&z.steps());
        let steps: Vec<Step> = want.chars().map(|c| if c == 'N' { Step::N } else { Step::E }).collect();
        let drawn = SkewShape::from_path(e, Node::new(0, t), &steps);
        let residues_ok = z.shape.content() == beta && z.shape == drawn;
        if got != want || !residues_ok {
            bad.push(format!("figure {fig} {beta}: {got}"));
        }
    }
    Outcome::check(bad.is_empty(), format!("{} ribbons, {} mismatches {}", RIBBONS.len(), bad.len(), bad.join("; ")))
}

fn uniqueness() -> Outcome {
    let start = Instant::now();
    let reports: Vec<CheckReport> = orientations()
        .into_iter()
        .map(|(name, pre)| {
            let shapes = oracle::window_shapes(pre.e(), 5, 5, 12);
            let mut r = oracle::check_uniqueness(&shapes, &pre, Exec::default());
            r.name = name;
            r
        })
        .collect();
    let took = start.elapsed();
    let mut out = Outcome::from_reports(&reports);
    out.pass &= took <= Duration::from_secs(120);
    out
}

fn maximality() -> Outcome {
    let reports: Vec<CheckReport> = orientations()
        .into_iter()
        .map(|(name, pre)| {
            let cap = if pre.e() == 2 { 7 } else { 8 };
            let shapes = oracle::window_shapes(pre.e(), 5, 5, cap);
            let mut r = oracle::check_maximality(&shapes, &pre, DEFAULT_NODE_CAP, Exec::default()).unwrap();
            r.name = name;
            r
        })
        .collect();
    Outcome::from_reports(&reports)
}

fn classification() -> Outcome {
    let mut reports = Vec::new();
    for (pre, n) in [(ConvexPreorder::bigex(), 9), (ConvexPreorder::e2_standard(), 6)] {
        let shapes = oracle::connected_shapes(pre.e(), n);
        reports.push(oracle::check_classification(&shapes, &pre, Exec::default()));
        reports.push(oracle::check_semicuspidal(&shapes, &pre, Exec::default()));
    }
    Outcome::from_reports(&reports)
}

fn dilation() -> Outcome {
    let mut reports = Vec::new();
    for (seed, pre) in [(7u64, ConvexPreorder::e2_standard()), (11, ConvexPreorder::bigex())] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(usize, SkewShape)> =
            (0..500).map(|_| (rng.gen_range(0..pre.e()), random_shape(&mut rng, pre.e(), 8))).collect();
        reports.push(oracle::check_dilation_round_trip(&pairs, &pre, Exec::default()));
    }
    let (e2, big) = (ConvexPreorder::e2_standard(), ConvexPreorder::bigex());
    for (pre, m) in [(&e2, 2), (&e2, 3), (&big, 2), (&big, 3)] {
        let e = pre.e();
        let target = RootVector::delta(e).scale(m);
        let shapes: Vec<SkewShape> =
            oracle::connected_shapes(e, m as usize * e).into_iter().filter(|s| s.content() == target).collect();
        reports.push(oracle::check_dilation_recognition(&shapes, pre, Exec::default()));
    }
    Outcome::from_reports(&reports)
}

fn reversal() -> Outcome {
    let reports: Vec<CheckReport> = orientations()
        .into_iter()
        .enumerate()
        .map(|(i, (name, pre))| {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
            let shapes: Vec<SkewShape> = (0..200).map(|_| random_shape(&mut rng, pre.e(), 10)).collect();
            let mut r = oracle::check_reversal(&shapes, &pre, Exec::default());
            r.name = name;
            r
        })
        .collect();
    Outcome::from_reports(&reports)
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut pass = true;
    for (name, pre) in [("bigex", ConvexPreorder::bigex()), ("e2-standard", ConvexPreorder::e2_standard())] {
        let r = verify_axioms(&pre, 12);
        pass &= r.is_ok();
        detail.push(format!("{name}: {} roots, {} violations", r.roots_checked, r.violations.len()));
    }
    let took = start.elapsed();
    Outcome::check(pass && took < Duration::from_secs(10), detail.join("; "))
}

fn figure4() -> Outcome {
    let pre = ConvexPreorder::bigex();
    let core = SkewShape::from_skew_partition(3, &[4, 3, 2], &[], 0).unwrap();
    let d = match dilate(2, &core, &pre) {
        Ok(d) => d,
        Err(err) => return Outcome::check(false, format!("dilate failed: {err}")),
    };
    let zeta = cuspidal_ribbon(&RootVector::delta(3), Node::new(0, 2), &pre).unwrap().shape;
    let g = gamma_tiling(&d, &pre).unwrap();
    let checks = [
        ("27 nodes", d.len() == 27),
        ("connected", d.is_connected()),
        ("content 9δ", d.content() == RootVector::delta(3).scale(9)),
        ("semicuspidal", is_semicuspidal(&d, &pre)),
        ("9 tiles", g.len() == 9),
        ("tiles are ζ^{δ,2}", g.tiles().iter().all(|t| t.e_similar(&zeta))),
        ("matches drawing", d.e_similar(&figure4_drawn())),
        ("undilates", undilate(&d, &pre) == Some((2, core))),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome::check(bad.is_empty(), if bad.is_empty() { "all properties hold".into() } else { bad.join(", ") })
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("golden Young diagram partitions", young_partitions),
        ("golden e=2 skew partition", e2_partition),
        ("figure ribbons", figure_ribbons),
        ("gamma uniqueness under tie-breaks", uniqueness),
        ("bilex maximality", maximality),
        ("classification oracle", classification),
        ("dilation round trip and recognition", dilation),
        ("reversal duality", reversal),
        ("preorder axioms", axioms),
        ("dilated Young diagram end to end", figure4),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed().as_secs_f64();
        failed += usize::from(!out.pass);
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name} ({took:.2}s): {}", i + 1, out.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
