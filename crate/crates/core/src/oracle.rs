//! Exhaustive shape populations and brute-force cross-checks.
//!
//! Every check maps a population of shapes to a list of failure descriptions. The
//! mapping runs on the rayon pool when the `parallel` feature is on and
//! [`Exec::Parallel`] is selected; results are collected in input order either way, so
//! reports are identical between the two paths.

use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::convex_preorder::ConvexPreorder;
use crate::cuspidal::{
    cuspidal_representatives, gamma_tiling, gamma_tiling_with, is_cuspidal, is_cuspidal_with, is_semicuspidal,
    is_semicuspidal_brute, Method,
};
use crate::dilation::{dilate, undilate};
use crate::error::{Error, Result};
use crate::root_lattice::{bilex_compare, psi_m, Bilex, RootVector};
use crate::skew_shape::{Node, SkewShape};
use crate::tiling::{enumerate_kostant_tilings, TieBreak, HARD_NODE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Apply `f` to every item and keep the `Some` results in input order.
pub fn filter_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().filter_map(f).collect(),
        _ => items.iter().filter_map(f).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>, checked: usize, failures: Vec<String>) -> Self {
        Self { name: name.into(), checked, failures }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(reports: impl IntoIterator<Item = CheckReport>, name: impl Into<String>) -> Self {
        let mut out = Self::new(name, 0, Vec::new());
        for r in reports {
            out.checked += r.checked;
            out.failures.extend(r.failures.into_iter().map(|f| format!("[{}] {f}", r.name)));
        }
        out
    }
}

/// Partitions with at most `rows` parts, each at most `cols`, padded with zeros.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for p in 0..=max {
            cur.push(p);
            go(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// Partitions `μ` with `μ_i ≤ λ_i`.
fn partitions_below(lambda: &[usize]) -> Vec<Vec<usize>> {
    fn go(lambda: &[usize], max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == lambda.len() {
            out.push(cur.clone());
            return;
        }
        for p in 0..=max.min(lambda[i]) {
            cur.push(p);
            go(lambda, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, usize::MAX, &mut Vec::with_capacity(lambda.len()), &mut out);
    out
}

fn box_differences(rows: usize, cols: usize, max_nodes: usize, mut keep: impl FnMut(Vec<Node>)) {
    for lambda in partitions_in_box(rows, cols) {
        for mu in partitions_below(&lambda) {
            let size: usize = lambda.iter().zip(&mu).map(|(l, m)| l - m).sum();
            if size == 0 || size > max_nodes {
                continue;
            }
            let nodes =
                (0..rows).flat_map(|r| (mu[r]..lambda[r]).map(move |c| Node::new(r as i64, c as i64))).collect();
            keep(nodes);
        }
    }
}

/// All nonempty skew shapes with at most `max_nodes` nodes inside the window
/// `[0, rows) × [0, cols)`, in a fixed order.
pub fn window_shapes(e: usize, rows: usize, cols: usize, max_nodes: usize) -> Vec<SkewShape> {
    let mut seen = BTreeSet::new();
    box_differences(rows, cols, max_nodes, |nodes| {
        seen.insert(nodes);
    });
    seen.into_iter().map(|n| SkewShape::new(e, n).expect("box differences are skew")).collect()
}

/// All connected skew shapes with at most `max_nodes` nodes, one per translation class
/// of each residue pattern.
pub fn connected_shapes(e: usize, max_nodes: usize) -> Vec<SkewShape> {
    let mut seen = BTreeSet::new();
    for rows in 1..=max_nodes {
        for cols in 1..=max_nodes + 1 - rows {
            box_differences(rows, cols, max_nodes, |nodes| {
                let s = SkewShape::new(e, nodes).expect("box differences are skew");
                let max_row = s.nodes().iter().map(|u| u.row).max().unwrap();
                let min_col = s.nodes().iter().map(|u| u.col).min().unwrap();
                let max_col = s.nodes().iter().map(|u| u.col).max().unwrap();
                let spans = s.nodes()[0].row == 0 && max_row as usize == rows - 1;
                if spans && min_col == 0 && max_col as usize == cols - 1 && s.is_connected() {
                    seen.insert(s.nodes().to_vec());
                }
            });
        }
    }
    let mut out = Vec::with_capacity(seen.len() * e);
    for nodes in seen {
        let s = SkewShape::new(e, nodes).unwrap();
        for shift in 0..e {
            out.push(s.translate(Node::new(0, shift as i64)));
        }
    }
    out
}

/// Γ is the same under both tie-break policies.
pub fn check_uniqueness(shapes: &[SkewShape], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let failures = filter_map(exec, shapes, |s| {
        let a = gamma_tiling_with(s, pre, TieBreak::SouthwestFirst).ok()?;
        let b = gamma_tiling_with(s, pre, TieBreak::NortheastFirst).ok()?;
        (a.tiles() != b.tiles() || a.partition() != b.partition()).then(|| format!("{s}: tie-breaks disagree"))
    });
    CheckReport::new("gamma uniqueness", shapes.len(), failures)
}

/// κ(Γ) dominates the partition of every Kostant tiling, with equality exactly when each
/// tile is a union of Γ-tiles of its ψ-content. Γ must also appear among the tilings.
pub fn check_maximality(
    shapes: &[SkewShape],
    pre: &ConvexPreorder,
    node_cap: usize,
    exec: Exec,
) -> Result<CheckReport> {
    let cap = node_cap.min(HARD_NODE_CAP);
    if let Some(s) = shapes.iter().find(|s| s.len() > cap) {
        return Err(Error::CapExceeded { nodes: s.len(), cap });
    }
    let failures = filter_map(exec, shapes, |s| {
        let g = gamma_tiling(s, pre).expect("nonempty");
        let all = enumerate_kostant_tilings(s, pre, node_cap).expect("within cap");
        let mut problems = Vec::new();
        if !all.iter().any(|k| k.tiling.tiles() == g.tiles()) {
            problems.push("gamma missing from enumeration".to_string());
        }
        for k in &all {
            let v = bilex_compare(g.partition(), &k.partition, pre).expect("same content");
            let union = k.tiling.tiles().iter().all(|lam| {
                let base = psi_m(&lam.content()).expect("kostant tile").base;
                g.tiles()
                    .iter()
                    .filter(|gt| gt.nodes().iter().any(|u| lam.contains(*u)))
                    .all(|gt| gt.content() == base && gt.nodes().iter().all(|u| lam.contains(*u)))
            });
            let ok = match v.combined {
                Bilex::Equal => union,
                Bilex::GreaterBoth => !union,
                _ => false,
            };
            if !ok {
                problems.push(format!(
                    "{} vs {}: {:?}, union={union}",
                    g.partition().notation_ascii(pre),
                    k.partition.notation_ascii(pre),
                    v.combined
                ));
            }
        }
        (!problems.is_empty()).then(|| format!("{s}: {}", problems.join("; ")))
    });
    Ok(CheckReport::new("bilex maximality", shapes.len(), failures))
}

/// Representatives keyed by content.
fn representative_index(pre: &ConvexPreorder, height_bound: u64) -> BTreeMap<RootVector, Vec<SkewShape>> {
    let mut idx: BTreeMap<RootVector, Vec<SkewShape>> = BTreeMap::new();
    for r in cuspidal_representatives(pre, height_bound) {
        idx.entry(r.root).or_default().push(r.shape);
    }
    idx
}

/// Brute-force cuspidality agrees with the ribbon test and with membership in the
/// representative set up to e-similarity.
pub fn check_classification(shapes: &[SkewShape], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let bound = shapes.iter().map(|s| s.len() as u64).max().unwrap_or(0);
    let reps = representative_index(pre, bound);
    let failures = filter_map(exec, shapes, |s| {
        let brute = is_cuspidal_with(s, pre, Method::BruteForce);
        let fast = is_cuspidal(s, pre);
        let member = reps.get(&s.content()).is_some_and(|v| v.iter().any(|r| r.e_similar(s)));
        (brute != fast || brute != member).then(|| format!("{s}: brute={brute} ribbon={fast} member={member}"))
    });
    CheckReport::new("cuspidal classification", shapes.len(), failures)
}

/// The weak two-split definition of semicuspidality agrees with the Γ-tile criterion.
pub fn check_semicuspidal(shapes: &[SkewShape], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let failures = filter_map(exec, shapes, |s| {
        let brute = is_semicuspidal_brute(s, pre);
        let tiles = is_semicuspidal(s, pre);
        (brute != tiles).then(|| format!("{s}: brute={brute} gamma={tiles}"))
    });
    CheckReport::new("semicuspidal criterion", shapes.len(), failures)
}

/// Γ of the reversed shape under the reversed preorder is the reversed Γ.
pub fn check_reversal(shapes: &[SkewShape], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let rev = pre.reverse();
    let failures = filter_map(exec, shapes, |s| {
        let g = gamma_tiling(s, pre).expect("nonempty");
        let r = gamma_tiling(&s.reverse(), &rev).expect("nonempty");
        let mut flipped: Vec<SkewShape> = g.tiles().iter().map(SkewShape::reverse).collect();
        flipped.sort();
        (flipped != r.tiles()).then(|| format!("{s}: reversed tiling differs"))
    });
    CheckReport::new("reversal duality", shapes.len(), failures)
}

/// `undilate(dilate(t, s)) = (t, s)`.
pub fn check_dilation_round_trip(pairs: &[(usize, SkewShape)], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let failures = filter_map(exec, pairs, |(t, s)| {
        let d = match dilate(*t, s, pre) {
            Ok(d) => d,
            Err(err) => return Some(format!("{s}: dilate({t}) failed: {err}")),
        };
        let back = undilate(&d, pre);
        (back.as_ref() != Some(&(*t % pre.e(), s.clone()))).then(|| format!("{s}: t={t} round trip gave {back:?}"))
    });
    CheckReport::new("dilation round trip", pairs.len(), failures)
}

/// For connected shapes of imaginary content, semicuspidality is equivalent to being a dilation.
pub fn check_dilation_recognition(shapes: &[SkewShape], pre: &ConvexPreorder, exec: Exec) -> CheckReport {
    let failures = filter_map(exec, shapes, |s| {
        let semi = is_semicuspidal(s, pre);
        let brute = is_semicuspidal_brute(s, pre);
        let dil = undilate(s, pre).is_some();
        (semi != dil || brute != dil).then(|| format!("{s}: semicuspidal={semi} brute={brute} undilate={dil}"))
    });
    CheckReport::new("dilation recognition", shapes.len(), failures)
}
