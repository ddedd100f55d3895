//! Convex preorders on the positive roots.
//!
//! A functional preorder is given by an integer pair `h_i` per simple root and compares
//! `h(β)/ht(β)` lexicographically. Comparisons cross-multiply in `i128`, so no division
//! or floating point is involved.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_lattice::{alpha, is_imaginary, is_root, RootVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpResult {
    Greater,
    Less,
    Equivalent,
}

impl CmpResult {
    pub fn to_ordering(self) -> Ordering {
        match self {
            CmpResult::Greater => Ordering::Greater,
            CmpResult::Less => Ordering::Less,
            CmpResult::Equivalent => Ordering::Equal,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => CmpResult::Greater,
            Ordering::Less => CmpResult::Less,
            Ordering::Equal => CmpResult::Equivalent,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            CmpResult::Greater => CmpResult::Less,
            CmpResult::Less => CmpResult::Greater,
            CmpResult::Equivalent => CmpResult::Equivalent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Functional(Vec<(i64, i64)>),
    Reversed(Box<ConvexPreorder>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPreorder {
    e: usize,
    kind: Kind,
}

impl ConvexPreorder {
    pub fn build_functional(e: usize, h: Vec<(i64, i64)>) -> Result<Self> {
        if e < 2 {
            return Err(Error::BadE(e));
        }
        if h.len() != e {
            return Err(Error::MixedE(e, h.len()));
        }
        Ok(Self { e, kind: Kind::Functional(h) })
    }

    /// e = 3 with h = (2,1), (-1,0), (-1,-1).
    pub fn bigex() -> Self {
        Self::build_functional(3, vec![(2, 1), (-1, 0), (-1, -1)]).unwrap()
    }

    /// e = 2 with α1 at the top and α0 at the bottom.
    pub fn e2_standard() -> Self {
        Self::build_functional(2, vec![(-1, 0), (1, 0)]).unwrap()
    }

    pub fn reverse(&self) -> Self {
        match &self.kind {
            Kind::Reversed(inner) => (**inner).clone(),
            Kind::Functional(_) => Self { e: self.e, kind: Kind::Reversed(Box::new(self.clone())) },
        }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Compare two positive roots.
    pub fn compare(&self, beta: &RootVector, gamma: &RootVector) -> Result<CmpResult> {
        for v in [beta, gamma] {
            if v.e() != self.e {
                return Err(Error::MixedE(self.e, v.e()));
            }
            if !is_root(v) {
                return Err(Error::NotARoot(v.clone()));
            }
        }
        Ok(self.cmp_roots(beta, gamma))
    }

    /// Compare without checking that the arguments are roots.
    pub fn cmp_roots(&self, beta: &RootVector, gamma: &RootVector) -> CmpResult {
        match &self.kind {
            Kind::Reversed(inner) => inner.cmp_roots(gamma, beta),
            Kind::Functional(h) => {
                let hb = apply(h, beta);
                let hg = apply(h, gamma);
                let tb = beta.height() as i128;
                let tg = gamma.height() as i128;
                let mul = |a: i128, b: i128| a.checked_mul(b).expect("preorder comparison overflow");
                let l = (mul(hb.0, tg), mul(hb.1, tg));
                let r = (mul(hg.0, tb), mul(hg.1, tb));
                CmpResult::from_ordering(l.cmp(&r))
            }
        }
    }

    pub fn gt(&self, a: &RootVector, b: &RootVector) -> bool {
        self.cmp_roots(a, b) == CmpResult::Greater
    }

    pub fn ge(&self, a: &RootVector, b: &RootVector) -> bool {
        self.cmp_roots(a, b) != CmpResult::Less
    }
}

fn apply(h: &[(i64, i64)], v: &RootVector) -> (i128, i128) {
    v.coeffs()
        .iter()
        .zip(h)
        .fold((0i128, 0i128), |(a, b), (&c, &(x, y))| (a + c as i128 * x as i128, b + c as i128 * y as i128))
}

/// Serialized preorder description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PreorderSpec {
    Reverse { reverse: Box<PreorderSpec> },
    Preset { e: usize, preset: String },
    Functional { e: usize, h: Vec<(i64, i64)> },
}

impl PreorderSpec {
    pub fn build(&self) -> Result<ConvexPreorder> {
        match self {
            PreorderSpec::Reverse { reverse } => Ok(reverse.build()?.reverse()),
            PreorderSpec::Functional { e, h } => ConvexPreorder::build_functional(*e, h.clone()),
            PreorderSpec::Preset { e, preset } => {
                let pre = preset_by_name(preset)?;
                if pre.e() != *e {
                    return Err(Error::MixedE(*e, pre.e()));
                }
                Ok(pre)
            }
        }
    }
}

pub fn preset_by_name(name: &str) -> Result<ConvexPreorder> {
    match name {
        "bigex" => Ok(ConvexPreorder::bigex()),
        "e2-standard" => Ok(ConvexPreorder::e2_standard()),
        other => Err(Error::Parse(format!("unknown preset {other:?}"))),
    }
}

/// All positive roots of height at most `bound`, each imaginary root once.
pub fn positive_roots(e: usize, bound: u64) -> Vec<RootVector> {
    let mut out = Vec::new();
    for h in 1..=bound {
        if h % e as u64 == 0 {
            out.push(alpha(e, 0, h).unwrap());
        } else {
            out.extend((0..e).map(|t| alpha(e, t, h).unwrap()));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Reflexivity(RootVector),
    Totality(RootVector, RootVector),
    Transitivity(RootVector, RootVector, RootVector),
    Convexity(RootVector, RootVector),
    ImaginaryEquivalency(RootVector, RootVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub height_bound: u64,
    pub roots_checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the convex preorder axioms on all positive roots up to `height_bound`.
pub fn verify_axioms(pre: &ConvexPreorder, height_bound: u64) -> AxiomReport {
    let roots = positive_roots(pre.e(), height_bound);
    let n = roots.len();
    let mut table = vec![CmpResult::Equivalent; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = pre.cmp_roots(&roots[i], &roots[j]);
        }
    }
    let c = |i: usize, j: usize| table[i * n + j];
    let mut violations = Vec::new();
    for i in 0..n {
        if c(i, i) != CmpResult::Equivalent {
            violations.push(Violation::Reflexivity(roots[i].clone()));
        }
        for j in 0..n {
            if c(i, j) != c(j, i).flip() {
                violations.push(Violation::Totality(roots[i].clone(), roots[j].clone()));
            }
            let both_imag = is_imaginary(&roots[i]) && is_imaginary(&roots[j]);
            if (c(i, j) == CmpResult::Equivalent) != (i == j || both_imag) {
                violations.push(Violation::ImaginaryEquivalency(roots[i].clone(), roots[j].clone()));
            }
            if c(i, j) != CmpResult::Less {
                let sum = &roots[i] + &roots[j];
                if is_root(&sum) && !(pre.ge(&roots[i], &sum) && pre.ge(&sum, &roots[j])) {
                    violations.push(Violation::Convexity(roots[i].clone(), roots[j].clone()));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if c(i, j) == CmpResult::Less {
                continue;
            }
            for k in 0..n {
                if c(j, k) != CmpResult::Less && c(i, k) == CmpResult::Less {
                    violations.push(Violation::Transitivity(roots[i].clone(), roots[j].clone(), roots[k].clone()));
                }
            }
        }
    }
    AxiomReport { height_bound, roots_checked: n, violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Below,
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strictness {
    Strict,
    Weak,
}

/// Decides whether vectors are sums of roots on one side of a fixed root `β`.
///
/// Keeps its memo between queries, so reuse one instance for many vectors with the same `β`.
pub struct Decomposer {
    candidates: Vec<RootVector>,
    memo: HashMap<RootVector, bool>,
}

impl Decomposer {
    pub fn new(
        beta: &RootVector,
        direction: Direction,
        strictness: Strictness,
        pre: &ConvexPreorder,
        height_bound: u64,
    ) -> Self {
        let mut candidates: Vec<RootVector> = positive_roots(pre.e(), height_bound)
            .into_iter()
            .filter(|g| {
                let c = match direction {
                    Direction::Below => pre.cmp_roots(beta, g),
                    Direction::Above => pre.cmp_roots(g, beta),
                };
                match strictness {
                    Strictness::Strict => c == CmpResult::Greater,
                    Strictness::Weak => c != CmpResult::Less,
                }
            })
            .collect();
        candidates.sort_by_key(|g| std::cmp::Reverse(g.height()));
        Self { candidates, memo: HashMap::new() }
    }

    pub fn decomposes(&mut self, theta: &RootVector) -> bool {
        if theta.is_zero() {
            return true;
        }
        if let Some(&b) = self.memo.get(theta) {
            return b;
        }
        // Some summand must cover the first residue present in θ.
        let pivot = theta.coeffs().iter().position(|&c| c > 0).unwrap();
        let mut found = false;
        for idx in 0..self.candidates.len() {
            let g = &self.candidates[idx];
            if g.coeff(pivot) == 0 || g.height() > theta.height() {
                continue;
            }
            if let Some(rest) = theta.checked_sub(g) {
                if self.decomposes(&rest) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(theta.clone(), found);
        found
    }
}

/// Whether `θ` is a sum of positive roots each below (or above) `β`.
pub fn decomposes(
    theta: &RootVector,
    beta: &RootVector,
    direction: Direction,
    strictness: Strictness,
    pre: &ConvexPreorder,
) -> bool {
    if theta.is_zero() {
        return false;
    }
    Decomposer::new(beta, direction, strictness, pre, theta.height()).decomposes(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: &[u32]) -> RootVector {
        RootVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn bigex_comparisons() {
        let p = ConvexPreorder::bigex();
        assert_eq!(p.compare(&rv(&[1, 0, 0]), &rv(&[1, 1, 0])).unwrap(), CmpResult::Greater);
        assert_eq!(p.compare(&rv(&[0, 0, 1]), &rv(&[1, 1, 1])).unwrap(), CmpResult::Less);
        assert_eq!(p.compare(&rv(&[3, 2, 2]), &rv(&[2, 2, 1])).unwrap(), CmpResult::Greater);
        assert_eq!(p.compare(&rv(&[1, 1, 1]), &rv(&[2, 2, 2])).unwrap(), CmpResult::Equivalent);
        assert!(matches!(p.compare(&rv(&[2, 1, 0]), &rv(&[1, 0, 0])), Err(Error::NotARoot(_))));
        // Listed chain: α0 ≻ α0+α1 ≻ δ+α0.
        assert!(p.gt(&rv(&[1, 1, 0]), &rv(&[2, 1, 1])));
    }

    #[test]
    fn e2_comparisons() {
        let p = ConvexPreorder::e2_standard();
        assert_eq!(p.compare(&rv(&[0, 1]), &rv(&[2, 1])).unwrap(), CmpResult::Greater);
        assert_eq!(p.reverse().compare(&rv(&[1, 0]), &rv(&[0, 1])).unwrap(), CmpResult::Greater);
        assert_eq!(p.reverse().reverse(), p);
        let chain = [rv(&[0, 1]), rv(&[1, 2]), rv(&[2, 3]), rv(&[1, 1]), rv(&[3, 2]), rv(&[2, 1]), rv(&[1, 0])];
        for w in chain.windows(2) {
            assert_eq!(p.cmp_roots(&w[0], &w[1]), CmpResult::Greater);
        }
    }

    #[test]
    fn reversed_bigex() {
        let p = ConvexPreorder::bigex().reverse();
        assert_eq!(p.compare(&rv(&[0, 0, 1]), &rv(&[0, 1, 1])).unwrap(), CmpResult::Greater);
    }

    #[test]
    fn presets_satisfy_axioms() {
        for p in [ConvexPreorder::bigex(), ConvexPreorder::e2_standard()] {
            let r = verify_axioms(&p, 12);
            assert!(r.is_ok(), "{:?}", r.violations.first());
            assert!(verify_axioms(&p.reverse(), 12).is_ok());
        }
    }

    #[test]
    fn degenerate_h_violates_imaginary_equivalency() {
        let p = ConvexPreorder::build_functional(2, vec![(1, 0), (1, 0)]).unwrap();
        let r = verify_axioms(&p, 6);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ImaginaryEquivalency(a, b) if *a == rv(&[1, 0]) && *b == rv(&[0, 1]))));
    }

    #[test]
    fn decomposition_examples() {
        let p = ConvexPreorder::e2_standard();
        let a1 = rv(&[0, 1]);
        assert!(decomposes(&RootVector::delta(2), &a1, Direction::Below, Strictness::Strict, &p));
        // α0+2α1 is itself the root δ+α1, which lies below α1.
        assert!(decomposes(&rv(&[1, 2]), &a1, Direction::Below, Strictness::Strict, &p));
        assert!(!decomposes(&rv(&[0, 2]), &a1, Direction::Below, Strictness::Strict, &p));
        for b in positive_roots(2, 6) {
            assert!(decomposes(&b, &b, Direction::Above, Strictness::Weak, &p));
        }
    }

    #[test]
    fn preorder_spec_json() {
        let s: PreorderSpec = serde_json::from_str(r#"{"e":3,"preset":"bigex"}"#).unwrap();
        assert_eq!(s.build().unwrap(), ConvexPreorder::bigex());
        let s: PreorderSpec = serde_json::from_str(r#"{"e":3,"h":[[2,1],[-1,0],[-1,-1]]}"#).unwrap();
        assert_eq!(s.build().unwrap(), ConvexPreorder::bigex());
        let s: PreorderSpec = serde_json::from_str(r#"{"reverse":{"e":2,"preset":"e2-standard"}}"#).unwrap();
        assert_eq!(s.build().unwrap(), ConvexPreorder::e2_standard().reverse());
        let s: PreorderSpec = serde_json::from_str(r#"{"e":2,"preset":"bigex"}"#).unwrap();
        assert!(s.build().is_err());
    }
}
