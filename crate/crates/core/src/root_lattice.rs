//! Positive roots of affine type A, the Ψ decomposition and Kostant partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::convex_preorder::ConvexPreorder;
use crate::error::{Error, Result};

/// An element of the positive cone of the root lattice, one coefficient per residue.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: Vec<u32>,
}

impl RootVector {
    pub fn new(coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::BadE(coeffs.len()));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(e: usize) -> Self {
        assert!(e >= 2, "e must be at least 2");
        Self { coeffs: vec![0; e] }
    }

    /// The simple root α_i.
    pub fn simple(e: usize, i: usize) -> Self {
        let mut v = Self::zero(e);
        v.coeffs[i % e] = 1;
        v
    }

    /// The null root δ.
    pub fn delta(e: usize) -> Self {
        assert!(e >= 2, "e must be at least 2");
        Self { coeffs: vec![1; e] }
    }

    pub fn e(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs[i]
    }

    pub fn height(&self) -> u64 {
        self.coeffs.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub(crate) fn bump(&mut self, i: usize) {
        self.coeffs[i] += 1;
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.e() != other.e() {
            return Err(Error::MixedE(self.e(), other.e()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Invariant))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// `self - other`, or `None` when some coefficient would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.e() != other.e() {
            return None;
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.checked_sub(*b)).collect::<Option<_>>()?;
        Some(Self { coeffs })
    }

    pub fn scale(&self, m: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * m).collect() }
    }

    /// Coefficient-wise `self <= other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.e() == other.e() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    fn format(&self, ascii: bool) -> String {
        let (d, a) = if ascii { ("d", "a") } else { ("δ", "α") };
        if self.is_zero() {
            return "0".to_string();
        }
        if let Some(PositiveRootForm { t, h }) = positive_root_form(self) {
            let e = self.e() as u64;
            let q = h / e;
            let r = h % e;
            let mut parts = Vec::new();
            match q {
                0 => {}
                1 => parts.push(d.to_string()),
                _ => parts.push(format!("{q}{d}")),
            }
            for j in 0..r {
                parts.push(format!("{a}{}", (t as u64 + j) % e));
            }
            return parts.join("+");
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| if c == 1 { format!("{a}{i}") } else { format!("{c}{a}{i}") })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Notation using only 7-bit characters (`d` for δ, `a` for α).
    pub fn ascii(&self) -> String {
        self.format(true)
    }
}

impl std::ops::Add for &RootVector {
    type Output = RootVector;

    fn add(self, rhs: &RootVector) -> RootVector {
        self.checked_add(rhs).expect("root vectors with matching e")
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(false))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl Serialize for RootVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<u32>::deserialize(d)?;
        RootVector::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// `alpha(t, h)` as a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PositiveRootForm {
    pub t: usize,
    pub h: u64,
}

/// α(t,h): the sum of `h` cyclically consecutive simple roots starting at residue `t`.
pub fn alpha(e: usize, t: usize, h: u64) -> Result<RootVector> {
    if e < 2 {
        return Err(Error::BadE(e));
    }
    if h == 0 {
        return Err(Error::ZeroHeight);
    }
    let q = (h / e as u64) as u32;
    let r = (h % e as u64) as usize;
    let mut coeffs = vec![q; e];
    for j in 0..r {
        coeffs[(t + j) % e] += 1;
    }
    Ok(RootVector { coeffs })
}

/// The pair `(t, h)` with `alpha(t, h) = v`, if `v` is a positive root. Imaginary roots get `t = 0`.
pub fn positive_root_form(v: &RootVector) -> Option<PositiveRootForm> {
    let e = v.e();
    let h = v.height();
    if h == 0 {
        return None;
    }
    let q = (h / e as u64) as u32;
    let r = (h % e as u64) as usize;
    if r == 0 {
        return v.coeffs.iter().all(|&c| c == q).then_some(PositiveRootForm { t: 0, h });
    }
    if v.coeffs.iter().any(|&c| c != q && c != q + 1) {
        return None;
    }
    // The q+1 entries must form one cyclic run of length r.
    (0..e)
        .find(|&t| v.coeffs[t] == q + 1 && v.coeffs[(t + e - 1) % e] == q)
        .filter(|&t| (0..r).all(|j| v.coeffs[(t + j) % e] == q + 1))
        .map(|t| PositiveRootForm { t, h })
}

pub fn is_root(v: &RootVector) -> bool {
    positive_root_form(v).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    RealRoot,
    ImaginaryRoot(u32),
    NotARoot,
}

pub fn classify(v: &RootVector) -> RootClass {
    match positive_root_form(v) {
        None => RootClass::NotARoot,
        Some(f) if f.h % v.e() as u64 == 0 => RootClass::ImaginaryRoot(v.coeffs[0]),
        Some(_) => RootClass::RealRoot,
    }
}

pub fn is_imaginary(v: &RootVector) -> bool {
    matches!(classify(v), RootClass::ImaginaryRoot(_))
}

/// `v = m * base` with `base` a real root or δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiDecomposition {
    pub m: u32,
    pub base: RootVector,
}

/// The unique decomposition of `v` as a positive multiple of an indivisible root.
pub fn psi_m(v: &RootVector) -> Option<PsiDecomposition> {
    if v.is_zero() {
        return None;
    }
    let first = v.coeffs[0];
    if v.coeffs.iter().all(|&c| c == first) {
        return Some(PsiDecomposition { m: first, base: RootVector::delta(v.e()) });
    }
    let g = v.coeffs.iter().fold(0u32, |g, &c| gcd(g, c));
    (1..=g).filter(|m| g % m == 0).find_map(|m| {
        let base = RootVector { coeffs: v.coeffs.iter().map(|c| c / m).collect() };
        (classify(&base) == RootClass::RealRoot).then_some(PsiDecomposition { m, base })
    })
}

pub fn is_psi(v: &RootVector) -> bool {
    psi_m(v).is_some_and(|d| d.m == 1)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A multiset of indivisible roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantPartition {
    e: usize,
    entries: BTreeMap<RootVector, u32>,
}

/// One `(root, multiplicity)` entry in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantEntry {
    pub root: RootVector,
    pub mult: u32,
}

impl KostantPartition {
    pub fn empty(e: usize) -> Self {
        Self { e, entries: BTreeMap::new() }
    }

    /// Build from `(root, multiplicity)` pairs; every root must be indivisible.
    pub fn from_entries(e: usize, entries: impl IntoIterator<Item = (RootVector, u32)>) -> Result<Self> {
        let mut out = Self::empty(e);
        for (root, mult) in entries {
            if root.e() != e {
                return Err(Error::MixedE(e, root.e()));
            }
            if !is_psi(&root) {
                return Err(Error::NotInPsi(root));
            }
            if mult > 0 {
                *out.entries.entry(root).or_insert(0) += mult;
            }
        }
        Ok(out)
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn mult(&self, root: &RootVector) -> u32 {
        self.entries.get(root).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct roots.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Total number of parts.
    pub fn parts(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn roots(&self) -> impl Iterator<Item = &RootVector> {
        self.entries.keys()
    }

    pub fn total(&self) -> RootVector {
        let mut t = RootVector::zero(self.e);
        for (root, &m) in &self.entries {
            t = &t + &root.scale(m);
        }
        t
    }

    /// Entries in strictly decreasing preorder order.
    pub fn sorted(&self, pre: &ConvexPreorder) -> Vec<KostantEntry> {
        let mut v: Vec<KostantEntry> =
            self.entries.iter().map(|(root, &mult)| KostantEntry { root: root.clone(), mult }).collect();
        v.sort_by(|a, b| pre.cmp_roots(&b.root, &a.root).to_ordering());
        v
    }

    fn notation_with(&self, pre: &ConvexPreorder, ascii: bool) -> String {
        let parts: Vec<String> = self
            .sorted(pre)
            .into_iter()
            .map(|KostantEntry { root, mult }| {
                let r = if ascii { root.ascii() } else { root.to_string() };
                match (mult, ascii) {
                    (1, _) => r,
                    (m, true) => format!("{r}^{m}"),
                    (m, false) => format!("{r}{}", superscript(m)),
                }
            })
            .collect();
        format!("({})", parts.join(" | "))
    }

    /// Notation `(β1^k1 | ... | βr^kr)` with roots in decreasing order.
    pub fn notation(&self, pre: &ConvexPreorder) -> String {
        self.notation_with(pre, false)
    }

    pub fn notation_ascii(&self, pre: &ConvexPreorder) -> String {
        self.notation_with(pre, true)
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Aggregate a Kostant sequence (ψ-values weakly decreasing) into a partition.
pub fn kostant_from_sequence(e: usize, seq: &[RootVector], pre: &ConvexPreorder) -> Result<KostantPartition> {
    let mut out = KostantPartition::empty(e);
    let mut prev: Option<RootVector> = None;
    for (index, v) in seq.iter().enumerate() {
        if v.e() != e {
            return Err(Error::MixedE(e, v.e()));
        }
        let d = psi_m(v).ok_or_else(|| Error::NotInPhiPrime { index, root: v.clone() })?;
        if let Some(p) = &prev {
            if pre.cmp_roots(p, &d.base) == CmpResult::Less {
                return Err(Error::KostantOrder { index });
            }
        }
        *out.entries.entry(d.base.clone()).or_insert(0) += d.m;
        prev = Some(d.base);
    }
    Ok(out)
}

use crate::convex_preorder::CmpResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bilex {
    Equal,
    GreaterBoth,
    LessBoth,
    Incomparable,
}

/// Right-lex, left-lex and combined verdicts of `a` against `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilexVerdict {
    pub right: Ordering,
    pub left: Ordering,
    pub combined: Bilex,
}

/// Compare two partitions of the same content in the bilexicographic order.
pub fn bilex_compare(a: &KostantPartition, b: &KostantPartition, pre: &ConvexPreorder) -> Result<BilexVerdict> {
    if a.e != b.e {
        return Err(Error::MixedE(a.e, b.e));
    }
    let (ta, tb) = (a.total(), b.total());
    if ta != tb {
        return Err(Error::ContentMismatch(ta, tb));
    }
    let mut roots: Vec<&RootVector> = a.entries.keys().chain(b.entries.keys()).collect();
    roots.sort();
    roots.dedup();
    // Ascending in the preorder: smallest first.
    roots.sort_by(|x, y| pre.cmp_roots(x, y).to_ordering());
    let first_diff = |it: &mut dyn Iterator<Item = &&RootVector>| {
        it.map(|r| a.mult(r).cmp(&b.mult(r))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    };
    let right = first_diff(&mut roots.iter());
    let left = first_diff(&mut roots.iter().rev());
    let combined = match (right, left) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Bilex::Equal,
        (Ordering::Greater, Ordering::Greater) => Bilex::GreaterBoth,
        (Ordering::Less, Ordering::Less) => Bilex::LessBoth,
        _ => Bilex::Incomparable,
    };
    Ok(BilexVerdict { right, left, combined })
}
