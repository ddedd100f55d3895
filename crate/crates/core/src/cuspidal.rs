//! Cuspidal ribbons, cuspidality tests and the cuspidal Kostant tiling Γ.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::convex_preorder::{CmpResult, ConvexPreorder, Decomposer, Direction, Strictness};
use crate::error::{Error, Result};
use crate::root_lattice::{
    alpha, classify, is_psi, kostant_from_sequence, positive_root_form, psi_m, KostantEntry, KostantPartition,
    RootClass, RootVector,
};
use crate::skew_shape::{Node, ShapeSpec, SkewShape, Step};
use crate::tiling::{minimal_se_removable_with, removable_ribbons, MaskHost, TieBreak, Tiling};

/// Residues `t` at which a cuspidal ribbon of content `β` can start.
pub fn init_residues(beta: &RootVector) -> Result<Vec<usize>> {
    match classify(beta) {
        RootClass::RealRoot => Ok(vec![positive_root_form(beta).unwrap().t]),
        RootClass::ImaginaryRoot(1) => Ok((0..beta.e()).collect()),
        _ => Err(Error::NotInPsi(beta.clone())),
    }
}

/// The ribbon `ζ^(β,b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalRibbon {
    pub shape: SkewShape,
    pub root: RootVector,
    pub base: Node,
}

impl CuspidalRibbon {
    pub fn steps(&self) -> Vec<Step> {
        self.shape.ribbon_path().expect("cuspidal ribbons are ribbons")
    }
}

/// Step pattern of `ζ^(β,b)` for a base of residue `t`.
pub fn cuspidal_steps(beta: &RootVector, t: usize, pre: &ConvexPreorder) -> Result<Vec<Step>> {
    let e = beta.e();
    let h = beta.height();
    (1..h)
        .map(|k| match pre.cmp_roots(&alpha(e, t, k)?, beta) {
            CmpResult::Greater => Ok(Step::N),
            CmpResult::Less => Ok(Step::E),
            CmpResult::Equivalent => Err(Error::Invariant),
        })
        .collect()
}

pub fn cuspidal_ribbon(beta: &RootVector, base: Node, pre: &ConvexPreorder) -> Result<CuspidalRibbon> {
    if beta.e() != pre.e() {
        return Err(Error::MixedE(pre.e(), beta.e()));
    }
    let t = base.residue(beta.e());
    if !init_residues(beta)?.contains(&t) {
        return Err(Error::NotInInit { root: beta.clone(), residue: t });
    }
    let steps = cuspidal_steps(beta, t, pre)?;
    let shape = SkewShape::from_path(beta.e(), base, &steps);
    Ok(CuspidalRibbon { shape, root: beta.clone(), base })
}

/// Which cuspidality test to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Ribbon criterion for ribbons, two-split search otherwise.
    #[default]
    Auto,
    /// Two-split search on every shape.
    BruteForce,
}

pub fn is_cuspidal(s: &SkewShape, pre: &ConvexPreorder) -> bool {
    is_cuspidal_with(s, pre, Method::Auto)
}

pub fn is_cuspidal_with(s: &SkewShape, pre: &ConvexPreorder, method: Method) -> bool {
    let beta = s.content();
    if s.is_empty() || positive_root_form(&beta).is_none() {
        return false;
    }
    if method == Method::Auto && s.is_ribbon() {
        return removable_ribbons(s)
            .expect("nonempty")
            .iter()
            .filter(|r| r.ribbon.len() < s.len())
            .all(|r| pre.gt(&r.ribbon.content(), &beta));
    }
    if s.len() > crate::tiling::MASK_LIMIT {
        // Only ribbons are cuspidal, and this shape is not one.
        return false;
    }
    split_test(s, &beta, &beta, Strictness::Strict, pre)
}

/// Every proper two-part tableau splits into a sum below `beta` then a sum above it.
fn split_test(s: &SkewShape, theta: &RootVector, beta: &RootVector, strict: Strictness, pre: &ConvexPreorder) -> bool {
    let mh = MaskHost::new(s).expect("size checked");
    let h = theta.height();
    let mut below = Decomposer::new(beta, Direction::Below, strict, pre, h);
    let mut above = Decomposer::new(beta, Direction::Above, strict, pre, h);
    let full = mh.full();
    mh.up_sets().filter(|&m| m != 0 && m != full).all(|m| {
        let upper = mh.content(s.e(), m);
        let lower = theta.checked_sub(&upper).unwrap();
        above.decomposes(&upper) && below.decomposes(&lower)
    })
}

/// Semicuspidality through the Γ-tiling: every tile has content `ψ(cont s)`.
pub fn is_semicuspidal(s: &SkewShape, pre: &ConvexPreorder) -> bool {
    let Some(d) = psi_m(&s.content()) else { return false };
    gamma_tiling(s, pre).expect("nonempty").tiles().iter().all(|t| t.content() == d.base)
}

/// Semicuspidality straight from the weak two-split definition.
pub fn is_semicuspidal_brute(s: &SkewShape, pre: &ConvexPreorder) -> bool {
    let theta = s.content();
    let Some(d) = psi_m(&theta) else { return false };
    if s.len() > crate::tiling::MASK_LIMIT {
        return is_semicuspidal(s, pre);
    }
    split_test(s, &theta, &d.base, Strictness::Weak, pre)
}

/// A Kostant tiling together with a tableau order and its partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTiling {
    tiling: Tiling,
    tableau: Vec<usize>,
    partition: KostantPartition,
}

impl GammaTiling {
    fn from_sequence(seq: Vec<SkewShape>, pre: &ConvexPreorder) -> Self {
        let e = pre.e();
        let contents: Vec<RootVector> = seq.iter().map(|t| t.content()).collect();
        let partition = kostant_from_sequence(e, &contents, pre).expect("tile contents weakly decrease");
        let tiling = Tiling::from_trusted(seq.clone());
        let tableau = seq.iter().map(|t| tiling.tiles().iter().position(|x| x == t).unwrap()).collect();
        Self { tiling, tableau, partition }
    }

    /// Tiles in canonical (sorted) order.
    pub fn tiles(&self) -> &[SkewShape] {
        self.tiling.tiles()
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    /// Indices into [`tiles`](Self::tiles) in tableau order.
    pub fn tableau(&self) -> &[usize] {
        &self.tableau
    }

    /// Tiles in tableau order.
    pub fn tableau_tiles(&self) -> impl Iterator<Item = &SkewShape> {
        self.tableau.iter().map(|&i| &self.tiling.tiles()[i])
    }

    pub fn partition(&self) -> &KostantPartition {
        &self.partition
    }

    pub fn len(&self) -> usize {
        self.tableau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableau.is_empty()
    }

    pub fn to_json(&self, pre: &ConvexPreorder) -> GammaJson {
        GammaJson {
            tiles: self.tiles().iter().map(ShapeSpec::from_shape).collect(),
            tableau: self.tableau.clone(),
            kostant: self.partition.sorted(pre),
        }
    }
}

/// Serialized form of a [`GammaTiling`].
#[derive(Debug, Clone, Serialize)]
pub struct GammaJson {
    pub tiles: Vec<ShapeSpec>,
    pub tableau: Vec<usize>,
    pub kostant: Vec<KostantEntry>,
}

/// The cuspidal Kostant tiling, built by repeatedly removing a minimal removable ribbon.
pub fn gamma_tiling(host: &SkewShape, pre: &ConvexPreorder) -> Result<GammaTiling> {
    gamma_tiling_with(host, pre, TieBreak::default())
}

pub fn gamma_tiling_with(host: &SkewShape, pre: &ConvexPreorder, tie: TieBreak) -> Result<GammaTiling> {
    if host.is_empty() {
        return Err(Error::EmptyShape);
    }
    if host.e() != pre.e() {
        return Err(Error::MixedE(pre.e(), host.e()));
    }
    let mut rest = host.clone();
    let mut removed = Vec::new();
    while !rest.is_empty() {
        let xi = minimal_se_removable_with(&rest, pre, tie)?;
        rest = SkewShape::new(host.e(), rest.minus(&xi)).expect("removing an SE-removable ribbon keeps skewness");
        removed.push(xi);
    }
    removed.reverse();
    Ok(GammaTiling::from_sequence(removed, pre))
}

/// Γ with all tiles of equal content merged.
pub fn gamma_sc_tiling(host: &SkewShape, pre: &ConvexPreorder) -> Result<GammaTiling> {
    let g = gamma_tiling(host, pre)?;
    let mut groups: BTreeMap<RootVector, Vec<Node>> = BTreeMap::new();
    for t in g.tiles() {
        groups.entry(t.content()).or_default().extend_from_slice(t.nodes());
    }
    let mut merged: Vec<(RootVector, SkewShape)> = groups
        .into_iter()
        .map(|(c, nodes)| (c, SkewShape::new(host.e(), nodes).expect("merged tiles are skew")))
        .collect();
    merged.sort_by(|a, b| pre.cmp_roots(&b.0, &a.0).to_ordering());
    Ok(GammaTiling::from_sequence(merged.into_iter().map(|(_, s)| s).collect(), pre))
}

/// Normalized `ζ^β` for real `β` up to `height_bound`, and `ζ^t` for every residue.
pub fn cuspidal_representatives(pre: &ConvexPreorder, height_bound: u64) -> Vec<CuspidalRibbon> {
    let e = pre.e();
    let mut out = Vec::new();
    let mut push = |beta: RootVector, t: usize| {
        let z = cuspidal_ribbon(&beta, Node::new(0, t as i64), pre).expect("valid base");
        let shape = z.shape.normalize();
        let base = shape.sw();
        out.push(CuspidalRibbon { shape, root: beta, base });
    };
    for h in 1..=height_bound {
        if h % e as u64 != 0 {
            for t in 0..e {
                push(alpha(e, t, h).unwrap(), t);
            }
        }
    }
    for t in 0..e {
        push(RootVector::delta(e), t);
    }
    out
}

/// Whether every tile of `g` is a ribbon with indivisible content.
pub fn tiles_are_indivisible_ribbons(g: &GammaTiling) -> bool {
    g.tiles().iter().all(|t| t.is_ribbon() && is_psi(&t.content()))
}
