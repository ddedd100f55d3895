//! Tilings, tableaux, removable ribbons and the exhaustive split/tiling oracles.

use serde::Serialize;

use crate::convex_preorder::{CmpResult, ConvexPreorder};
use crate::error::{Error, Result};
use crate::root_lattice::{is_imaginary, psi_m, KostantPartition, RootVector};
use crate::skew_shape::{Node, ShapeSpec, SkewShape, Step};

/// Largest host accepted by the bitmask-based enumerators.
pub const MASK_LIMIT: usize = 128;

/// A set of pairwise disjoint nonempty skew shapes, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    tiles: Vec<SkewShape>,
}

impl Tiling {
    pub fn new(host: &SkewShape, tiles: Vec<SkewShape>) -> Result<Self> {
        let mut all: Vec<Node> = tiles.iter().flat_map(|t| t.nodes().iter().copied()).collect();
        let total = all.len();
        all.sort();
        all.dedup();
        if all.len() != total || all != host.nodes() || tiles.iter().any(|t| t.is_empty()) {
            return Err(Error::NotSkew);
        }
        Ok(Self::from_trusted(tiles))
    }

    pub(crate) fn from_trusted(mut tiles: Vec<SkewShape>) -> Self {
        tiles.sort();
        Self { tiles }
    }

    pub fn tiles(&self) -> &[SkewShape] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }
}

/// Whether `seq` partitions `host` into skew shapes such that `u ∈ t(i)`, `v ∈ t(j)`, `u ↘ v`
/// imply `i <= j`.
pub fn is_tableau(host: &SkewShape, seq: &[SkewShape]) -> bool {
    if Tiling::new(host, seq.to_vec()).is_err() {
        return false;
    }
    for (i, a) in seq.iter().enumerate() {
        for b in &seq[..i] {
            if a.nodes().iter().any(|&u| b.nodes().iter().any(|&v| u.se_of(v))) {
                return false;
            }
        }
    }
    true
}

/// An SE-removable ribbon `ξ_{u,v}` together with its defining pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovableRibbon {
    pub u: Node,
    pub v: Node,
    pub ribbon: SkewShape,
}

/// Whether `sub ⊆ host` has no node `↘`-below it outside `sub`.
pub fn is_se_removable(host: &SkewShape, sub: &SkewShape) -> bool {
    sub.nodes()
        .iter()
        .all(|&u| (!host.contains(u.s()) || sub.contains(u.s())) && (!host.contains(u.e()) || sub.contains(u.e())))
}

/// All SE-removable ribbons of `host`.
pub fn removable_ribbons(host: &SkewShape) -> Result<Vec<RemovableRibbon>> {
    if host.is_empty() {
        return Err(Error::EmptyShape);
    }
    let comps = host.components();
    let mut out = Vec::new();
    for comp in &comps {
        let starts: Vec<Node> = comp.nodes().iter().copied().filter(|u| !host.contains(u.s())).collect();
        let ends: Vec<Node> = comp.nodes().iter().copied().filter(|v| !host.contains(v.e())).collect();
        for &u in &starts {
            for &v in &ends {
                if !u.ne_of(v) {
                    continue;
                }
                let nodes: Vec<Node> = comp
                    .nodes()
                    .iter()
                    .copied()
                    .filter(|&w| u.ne_of(w) && w.ne_of(v) && !host.contains(w.se()))
                    .collect();
                let ribbon = SkewShape::from_trusted(host.e(), nodes);
                debug_assert!(ribbon.is_ribbon() && is_se_removable(host, &ribbon));
                out.push(RemovableRibbon { u, v, ribbon });
            }
        }
    }
    Ok(out)
}

/// How to choose among several minimal removable ribbons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Least `(SW row, SW col)`, then least NE node.
    #[default]
    SouthwestFirst,
    /// Greatest `(SW row, SW col)`, then greatest NE node.
    NortheastFirst,
}

/// The first `e` nodes of a δ-content SE-removable sub-ribbon of a ribbon of content `mδ`.
pub fn delta_subribbon(ribbon: &SkewShape) -> Result<SkewShape> {
    let e = ribbon.e();
    let steps = ribbon.ribbon_path()?;
    let mut start = 0;
    // Block k covers path positions [k*e, (k+1)*e); the step leaving it is steps[(k+1)*e - 1].
    while start + e < ribbon.len() {
        if steps[start + e - 1] == Step::N {
            break;
        }
        start += e;
    }
    let (sw, _) = ribbon.extremes()?;
    let mut z = sw;
    let mut nodes = Vec::with_capacity(e);
    for (i, s) in std::iter::once(None).chain(steps.iter().map(Some)).enumerate() {
        if let Some(s) = s {
            z = if *s == Step::N { z.n() } else { z.e() };
        }
        if i >= start && i < start + e {
            nodes.push(z);
        }
    }
    Ok(SkewShape::from_trusted(e, nodes))
}

/// A minimal SE-removable ribbon of `host` with indivisible content.
pub fn minimal_se_removable(host: &SkewShape, pre: &ConvexPreorder) -> Result<SkewShape> {
    minimal_se_removable_with(host, pre, TieBreak::default())
}

pub fn minimal_se_removable_with(host: &SkewShape, pre: &ConvexPreorder, tie: TieBreak) -> Result<SkewShape> {
    let rems = removable_ribbons(host)?;
    let contents: Vec<RootVector> = rems.iter().map(|r| r.ribbon.content()).collect();
    let mut best = 0;
    for i in 1..rems.len() {
        if pre.cmp_roots(&contents[i], &contents[best]) == CmpResult::Less {
            best = i;
        }
    }
    let key = |i: usize| {
        let (sw, ne) = rems[i].ribbon.extremes().unwrap();
        (sw, ne)
    };
    let minimal = (0..rems.len()).filter(|&i| pre.cmp_roots(&contents[i], &contents[best]) == CmpResult::Equivalent);
    let chosen = match tie {
        TieBreak::SouthwestFirst => minimal.min_by_key(|&i| key(i)),
        TieBreak::NortheastFirst => minimal.max_by_key(|&i| key(i)),
    }
    .unwrap();
    let ribbon = &rems[chosen].ribbon;
    let c = &contents[chosen];
    if is_imaginary(c) && c.height() > host.e() as u64 {
        delta_subribbon(ribbon)
    } else {
        Ok(ribbon.clone())
    }
}

/// Precomputed successor data for mask-based enumeration over a host.
pub(crate) struct MaskHost {
    pub n: usize,
    pub residues: Vec<usize>,
    /// For each node, the mask of nodes `v ≠ u` with `u ↘ v`.
    pub below: Vec<u128>,
    /// For each node, its immediate S/E successors inside the host.
    pub succ: Vec<u128>,
    order: Vec<usize>,
}

impl MaskHost {
    pub fn new(host: &SkewShape) -> Result<Self> {
        let n = host.len();
        if n > MASK_LIMIT {
            return Err(Error::CapExceeded { nodes: n, cap: MASK_LIMIT });
        }
        let nodes = host.nodes();
        let mut below = vec![0u128; n];
        let mut succ = vec![0u128; n];
        for (i, &u) in nodes.iter().enumerate() {
            for (j, &v) in nodes.iter().enumerate() {
                if i != j && u.se_of(v) {
                    below[i] |= 1 << j;
                }
            }
            for v in [u.s(), u.e()] {
                if let Some(j) = host.index_of(v) {
                    succ[i] |= 1 << j;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(nodes[i].row + nodes[i].col));
        Ok(Self { n, residues: nodes.iter().map(|u| u.residue(host.e())).collect(), below, succ, order })
    }

    pub fn full(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    pub fn content(&self, e: usize, mask: u128) -> RootVector {
        let mut v = RootVector::zero(e);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            v.bump(self.residues[i]);
            m &= m - 1;
        }
        v
    }

    /// Whether the nodes in `mask` form a skew shape. A successor `s` of a mask node is
    /// forced into the mask as soon as some mask node lies `↘`-below `s`.
    pub fn is_skew(&self, mask: u128) -> bool {
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut succ = self.succ[i] & !mask;
            while succ != 0 {
                let s = succ.trailing_zeros() as usize;
                succ &= succ - 1;
                if self.below[s] & mask != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Every up-set of `↘` in the host, as masks.
    pub fn up_sets(&self) -> UpSets<'_> {
        UpSets { host: self, stack: vec![(0, 0)] }
    }
}

/// Depth-first enumeration of up-sets. Nodes are decided in decreasing `row + col` so that
/// successors are settled first.
pub(crate) struct UpSets<'a> {
    host: &'a MaskHost,
    stack: Vec<(usize, u128)>,
}

impl Iterator for UpSets<'_> {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        while let Some((k, mask)) = self.stack.pop() {
            if k == self.host.n {
                return Some(mask);
            }
            let i = self.host.order[k];
            self.stack.push((k + 1, mask));
            if self.host.succ[i] & !mask == 0 {
                self.stack.push((k + 1, mask | 1 << i));
            }
        }
        None
    }
}

/// Proper two-part tableaux `(λ1, λ2)` of a host.
pub struct TwoSplits {
    host: SkewShape,
    masks: std::vec::IntoIter<u128>,
}

impl Iterator for TwoSplits {
    type Item = (SkewShape, SkewShape);

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.masks.next()?;
        let full = if self.host.len() == 128 { u128::MAX } else { (1u128 << self.host.len()) - 1 };
        Some((self.host.sub_shape(full & !m), self.host.sub_shape(m)))
    }
}

/// All proper two-part tableaux, as `λ2` ranging over the nonempty proper up-sets of `↘`.
pub fn enumerate_two_splits(host: &SkewShape) -> Result<TwoSplits> {
    let mh = MaskHost::new(host)?;
    let full = mh.full();
    let masks: Vec<u128> = mh.up_sets().filter(|&m| m != 0 && m != full).collect();
    Ok(TwoSplits { host: host.clone(), masks: masks.into_iter() })
}

/// A Kostant tiling with one compatible tableau ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantTiling {
    pub tiling: Tiling,
    /// Indices into `tiling.tiles()` in tableau order.
    pub tableau: Vec<usize>,
    pub partition: KostantPartition,
}

pub const DEFAULT_NODE_CAP: usize = 10;
pub const HARD_NODE_CAP: usize = 20;

/// Every tiling of `host` by skew shapes with contents in `Φ′+` that admits a Kostant tableau.
pub fn enumerate_kostant_tilings(
    host: &SkewShape,
    pre: &ConvexPreorder,
    node_cap: usize,
) -> Result<Vec<KostantTiling>> {
    let cap = node_cap.min(HARD_NODE_CAP);
    if host.len() > cap {
        return Err(Error::CapExceeded { nodes: host.len(), cap });
    }
    if host.is_empty() {
        return Ok(Vec::new());
    }
    let e = host.e();
    let mh = MaskHost::new(host)?;
    let size = 1usize << mh.n;
    // psi[mask] = Some((base, m)) when the mask is a skew shape with content in Φ′+.
    let mut psi: Vec<Option<(RootVector, u32)>> = vec![None; size];
    for (mask, slot) in psi.iter_mut().enumerate().skip(1) {
        let mask = mask as u128;
        if let Some(d) = psi_m(&mh.content(e, mask)) {
            if mh.is_skew(mask) {
                *slot = Some((d.base, d.m));
            }
        }
    }
    let mut out = Vec::new();
    let mut tiles = Vec::new();
    search(&psi, mh.full(), &mut tiles, &mut |tiles: &[u128]| {
        if let Some(order) = kostant_order(&mh, &psi, tiles, pre) {
            out.push(build_tiling(host, &psi, tiles, &order));
        }
    });
    Ok(out)
}

fn search(psi: &[Option<(RootVector, u32)>], remaining: u128, tiles: &mut Vec<u128>, emit: &mut dyn FnMut(&[u128])) {
    if remaining == 0 {
        emit(tiles);
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    let rest = remaining & !low;
    // Walk all submasks of `rest`, each joined with the lowest remaining node.
    let mut sub = rest;
    loop {
        let tile = sub | low;
        if psi[tile as usize].is_some() {
            tiles.push(tile);
            search(psi, remaining & !tile, tiles, emit);
            tiles.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
}

/// A tableau order with weakly decreasing ψ-contents, found by topological sort.
fn kostant_order(
    mh: &MaskHost,
    psi: &[Option<(RootVector, u32)>],
    tiles: &[u128],
    pre: &ConvexPreorder,
) -> Option<Vec<usize>> {
    let k = tiles.len();
    let reach: Vec<u128> =
        tiles.iter().map(|&t| (0..mh.n).filter(|&i| t >> i & 1 == 1).fold(0u128, |m, i| m | mh.below[i])).collect();
    let base = |i: usize| &psi[tiles[i] as usize].as_ref().unwrap().0;
    let mut indeg = vec![0usize; k];
    let mut edges = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            if a != b && (reach[a] & tiles[b] != 0 || pre.gt(base(a), base(b))) {
                edges[a].push(b);
                indeg[b] += 1;
            }
        }
    }
    let mut ready: Vec<usize> = (0..k).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(a) = ready.pop() {
        order.push(a);
        for &b in &edges[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.push(b);
            }
        }
    }
    (order.len() == k).then_some(order)
}

fn build_tiling(host: &SkewShape, psi: &[Option<(RootVector, u32)>], tiles: &[u128], order: &[usize]) -> KostantTiling {
    let shapes: Vec<SkewShape> = tiles.iter().map(|&t| host.sub_shape(t)).collect();
    let tiling = Tiling::from_trusted(shapes.clone());
    let tableau = order.iter().map(|&i| tiling.tiles().iter().position(|t| *t == shapes[i]).unwrap()).collect();
    let partition = KostantPartition::from_entries(host.e(), tiles.iter().map(|&t| psi[t as usize].clone().unwrap()))
        .expect("indivisible bases");
    KostantTiling { tiling, tableau, partition }
}

/// Serialized tiling: shapes plus a tableau ordering.
#[derive(Debug, Clone, Serialize)]
pub struct TilingJson {
    pub tiles: Vec<ShapeSpec>,
    pub tableau: Vec<usize>,
}

impl KostantTiling {
    pub fn to_json(&self) -> TilingJson {
        TilingJson {
            tiles: self.tiling.tiles().iter().map(ShapeSpec::from_shape).collect(),
            tableau: self.tableau.clone(),
        }
    }
}
