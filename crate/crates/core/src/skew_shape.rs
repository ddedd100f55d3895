//! Nodes, skew shapes and their structural predicates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_lattice::RootVector;

/// A lattice point. Rows grow southward, columns eastward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: i64,
    pub col: i64,
}

impl Node {
    pub const fn new(row: i64, col: i64) -> Self {
        Self { row, col }
    }

    pub fn diag(self) -> i64 {
        self.col - self.row
    }

    pub fn residue(self, e: usize) -> usize {
        self.diag().rem_euclid(e as i64) as usize
    }

    pub fn n(self) -> Self {
        Self::new(self.row - 1, self.col)
    }

    pub fn e(self) -> Self {
        Self::new(self.row, self.col + 1)
    }

    pub fn s(self) -> Self {
        Self::new(self.row + 1, self.col)
    }

    pub fn w(self) -> Self {
        Self::new(self.row, self.col - 1)
    }

    pub fn se(self) -> Self {
        Self::new(self.row + 1, self.col + 1)
    }

    pub fn shift(self, d: Node) -> Self {
        Self::new(self.row + d.row, self.col + d.col)
    }

    pub fn minus(self, d: Node) -> Self {
        Self::new(self.row - d.row, self.col - d.col)
    }

    /// `self ↘ v`: `v` is weakly south and weakly east.
    pub fn se_of(self, v: Node) -> bool {
        v.row >= self.row && v.col >= self.col
    }

    /// `self ↗ v`: `v` is weakly north and weakly east.
    pub fn ne_of(self, v: Node) -> bool {
        v.row <= self.row && v.col >= self.col
    }

    /// `self ⇗ v`: `v` is strictly north and strictly east.
    pub fn strictly_ne_of(self, v: Node) -> bool {
        v.row < self.row && v.col > self.col
    }

    /// Length of a shortest 4-neighbour path, minus one.
    pub fn dist(self, v: Node) -> u64 {
        (v.row - self.row).unsigned_abs() + (v.col - self.col).unsigned_abs()
    }

    /// `(-col, -row)`.
    pub fn reverse(self) -> Self {
        Self::new(-self.col, -self.row)
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (row, col) = <(i64, i64)>::deserialize(d)?;
        Ok(Node::new(row, col))
    }
}

/// Structural flags of a node set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ShapeClass {
    pub skew: bool,
    pub thin: bool,
    pub connected: bool,
    pub cornered: bool,
    pub diagonal_convex: bool,
    pub ribbon: bool,
    pub young: bool,
}

fn sorted_unique(nodes: &[Node]) -> Vec<Node> {
    let mut v = nodes.to_vec();
    v.sort();
    v.dedup();
    v
}

fn is_skew_sorted(nodes: &[Node]) -> bool {
    let has = |u: Node| nodes.binary_search(&u).is_ok();
    for (i, &u) in nodes.iter().enumerate() {
        for &w in &nodes[i + 1..] {
            if u != w && u.se_of(w) {
                if u.row < w.row && !has(u.s()) {
                    return false;
                }
                if u.col < w.col && !has(u.e()) {
                    return false;
                }
            }
        }
    }
    true
}

fn is_connected_sorted(nodes: &[Node]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let mut seen = vec![false; nodes.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        let u = nodes[i];
        for v in [u.n(), u.e(), u.s(), u.w()] {
            if let Ok(j) = nodes.binary_search(&v) {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
    }
    count == nodes.len()
}

/// Compute every structural flag of an arbitrary finite node set.
pub fn validate(nodes: &[Node]) -> ShapeClass {
    let nodes = sorted_unique(nodes);
    let has = |u: Node| nodes.binary_search(&u).is_ok();
    let skew = is_skew_sorted(&nodes);
    let mut by_diag: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for u in &nodes {
        by_diag.entry(u.diag()).or_default().push(u.row);
    }
    let thin = by_diag.values().all(|v| v.len() <= 1);
    // Rows on one diagonal arrive sorted; consecutive rows mean an unbroken interval.
    let diagonal_convex = by_diag.values().all(|rows| rows.windows(2).all(|w| w[1] == w[0] + 1));
    let sw_corners = nodes.iter().filter(|u| !has(u.s()) && !has(u.w())).count();
    let ne_corners = nodes.iter().filter(|u| !has(u.n()) && !has(u.e())).count();
    let cornered = sw_corners <= 1 && ne_corners <= 1;
    let connected = is_connected_sorted(&nodes);
    let young = nodes.is_empty() || {
        let min_row = nodes.iter().map(|u| u.row).min().unwrap();
        let min_col = nodes.iter().map(|u| u.col).min().unwrap();
        skew && has(Node::new(min_row, min_col))
    };
    ShapeClass {
        skew,
        thin,
        connected,
        cornered,
        diagonal_convex,
        ribbon: !nodes.is_empty() && thin && connected && skew,
        young,
    }
}

/// A finite skew shape with residues taken mod `e`. Nodes are kept sorted by `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    e: usize,
    nodes: Vec<Node>,
}

/// An N or E step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// Render a step sequence as a string such as `"NNE"`.
pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

impl SkewShape {
    pub fn new(e: usize, nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        if e < 2 {
            return Err(Error::BadE(e));
        }
        let nodes = sorted_unique(&nodes.into_iter().collect::<Vec<_>>());
        if !is_skew_sorted(&nodes) {
            return Err(Error::NotSkew);
        }
        Ok(Self { e, nodes })
    }

    /// Build from a node list already known to form a skew shape.
    pub(crate) fn from_trusted(e: usize, mut nodes: Vec<Node>) -> Self {
        nodes.sort();
        nodes.dedup();
        debug_assert!(is_skew_sorted(&nodes));
        Self { e, nodes }
    }

    pub fn empty(e: usize) -> Self {
        Self { e, nodes: Vec::new() }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, u: Node) -> bool {
        self.nodes.binary_search(&u).is_ok()
    }

    pub fn index_of(&self, u: Node) -> Option<usize> {
        self.nodes.binary_search(&u).ok()
    }

    pub fn class(&self) -> ShapeClass {
        validate(&self.nodes)
    }

    pub fn is_connected(&self) -> bool {
        is_connected_sorted(&self.nodes)
    }

    pub fn is_ribbon(&self) -> bool {
        !self.is_empty() && self.is_connected() && {
            let mut d: Vec<i64> = self.nodes.iter().map(|u| u.diag()).collect();
            d.sort_unstable();
            d.windows(2).all(|w| w[0] != w[1])
        }
    }

    pub fn residue(&self, u: Node) -> usize {
        u.residue(self.e)
    }

    pub fn content(&self) -> RootVector {
        let mut v = RootVector::zero(self.e);
        for u in &self.nodes {
            v.bump(u.residue(self.e));
        }
        v
    }

    pub fn translate(&self, d: Node) -> Self {
        Self { e: self.e, nodes: self.nodes.iter().map(|u| u.shift(d)).collect() }
    }

    /// Node-wise reversal `(r, c) -> (-c, -r)`.
    pub fn reverse(&self) -> Self {
        Self::from_trusted(self.e, self.nodes.iter().map(|u| u.reverse()).collect())
    }

    /// Nodes of `self` outside `other`.
    pub fn minus(&self, other: &SkewShape) -> Vec<Node> {
        self.nodes.iter().copied().filter(|u| !other.contains(*u)).collect()
    }

    /// The unique maximally southwest and northeast nodes.
    pub fn extremes(&self) -> Result<(Node, Node)> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        let max_row = self.nodes.last().unwrap().row;
        let min_row = self.nodes[0].row;
        let min_col = self.nodes.iter().map(|u| u.col).min().unwrap();
        let max_col = self.nodes.iter().map(|u| u.col).max().unwrap();
        let sw = Node::new(max_row, min_col);
        let ne = Node::new(min_row, max_col);
        debug_assert!(self.contains(sw) && self.contains(ne));
        Ok((sw, ne))
    }

    pub fn sw(&self) -> Node {
        self.extremes().expect("nonempty shape").0
    }

    pub fn ne(&self) -> Node {
        self.extremes().expect("nonempty shape").1
    }

    /// Connected components, southwest-most first.
    pub fn components(&self) -> Vec<SkewShape> {
        let mut seen = vec![false; self.nodes.len()];
        let mut out = Vec::new();
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![self.nodes[start]];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let u = self.nodes[i];
                for v in [u.n(), u.e(), u.s(), u.w()] {
                    if let Ok(j) = self.nodes.binary_search(&v) {
                        if !seen[j] {
                            seen[j] = true;
                            comp.push(v);
                            queue.push_back(j);
                        }
                    }
                }
            }
            out.push(Self::from_trusted(self.e, comp));
        }
        out.sort_by_key(|c| std::cmp::Reverse(c.nodes.last().unwrap().row));
        out
    }

    /// Canonical representative of the e-similarity class.
    pub fn normalize(&self) -> SkewShape {
        stack_components(self.e, &self.components())
    }

    pub fn e_similar(&self, other: &SkewShape) -> bool {
        self.e == other.e && self.normalize() == other.normalize()
    }

    /// The N/E path from the southwest node through every node of a ribbon.
    pub fn ribbon_path(&self) -> Result<Vec<Step>> {
        if !self.is_ribbon() {
            return Err(Error::NotRibbon);
        }
        let (mut z, ne) = self.extremes()?;
        let mut steps = Vec::with_capacity(self.len() - 1);
        while z != ne {
            if self.contains(z.n()) {
                steps.push(Step::N);
                z = z.n();
            } else {
                steps.push(Step::E);
                z = z.e();
            }
        }
        Ok(steps)
    }

    /// The ribbon traced from `start` by `steps`.
    pub fn from_path(e: usize, start: Node, steps: &[Step]) -> Self {
        let mut z = start;
        let mut nodes = vec![z];
        for s in steps {
            z = if *s == Step::N { z.n() } else { z.e() };
            nodes.push(z);
        }
        Self::from_trusted(e, nodes)
    }

    /// Nodes `(r, c + charge)` for `1 <= r <= len(λ)` and `μ_r < c <= λ_r`.
    pub fn from_skew_partition(e: usize, lambda: &[u32], mu: &[u32], charge: i64) -> Result<Self> {
        check_partition(lambda, "lambda")?;
        check_partition(mu, "mu")?;
        if mu.len() > lambda.len() || mu.iter().zip(lambda).any(|(m, l)| m > l) {
            return Err(Error::InvalidPartition("mu is not contained in lambda".into()));
        }
        let mut nodes = Vec::new();
        for (r, &l) in lambda.iter().enumerate() {
            let m = mu.get(r).copied().unwrap_or(0);
            for c in m + 1..=l {
                nodes.push(Node::new(r as i64 + 1, c as i64 + charge));
            }
        }
        Self::new(e, nodes)
    }

    pub(crate) fn sub_shape(&self, mask: u128) -> SkewShape {
        let nodes = (0..self.nodes.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.nodes[i]).collect();
        Self { e: self.e, nodes }
    }
}

fn check_partition(p: &[u32], name: &str) -> Result<()> {
    if p.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!("{name} is not weakly decreasing")));
    }
    Ok(())
}

/// Translate each component by a residue-preserving vector and stack them diagonally.
///
/// The first component goes to row 0 with its southwest node in columns `[0, e)`. Each later
/// component starts one row above and one column right of the previous northeast node, moved
/// east by the least amount that restores its residues.
pub fn stack_components(e: usize, comps: &[SkewShape]) -> SkewShape {
    let mut nodes = Vec::new();
    let mut prev_ne: Option<Node> = None;
    for c in comps {
        let Ok((sw, ne)) = c.extremes() else { continue };
        let res = sw.residue(e) as i64;
        let target = match prev_ne {
            None => Node::new(0, res),
            Some(p) => {
                let slot = Node::new(p.row - 1, p.col + 1);
                let k = (res - slot.diag()).rem_euclid(e as i64);
                Node::new(slot.row, slot.col + k)
            }
        };
        let d = target.minus(sw);
        nodes.extend(c.nodes.iter().map(|u| u.shift(d)));
        prev_ne = Some(ne.shift(d));
    }
    SkewShape::from_trusted(e, nodes)
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes.iter().map(|u| format!("({},{})", u.row, u.col)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewPartitionSpec {
    pub lambda: Vec<u32>,
    #[serde(default)]
    pub mu: Vec<u32>,
    #[serde(default)]
    pub charge: i64,
}

/// Serialized shape: an explicit node list or a charged skew partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShapeSpec {
    Nodes { nodes: Vec<Node> },
    Skew { skew: SkewPartitionSpec },
}

impl ShapeSpec {
    pub fn build(&self, e: usize) -> Result<SkewShape> {
        match self {
            ShapeSpec::Nodes { nodes } => SkewShape::new(e, nodes.iter().copied()),
            ShapeSpec::Skew { skew } => SkewShape::from_skew_partition(e, &skew.lambda, &skew.mu, skew.charge),
        }
    }

    pub fn from_shape(s: &SkewShape) -> Self {
        ShapeSpec::Nodes { nodes: s.nodes.clone() }
    }

    /// Parse `λ/μ/charge`, e.g. `6,5,5//0` or `6,6,6,4,1/5,1,1/0`.
    pub fn parse_skew(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('/').collect();
        let list = |s: &str| -> Result<Vec<u32>> {
            s.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<u32>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
                .collect()
        };
        let (lambda, mu, charge) = match parts.as_slice() {
            [l] => (list(l)?, Vec::new(), 0),
            [l, m] => (list(l)?, list(m)?, 0),
            [l, m, c] => {
                let c = c.trim();
                let charge =
                    if c.is_empty() { 0 } else { c.parse().map_err(|_| Error::Parse(format!("bad charge {c:?}")))? };
                (list(l)?, list(m)?, charge)
            }
            _ => return Err(Error::Parse(format!("expected lambda/mu/charge, got {text:?}"))),
        };
        Ok(ShapeSpec::Skew { skew: SkewPartitionSpec { lambda, mu, charge } })
    }
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ShapeSpec::from_shape(self).serialize(s)
    }
}

/// Nodes of `shape` as a set, for tests and oracles.
pub fn node_set(shape: &SkewShape) -> BTreeSet<Node> {
    shape.nodes.iter().copied().collect()
}
