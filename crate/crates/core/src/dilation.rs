//! Dilation of skew shapes into imaginary semicuspidal shapes.

use serde::{Deserialize, Serialize};

use crate::convex_preorder::ConvexPreorder;
use crate::cuspidal::{cuspidal_ribbon, gamma_tiling};
use crate::error::{Error, Result};
use crate::root_lattice::RootVector;
use crate::skew_shape::{stack_components, Node, ShapeSpec, SkewShape};

/// Frame vectors for the color `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationFrame {
    pub t: usize,
    pub e: usize,
    pub x: Node,
    pub y: Node,
    pub base: Node,
    /// Nodes of `ζ^t` relative to `base`.
    offsets: Vec<Node>,
}

pub fn frame(t: usize, pre: &ConvexPreorder) -> Result<DilationFrame> {
    let e = pre.e();
    let base = Node::new(0, (t % e) as i64);
    let z = cuspidal_ribbon(&RootVector::delta(e), base, pre)?;
    let d = z.shape.ne().minus(base);
    let offsets = z.shape.nodes().iter().map(|u| u.minus(base)).collect();
    Ok(DilationFrame { t: t % e, e, x: d.e(), y: d.n(), base, offsets })
}

impl DilationFrame {
    /// `b^t − u1·y + u2·x`, so that a north step in `u` moves the image by `y` and an
    /// east step moves it by `x`.
    pub fn phi(&self, u: Node) -> Node {
        Node::new(
            self.base.row - u.row * self.y.row + u.col * self.x.row,
            self.base.col - u.row * self.y.col + u.col * self.x.col,
        )
    }

    /// Inverse of [`phi`](Self::phi) on its image.
    pub fn phi_inverse(&self, b: Node) -> Option<Node> {
        let d = b.minus(self.base);
        let e = self.e as i64;
        if d.diag().rem_euclid(e) != 0 {
            return None;
        }
        // d = p·y + q·x with x = y + (1,1), so d = (p+q)·y + q·(1,1) and diag(y) = e.
        let k = d.diag() / e;
        let q = d.row - k * self.y.row;
        let u = Node::new(q - k, q);
        (self.phi(u) == b).then_some(u)
    }

    /// `ζ^(δ, φ(u))`.
    pub fn dilate_node(&self, u: Node) -> impl Iterator<Item = Node> + '_ {
        let b = self.phi(u);
        self.offsets.iter().map(move |o| b.shift(*o))
    }
}

pub fn dilate(t: usize, s: &SkewShape, pre: &ConvexPreorder) -> Result<SkewShape> {
    if s.e() != pre.e() {
        return Err(Error::MixedE(pre.e(), s.e()));
    }
    let f = frame(t, pre)?;
    SkewShape::new(s.e(), s.nodes().iter().flat_map(|&u| f.dilate_node(u)).collect::<Vec<_>>())
}

/// Recover `(t, core)` with `dilate(t, core) = s`, if there is one.
pub fn undilate(s: &SkewShape, pre: &ConvexPreorder) -> Option<(usize, SkewShape)> {
    if s.is_empty() || s.e() != pre.e() {
        return None;
    }
    let e = s.e();
    let g = gamma_tiling(s, pre).ok()?;
    let delta = RootVector::delta(e);
    if g.tiles().iter().any(|t| t.content() != delta) {
        return None;
    }
    let t = g.tiles()[0].sw().residue(e);
    if g.tiles().iter().any(|tile| tile.sw().residue(e) != t) {
        return None;
    }
    let f = frame(t, pre).ok()?;
    let core: Vec<Node> = g.tiles().iter().map(|tile| f.phi_inverse(tile.sw())).collect::<Option<_>>()?;
    let core = SkewShape::new(e, core).ok()?;
    (dilate(t, &core, pre).ok()? == *s).then_some((t, core))
}

/// One entry of the component list format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub shape: ShapeSpec,
    pub color: usize,
}

/// Stack the dilations of connected components into one semicuspidal shape of content `mδ`.
///
/// The first component ends up northeast-most.
pub fn build_imaginary_semicuspidal(components: &[(SkewShape, usize)], pre: &ConvexPreorder) -> Result<SkewShape> {
    let mut dilated = Vec::with_capacity(components.len());
    for (i, (shape, color)) in components.iter().enumerate() {
        if shape.is_empty() || !shape.is_connected() {
            return Err(Error::BadComponent(i));
        }
        dilated.push(dilate(*color, shape, pre)?);
    }
    dilated.reverse();
    Ok(stack_components(pre.e(), &dilated))
}
