//! Data and generators shared by the integration targets.
#![allow(dead_code)]

use cuspidal::{ConvexPreorder, Node, RootVector, SkewShape};
use rand::Rng;

pub fn rv(c: &[u32]) -> RootVector {
    RootVector::new(c.to_vec()).unwrap()
}

pub const YOUNG_LAMBDA: [u32; 8] = [6, 5, 5, 5, 5, 2, 2, 1];

/// Expected partitions of the Young diagram above for charges 0, 1, 2 (e = 3, bigex).
pub const YOUNG_KAPPA: [&str; 3] = [
    "(α0 | 2δ+α0 | 2δ+α0+α1 | δ² | δ+α1+α2 | α1+α2 | α2²)",
    "(α0+α1 | α2+α0 | δ+α0+α1 | δ+α2+α0 | 2δ+α0+α1 | δ² | α1+α2 | α2)",
    "(δ+α0 | 3δ+α0 | δ³ | δ+α2 | α1³ | α2)",
];

pub const E2_LAMBDA: [u32; 5] = [6, 6, 6, 4, 1];
pub const E2_MU: [u32; 3] = [5, 1, 1];
pub const E2_KAPPA: &str = "(α1² | δ+α1 | δ³ | δ+α0 | α0²)";

/// (figure, e, content, initial residue, step string)
pub const RIBBONS: &[(u8, usize, &[u32], i64, &str)] = &[
    (1, 3, &[1, 0, 0], 0, ""),
    (1, 3, &[1, 1, 0], 0, "N"),
    (1, 3, &[2, 1, 1], 0, "NNE"),
    (1, 3, &[1, 0, 1], 2, "E"),
    (1, 3, &[3, 2, 2], 0, "NNENEE"),
    (1, 3, &[2, 2, 1], 0, "NNEN"),
    (2, 3, &[2, 3, 3], 1, "EENNENN"),
    (2, 3, &[1, 1, 2], 2, "ENN"),
    (2, 3, &[1, 2, 2], 1, "EENN"),
    (2, 3, &[0, 1, 0], 1, ""),
    (2, 3, &[0, 1, 1], 1, "N"),
    (2, 3, &[0, 0, 1], 2, ""),
    (3, 3, &[1, 1, 1], 0, "NN"),
    (3, 3, &[1, 1, 1], 1, "EE"),
    (3, 3, &[1, 1, 1], 2, "EN"),
    (7, 2, &[0, 1], 1, ""),
    (7, 2, &[1, 2], 1, "NE"),
    (7, 2, &[2, 3], 1, "NENE"),
    (7, 2, &[1, 0], 0, ""),
    (7, 2, &[2, 1], 0, "EN"),
    (7, 2, &[3, 2], 0, "ENEN"),
    (7, 2, &[1, 1], 0, "E"),
    (7, 2, &[1, 1], 1, "N"),
];

pub fn preset(e: usize) -> ConvexPreorder {
    if e == 2 {
        ConvexPreorder::e2_standard()
    } else {
        ConvexPreorder::bigex()
    }
}

/// The dilated shape as drawn: SW corners `(x, y)` of nine copies of the ribbon
/// `{(x,y), (x+1,y), (x+1,y+1)}`, with the y axis pointing north.
pub const FIG4_BASES: [(i64, i64); 9] = [(0, 0), (2, 1), (1, 2), (2, 4), (3, 3), (4, 5), (5, 4), (6, 6), (8, 7)];

pub fn figure4_drawn() -> SkewShape {
    // A drawn cell (x, y) is the node (-y, x + 2): the first cell has residue 2.
    let node = |x: i64, y: i64| Node::new(-y, x + 2);
    let nodes = FIG4_BASES.iter().flat_map(|&(x, y)| [node(x, y), node(x + 1, y), node(x + 1, y + 1)]);
    SkewShape::new(3, nodes.collect::<Vec<_>>()).unwrap()
}

/// A random nonempty skew shape with at most `max_nodes` nodes in a random position.
pub fn random_shape(rng: &mut impl Rng, e: usize, max_nodes: usize) -> SkewShape {
    loop {
        let rows = rng.gen_range(1..=5usize);
        let cols = rng.gen_range(1..=5usize);
        let mut lambda = Vec::with_capacity(rows);
        let mut prev = cols;
        for _ in 0..rows {
            prev = rng.gen_range(0..=prev);
            lambda.push(prev);
        }
        let mut mu = Vec::with_capacity(rows);
        let mut prev = cols;
        for &l in &lambda {
            prev = rng.gen_range(0..=prev.min(l));
            mu.push(prev);
        }
        let size: usize = lambda.iter().zip(&mu).map(|(l, m)| l - m).sum();
        if size == 0 || size > max_nodes {
            continue;
        }
        let (dr, dc) = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
        let nodes: Vec<Node> =
            (0..rows).flat_map(|r| (mu[r]..lambda[r]).map(move |c| Node::new(r as i64 + dr, c as i64 + dc))).collect();
        return SkewShape::new(e, nodes).unwrap();
    }
}
