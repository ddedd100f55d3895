//! Randomized invariants over roots, preorders, shapes, tilings and dilation.

mod common;

use common::*;
use cuspidal::convex_preorder::{positive_roots, CmpResult};
use cuspidal::dilation::{dilate, frame};
use cuspidal::root_lattice::{
    alpha, bilex_compare, kostant_from_sequence, positive_root_form, psi_m, Bilex, KostantPartition,
};
use cuspidal::skew_shape::validate;
use cuspidal::tiling::{minimal_se_removable, removable_ribbons};
use cuspidal::{gamma_tiling, ConvexPreorder, Node, RootVector, SkewShape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pre_for(e: usize, reversed: bool) -> ConvexPreorder {
    let p = preset(e);
    if reversed {
        p.reverse()
    } else {
        p
    }
}

fn shape_from_seed(seed: u64, e: usize, max_nodes: usize) -> SkewShape {
    random_shape(&mut ChaCha8Rng::seed_from_u64(seed), e, max_nodes)
}

/// A random Kostant partition of `theta`: repeatedly peel off a random indivisible root.
fn random_partition(seed: u64, theta: &RootVector, pre: &ConvexPreorder) -> KostantPartition {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots: Vec<RootVector> =
        positive_roots(theta.e(), theta.height()).into_iter().filter(|r| psi_m(r).is_some_and(|d| d.m == 1)).collect();
    let mut rest = theta.clone();
    let mut parts = Vec::new();
    while !rest.is_zero() {
        let fits: Vec<&RootVector> = roots.iter().filter(|r| r.dominated_by(&rest)).collect();
        let r = (*fits.choose(&mut rng).expect("simple roots always fit")).clone();
        rest = rest.checked_sub(&r).unwrap();
        parts.push(r);
    }
    parts.sort_by(|a, b| pre.cmp_roots(b, a).to_ordering());
    kostant_from_sequence(theta.e(), &parts, pre).unwrap()
}

proptest! {
    #[test]
    fn splitting_identity(e in 2usize..5, t in 0usize..5, h1 in 1u64..15, h2 in 1u64..15) {
        let t = t % e;
        let whole = alpha(e, t, h1 + h2).unwrap();
        let parts = &alpha(e, t, h1).unwrap() + &alpha(e, (t + h1 as usize) % e, h2).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn root_form_inverts_alpha(e in 2usize..5, t in 0usize..5, h in 1u64..30) {
        let t = t % e;
        let f = positive_root_form(&alpha(e, t, h).unwrap()).unwrap();
        prop_assert_eq!(f.h, h);
        prop_assert_eq!(f.t, if h % e as u64 == 0 { 0 } else { t });
    }

    #[test]
    fn kostant_content_is_sum(seed: u64, e in 2usize..4, h in 1u64..10) {
        let pre = preset(e);
        let theta = alpha(e, 0, h).unwrap().scale(2);
        let k = random_partition(seed, &theta, &pre);
        prop_assert_eq!(k.total(), theta);
    }

    #[test]
    fn bilex_is_partial_order(s1: u64, s2: u64, s3: u64, e in 2usize..4, h in 2u64..11, rev: bool) {
        let pre = pre_for(e, rev);
        let theta = alpha(e, 1 % e, h).unwrap();
        let [a, b, c] = [s1, s2, s3].map(|s| random_partition(s, &theta, &pre));
        let ge = |x: &KostantPartition, y: &KostantPartition| {
            matches!(bilex_compare(x, y, &pre).unwrap().combined, Bilex::Equal | Bilex::GreaterBoth)
        };
        prop_assert!(ge(&a, &a));
        if ge(&a, &b) && ge(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if ge(&a, &b) && ge(&b, &c) {
            prop_assert!(ge(&a, &c));
        }
        let ab = bilex_compare(&a, &b, &pre).unwrap();
        let ba = bilex_compare(&b, &a, &pre).unwrap();
        prop_assert_eq!(ab.right, ba.right.reverse());
        prop_assert_eq!(ab.left, ba.left.reverse());
    }

    #[test]
    fn generalized_convexity(seed: u64, e in 2usize..4, h in 1u64..6, m in 1u32..4, rev: bool) {
        let pre = pre_for(e, rev);
        let gamma = alpha(e, seed as usize % e, h).unwrap();
        let target = gamma.scale(m);
        let k = random_partition(seed, &target, &pre);
        let sorted = k.sorted(&pre);
        let (first, last) = (&sorted[0].root, &sorted[sorted.len() - 1].root);
        prop_assert_ne!(pre.cmp_roots(first, &gamma), CmpResult::Less);
        prop_assert_ne!(pre.cmp_roots(&gamma, last), CmpResult::Less);
    }

    #[test]
    fn normalize_and_similarity(s1: u64, dr in -6i64..6, dc in -6i64..6, e in 2usize..4) {
        let s = shape_from_seed(s1, e, 10);
        let n = s.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert!(s.e_similar(&s));
        let moved = s.translate(Node::new(dr, dc));
        let residue_preserving = (dc - dr).rem_euclid(e as i64) == 0;
        prop_assert_eq!(s.e_similar(&moved), residue_preserving);
        prop_assert_eq!(moved.e_similar(&s), residue_preserving);
        let back = moved.translate(Node::new(-dr, -dc));
        prop_assert!(back.e_similar(&moved) == residue_preserving && back.e_similar(&s));
    }

    #[test]
    fn removal_leaves_skew(seed: u64, e in 2usize..4) {
        let s = shape_from_seed(seed, e, 10);
        for r in removable_ribbons(&s).unwrap() {
            let rest = s.minus(&r.ribbon);
            prop_assert!(rest.is_empty() || validate(&rest).skew);
            prop_assert!(r.ribbon.is_ribbon());
        }
    }

    #[test]
    fn minimal_removals_increase(seed: u64, e in 2usize..4, rev: bool) {
        let pre = pre_for(e, rev);
        let mut s = shape_from_seed(seed, e, 10);
        let mut prev: Option<RootVector> = None;
        while !s.is_empty() {
            let xi = minimal_se_removable(&s, &pre).unwrap();
            let c = xi.content();
            prop_assert!(psi_m(&c).is_some_and(|d| d.m == 1));
            if let Some(p) = &prev {
                prop_assert_ne!(pre.cmp_roots(&c, p), CmpResult::Less);
            }
            prev = Some(c);
            s = SkewShape::new(e, s.minus(&xi)).unwrap();
        }
    }

    #[test]
    fn gamma_tiles_are_cuspidal_ribbons(seed: u64, e in 2usize..4, rev: bool) {
        let pre = pre_for(e, rev);
        let s = shape_from_seed(seed, e, 12);
        let g = gamma_tiling(&s, &pre).unwrap();
        let mut covered: Vec<Node> = g.tiles().iter().flat_map(|t| t.nodes().to_vec()).collect();
        covered.sort();
        prop_assert_eq!(covered.as_slice(), s.nodes());
        for t in g.tiles() {
            prop_assert!(t.is_ribbon());
            prop_assert!(psi_m(&t.content()).is_some_and(|d| d.m == 1));
            prop_assert!(cuspidal::is_cuspidal(t, &pre));
        }
        let seq: Vec<RootVector> = g.tableau_tiles().map(|t| t.content()).collect();
        prop_assert!(seq.windows(2).all(|w| pre.cmp_roots(&w[0], &w[1]) != CmpResult::Less));
    }

    #[test]
    fn dilation_moves(z_row in -8i64..8, z_col in -8i64..8, t in 0usize..3, e in 2usize..4) {
        let pre = preset(e);
        let f = frame(t, &pre).unwrap();
        let z = Node::new(z_row, z_col);
        let at = |u: Node| {
            let mut v: Vec<Node> = f.dilate_node(u).collect();
            v.sort();
            v
        };
        let shift = |v: Vec<Node>, d: Node| v.into_iter().map(|u| u.shift(d)).collect::<Vec<_>>();
        prop_assert_eq!(at(z.e()), shift(at(z), f.x));
        prop_assert_eq!(at(z.n()), shift(at(z), f.y));
        prop_assert_eq!(at(z.se()), shift(at(z), Node::new(1, 1)));
        prop_assert_eq!(f.phi_inverse(f.phi(z)), Some(z));
    }

    #[test]
    fn dilation_preserves_flags(seed: u64, t in 0usize..3, e in 2usize..4) {
        let pre = preset(e);
        let s = shape_from_seed(seed, e, 8);
        let d = dilate(t, &s, &pre).unwrap();
        let (a, b) = (s.class(), d.class());
        prop_assert!(b.skew);
        prop_assert_eq!(d.content(), RootVector::delta(e).scale(s.len() as u32));
        prop_assert_eq!(a.cornered, b.cornered);
        prop_assert_eq!(a.diagonal_convex, b.diagonal_convex);
        prop_assert_eq!(a.connected, b.connected);
        prop_assert_eq!(a.ribbon, b.ribbon);
        prop_assert_eq!(s.components().len(), d.components().len());
    }
}

#[test]
fn phi_is_injective() {
    let f = frame(1, &ConvexPreorder::bigex()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = std::collections::BTreeMap::new();
    while seen.len() < 100 {
        use rand::Rng;
        let u = Node::new(rng.gen_range(-50..50), rng.gen_range(-50..50));
        let img = f.phi(u);
        if let Some(prev) = seen.insert(img, u) {
            assert_eq!(prev, u);
        }
    }
}

#[test]
fn kappa_of_young_diagram_against_singletons() {
    // The all-singleton partition does not come from a Kostant tiling of this shape, so
    // maximality says nothing about it.
    let pre = ConvexPreorder::bigex();
    let s = SkewShape::from_skew_partition(3, &YOUNG_LAMBDA, &[], 0).unwrap();
    let gamma = gamma_tiling(&s, &pre).unwrap();
    let content = s.content();
    let singles =
        KostantPartition::from_entries(3, (0..3).map(|i| (RootVector::simple(3, i), content.coeff(i)))).unwrap();
    let v = bilex_compare(gamma.partition(), &singles, &pre).unwrap();
    // α2 is the smallest root and α0 the largest under this preorder, and the singleton
    // partition has the larger multiplicity of both.
    assert_eq!((v.right, v.left, v.combined), (std::cmp::Ordering::Less, std::cmp::Ordering::Less, Bilex::LessBoth));
}
