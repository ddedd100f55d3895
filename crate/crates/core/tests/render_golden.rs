//! Renders pinned byte for byte. Set `CUSPIDAL_BLESS=1` to rewrite the files in tests/data.

mod common;

use std::path::PathBuf;

use common::*;
use cuspidal::cuspidal::cuspidal_ribbon;
use cuspidal::dilation::dilate;
use cuspidal::render::{render_shape, render_tiling, Format, RenderOptions};
use cuspidal::{gamma_tiling, ConvexPreorder, Node, SkewShape};

fn check(name: &str, got: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    if std::env::var_os("CUSPIDAL_BLESS").is_some() {
        std::fs::write(&path, got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(got, want, "{name}");
}

fn svg() -> RenderOptions {
    RenderOptions { format: Format::Svg, ..RenderOptions::default() }
}

#[test]
fn young_diagram_tilings() {
    let pre = ConvexPreorder::bigex();
    for charge in 0..3 {
        let s = SkewShape::from_skew_partition(3, &YOUNG_LAMBDA, &[], charge).unwrap();
        let g = gamma_tiling(&s, &pre).unwrap();
        check(&format!("young_tau{charge}.txt"), &render_tiling(&g, &RenderOptions::default()));
        check(&format!("young_tau{charge}.svg"), &render_tiling(&g, &svg()));
    }
}

#[test]
fn e2_tiling() {
    let pre = ConvexPreorder::e2_standard();
    let s = SkewShape::from_skew_partition(2, &E2_LAMBDA, &E2_MU, 0).unwrap();
    let g = gamma_tiling(&s, &pre).unwrap();
    check("e2_skew.txt", &render_tiling(&g, &RenderOptions::default()));
    check("e2_skew.svg", &render_tiling(&g, &svg()));
}

#[test]
fn ribbon_and_dilation() {
    let pre = ConvexPreorder::bigex();
    let z = cuspidal_ribbon(&rv(&[3, 2, 2]), Node::new(0, 0), &pre).unwrap();
    check("ribbon_2d_a0.txt", &render_shape(&z.shape, &RenderOptions::default()));
    check("ribbon_2d_a0.svg", &render_shape(&z.shape, &svg()));
    let core = SkewShape::from_skew_partition(3, &[4, 3, 2], &[], 0).unwrap();
    let d = dilate(2, &core, &pre).unwrap();
    check("dilated_432.txt", &render_tiling(&gamma_tiling(&d, &pre).unwrap(), &RenderOptions::default()));
}
