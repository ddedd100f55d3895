//! Cuspidal and semicuspidal skew shapes in affine type A.
//!
//! Nodes carry residues mod `e`; shapes get contents in the positive root lattice; a convex
//! preorder on positive roots picks out the cuspidal ribbons and the unique cuspidal Kostant
//! tiling of any skew shape.

pub mod convex_preorder;
pub mod cuspidal;
pub mod dilation;
pub mod error;
pub mod oracle;
pub mod render;
pub mod root_lattice;
pub mod skew_shape;
pub mod tiling;

pub use convex_preorder::{CmpResult, ConvexPreorder, PreorderSpec};
pub use cuspidal::{gamma_sc_tiling, gamma_tiling, is_cuspidal, is_semicuspidal, GammaTiling};
pub use error::{Error, Result};
pub use root_lattice::{alpha, KostantPartition, RootVector};
pub use skew_shape::{Node, ShapeSpec, SkewShape, Step};
