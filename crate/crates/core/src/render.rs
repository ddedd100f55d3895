//! ASCII and SVG rendering of shapes and tilings.
//!
//! Row 0 is drawn at the top, so rows grow downward as in matrix notation. The figures
//! in the literature draw with the y axis pointing up, which gives the same picture.

use std::fmt::Write;

use crate::cuspidal::GammaTiling;
use crate::skew_shape::{Node, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    /// Cell edge in SVG pixels.
    pub cell_size: u32,
    /// Tile fill colors, cycled in tableau order.
    pub palette: Vec<String>,
    pub show_residues: bool,
    /// Wrap ASCII tile cells in ANSI color escapes.
    pub ansi: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            format: Format::Ascii,
            cell_size: 30,
            palette: ["#f4a6a6", "#a6c8f4", "#b8e0a6", "#f4dca6", "#d6b0f0", "#a6ece6", "#f0b8d8", "#d8d8a0"]
                .map(String::from)
                .to_vec(),
            show_residues: true,
            ansi: false,
        }
    }
}

struct Bounds {
    min_row: i64,
    min_col: i64,
    rows: usize,
    cols: usize,
}

fn bounds(nodes: &[Node]) -> Option<Bounds> {
    let min_row = nodes.iter().map(|u| u.row).min()?;
    let max_row = nodes.iter().map(|u| u.row).max()?;
    let min_col = nodes.iter().map(|u| u.col).min()?;
    let max_col = nodes.iter().map(|u| u.col).max()?;
    Some(Bounds { min_row, min_col, rows: (max_row - min_row + 1) as usize, cols: (max_col - min_col + 1) as usize })
}

fn residue_char(r: usize) -> char {
    char::from_digit(r as u32, 36).unwrap_or('?')
}

fn tile_letter(i: usize) -> char {
    const LETTERS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    LETTERS[i % LETTERS.len()] as char
}

/// A grid of cells, each either empty or labelled with a tile index.
fn grid(cells: &[(Node, usize)]) -> Option<(Bounds, Vec<Option<usize>>)> {
    let nodes: Vec<Node> = cells.iter().map(|c| c.0).collect();
    let b = bounds(&nodes)?;
    let mut g = vec![None; b.rows * b.cols];
    for &(u, t) in cells {
        g[(u.row - b.min_row) as usize * b.cols + (u.col - b.min_col) as usize] = Some(t);
    }
    Some((b, g))
}

pub fn render_shape(s: &SkewShape, opts: &RenderOptions) -> String {
    let cells: Vec<(Node, usize)> = s.nodes().iter().map(|&u| (u, 0)).collect();
    match opts.format {
        Format::Ascii => ascii(s.e(), &cells, opts, false),
        Format::Svg => svg(s.e(), &cells, opts, &[], false),
    }
}

pub fn render_tiling(g: &GammaTiling, opts: &RenderOptions) -> String {
    let mut cells = Vec::new();
    let mut legend = Vec::new();
    let e = g.tiles().first().map_or(2, |t| t.e());
    for (k, tile) in g.tableau_tiles().enumerate() {
        cells.extend(tile.nodes().iter().map(|&u| (u, k)));
        legend.push(tile.content());
    }
    match opts.format {
        Format::Ascii => {
            let mut out = ascii(e, &cells, opts, true);
            for (k, c) in legend.iter().enumerate() {
                let _ = writeln!(out, "{}: {}", tile_letter(k), c.ascii());
            }
            out
        }
        Format::Svg => {
            let labels: Vec<String> = legend.iter().map(|c| c.ascii()).collect();
            svg(e, &cells, opts, &labels, true)
        }
    }
}

fn ascii(e: usize, cells: &[(Node, usize)], opts: &RenderOptions, tiled: bool) -> String {
    let Some((b, g)) = grid(cells) else { return String::new() };
    let width = usize::from(tiled) + usize::from(opts.show_residues || !tiled);
    let mut out = String::new();
    for r in 0..b.rows {
        let row: Vec<String> = (0..b.cols)
            .map(|c| match g[r * b.cols + c] {
                None => ".".repeat(width),
                Some(t) => {
                    let u = Node::new(b.min_row + r as i64, b.min_col + c as i64);
                    let mut cell = String::new();
                    if tiled {
                        cell.push(tile_letter(t));
                    }
                    if opts.show_residues {
                        cell.push(residue_char(u.residue(e)));
                    } else if !tiled {
                        cell.push('#');
                    }
                    if opts.ansi && tiled {
                        format!("\x1b[{}m{cell}\x1b[0m", 31 + t % 6)
                    } else {
                        cell
                    }
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn svg(e: usize, cells: &[(Node, usize)], opts: &RenderOptions, legend: &[String], tiled: bool) -> String {
    let cs = opts.cell_size.max(1) as usize;
    let (b, g) = match grid(cells) {
        Some(x) => x,
        None => {
            return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\"/>\n".into();
        }
    };
    let legend_h = legend.len() * cs;
    let w = b.cols * cs + 2;
    let h = b.rows * cs + 2 + legend_h;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let fill = |t: usize| {
        if tiled && !opts.palette.is_empty() {
            opts.palette[t % opts.palette.len()].clone()
        } else {
            "#ffffff".to_string()
        }
    };
    for r in 0..b.rows {
        for c in 0..b.cols {
            let Some(t) = g[r * b.cols + c] else { continue };
            let (x, y) = (c * cs + 1, r * cs + 1);
            let _ = writeln!(
                out,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{cs}\" height=\"{cs}\" fill=\"{}\" stroke=\"#000000\"/>",
                fill(t)
            );
            if opts.show_residues {
                let u = Node::new(b.min_row + r as i64, b.min_col + c as i64);
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
                    x + cs / 2,
                    y + cs / 2,
                    cs / 2,
                    residue_char(u.residue(e))
                );
            }
        }
    }
    for (k, label) in legend.iter().enumerate() {
        let y = b.rows * cs + 1 + k * cs;
        let _ = writeln!(
            out,
            "  <rect x=\"1\" y=\"{y}\" width=\"{cs}\" height=\"{cs}\" fill=\"{}\" stroke=\"#000000\"/>",
            fill(k)
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" dominant-baseline=\"central\">{}: {}</text>",
            cs + 6,
            y + cs / 2,
            cs / 2,
            tile_letter(k),
            label
        );
    }
    out.push_str("</svg>\n");
    out
}
