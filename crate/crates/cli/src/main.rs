//! `cuspidal`: Kostant tilings, cuspidal ribbons, classification checks and oracles.

use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuspidal::convex_preorder::{preset_by_name, verify_axioms, AxiomReport, Violation};
use cuspidal::cuspidal::{cuspidal_representatives, cuspidal_ribbon, init_residues};
use cuspidal::dilation::{build_imaginary_semicuspidal, undilate, ComponentSpec};
use cuspidal::oracle::{self, CheckReport, Exec};
use cuspidal::render::{render_shape, render_tiling, Format, RenderOptions};
use cuspidal::root_lattice::{classify, RootClass};
use cuspidal::skew_shape::steps_to_string;
use cuspidal::tiling::DEFAULT_NODE_CAP;
use cuspidal::{gamma_sc_tiling, gamma_tiling, is_cuspidal, is_semicuspidal, ConvexPreorder, Error, Node};
use cuspidal::{RootVector, ShapeSpec, SkewShape};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cuspidal", version, about = "Cuspidal skew shapes in affine type A")]
struct Cli {
    #[command(flatten)]
    session: SessionArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SessionArgs {
    /// Named preorder: bigex (e=3) or e2-standard (e=2).
    #[arg(long, global = true, conflicts_with = "h")]
    preset: Option<String>,
    /// Functional preorder as one pair per simple root, e.g. "2,1;-1,0;-1,-1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<String>,
    /// Use the reverse of the chosen preorder.
    #[arg(long, global = true)]
    reverse: bool,
    /// Number of residues; must agree with the preorder.
    #[arg(long, global = true)]
    e: Option<usize>,
    /// Root height up to which the preorder axioms are checked before running.
    #[arg(long, global = true, default_value_t = 12)]
    height_bound: u64,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// ANSI colors in ASCII renders.
    #[arg(long, global = true, env = "CUSPIDAL_COLOR", value_enum, default_value_t = ColorChoice::Auto)]
    color: ColorChoice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorChoice {
    Never,
    Auto,
}

#[derive(Args)]
struct ShapeArgs {
    /// Charged skew partition `lambda/mu/charge`, e.g. '6,5,5//0'.
    #[arg(long, conflicts_with = "nodes_file", required_unless_present = "nodes_file")]
    skew: Option<String>,
    /// JSON node list `[[row,col],...]` or shape object; `-` reads stdin.
    #[arg(long)]
    nodes_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cuspidal Kostant tiling of a shape.
    Tile {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Merge tiles of equal content (the semicuspidal tiling).
        #[arg(long)]
        strict: bool,
        /// Also write an SVG render to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Cuspidal ribbon of an indivisible root.
    Ribbon {
        /// Coefficients `c0,c1,...`, or `delta`, or `alphaN`.
        #[arg(long)]
        root: String,
        /// Residue of the base node; defaults to the first allowed one.
        #[arg(long)]
        init: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Classify a shape: cuspidality, semicuspidality, undilation and representative.
    Check {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Run the oracle suite on all small shapes.
    Verify {
        /// Largest shape size in the populations.
        #[arg(long, default_value_t = 8)]
        max_nodes: usize,
        /// Node cap for exhaustive Kostant tiling enumeration.
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Build an imaginary semicuspidal shape from a component list.
    Build {
        /// JSON list `[{"shape":{...},"color":t},...]`; `-` reads stdin.
        #[arg(long)]
        components: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

/// A failed command and its exit code.
enum Failure {
    Verification(String),
    BadShape(String),
    BadPreorder(String),
    CapExceeded(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::BadShape(_) => 2,
            Failure::BadPreorder(_) => 3,
            Failure::CapExceeded(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::BadShape(m) | Failure::BadPreorder(m) | Failure::CapExceeded(m) => m,
        }
    }

    /// Map a library error raised while handling user input.
    fn input(err: Error) -> Self {
        match err {
            Error::CapExceeded { .. } => Failure::CapExceeded(err.to_string()),
            _ => Failure::BadShape(err.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Session {
    pre: ConvexPreorder,
    json: bool,
    ansi: bool,
}

impl Session {
    fn e(&self) -> usize {
        self.pre.e()
    }

    fn ascii_opts(&self) -> RenderOptions {
        RenderOptions { ansi: self.ansi, ..RenderOptions::default() }
    }

    fn print_json(&self, value: serde_json::Value) {
        println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
    }
}

fn parse_h(text: &str) -> Result<Vec<(i64, i64)>, String> {
    text.split(';')
        .map(|pair| {
            let nums: Vec<&str> = pair.split(',').map(str::trim).collect();
            match nums.as_slice() {
                [a, b] => match (a.parse(), b.parse()) {
                    (Ok(a), Ok(b)) => Ok((a, b)),
                    _ => Err(format!("bad h pair {pair:?}")),
                },
                _ => Err(format!("bad h pair {pair:?}")),
            }
        })
        .collect()
}

fn build_preorder(args: &SessionArgs) -> Result<ConvexPreorder, Failure> {
    let bad = |m: String| Failure::BadPreorder(m);
    let pre = match &args.h {
        Some(text) => {
            let h = parse_h(text).map_err(bad)?;
            let e = args.e.unwrap_or(h.len());
            ConvexPreorder::build_functional(e, h).map_err(|err| bad(err.to_string()))?
        }
        None => {
            let name = args.preset.as_deref().unwrap_or(match args.e {
                Some(2) => "e2-standard",
                _ => "bigex",
            });
            let pre = preset_by_name(name).map_err(|err| bad(err.to_string()))?;
            if let Some(e) = args.e {
                if e != pre.e() {
                    return Err(bad(format!("preset {name} has e = {}, not {e}", pre.e())));
                }
            }
            pre
        }
    };
    Ok(if args.reverse { pre.reverse() } else { pre })
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::Reflexivity(a) => format!("reflexivity: {a}"),
        Violation::Totality(a, b) => format!("totality: {a} vs {b}"),
        Violation::Transitivity(a, b, c) => format!("transitivity: {a} >= {b} >= {c}"),
        Violation::Convexity(a, b) => format!("convexity: {a} + {b}"),
        Violation::ImaginaryEquivalency(a, b) => format!("equivalence: {a} vs {b}"),
    }
}

fn axiom_summary(r: &AxiomReport) -> String {
    format!(
        "preorder axioms: {} roots up to height {}, {} violations",
        r.roots_checked,
        r.height_bound,
        r.violations.len()
    )
}

fn axiom_details(r: &AxiomReport) -> String {
    let mut lines = vec![axiom_summary(r)];
    lines.extend(r.violations.iter().take(20).map(|v| format!("  {}", violation_text(v))));
    if r.violations.len() > 20 {
        lines.push(format!("  ... {} more", r.violations.len() - 20));
    }
    lines.join("\n")
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let text =
        if path == Path::new("-") { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) };
    text.map_err(|err| Failure::BadShape(format!("{}: {err}", path.display())))
}

fn load_shape(args: &ShapeArgs, e: usize) -> Result<SkewShape, Failure> {
    let spec = match (&args.skew, &args.nodes_file) {
        (Some(text), _) => ShapeSpec::parse_skew(text).map_err(Failure::input)?,
        (None, Some(path)) => {
            let text = read_input(path)?;
            match serde_json::from_str::<ShapeSpec>(&text) {
                Ok(spec) => spec,
                Err(_) => {
                    let nodes: Vec<Node> = serde_json::from_str(&text)
                        .map_err(|err| Failure::BadShape(format!("{}: {err}", path.display())))?;
                    ShapeSpec::Nodes { nodes }
                }
            }
        }
        (None, None) => return Err(Failure::BadShape("no shape given".into())),
    };
    let shape = spec.build(e).map_err(Failure::input)?;
    if shape.is_empty() {
        return Err(Failure::BadShape(Error::EmptyShape.to_string()));
    }
    Ok(shape)
}

fn write_svg(path: &Path, svg: &str) -> Outcome {
    std::fs::write(path, svg).map_err(|err| Failure::BadShape(format!("{}: {err}", path.display())))
}

fn svg_opts() -> RenderOptions {
    RenderOptions { format: Format::Svg, ..RenderOptions::default() }
}

fn cmd_tile(s: &Session, shape: &ShapeArgs, strict: bool, svg: Option<&Path>) -> Outcome {
    let host = load_shape(shape, s.e())?;
    let g =
        if strict { gamma_sc_tiling(&host, &s.pre) } else { gamma_tiling(&host, &s.pre) }.map_err(Failure::input)?;
    let notation = g.partition().notation(&s.pre);
    if let Some(path) = svg {
        write_svg(path, &render_tiling(&g, &svg_opts()))?;
    }
    if s.json {
        s.print_json(json!({
            "e": s.e(),
            "notation": notation,
            "tiling": g.to_json(&s.pre),
        }));
    } else {
        println!("{notation}");
        print!("{}", render_tiling(&g, &s.ascii_opts()));
    }
    Ok(())
}

fn parse_root(text: &str, e: usize) -> Result<RootVector, Failure> {
    let bad = |m: String| Failure::BadShape(m);
    let t = text.trim();
    if t == "delta" {
        return Ok(RootVector::delta(e));
    }
    if let Some(i) = t.strip_prefix("alpha") {
        let i: usize = i.parse().map_err(|_| bad(format!("bad root {text:?}")))?;
        if i >= e {
            return Err(bad(format!("alpha{i} needs a residue below {e}")));
        }
        return Ok(RootVector::simple(e, i));
    }
    let coeffs: Vec<u32> = t
        .split(',')
        .map(|c| c.trim().parse().map_err(|_| bad(format!("bad root {text:?}"))))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != e {
        return Err(bad(format!("root {text:?} has {} coefficients, expected {e}", coeffs.len())));
    }
    RootVector::new(coeffs).map_err(Failure::input)
}

fn cmd_ribbon(s: &Session, root: &str, init: Option<usize>, svg: Option<&Path>) -> Outcome {
    let beta = parse_root(root, s.e())?;
    let allowed = init_residues(&beta).map_err(Failure::input)?;
    let t = init.unwrap_or(allowed[0]);
    let z = cuspidal_ribbon(&beta, Node::new(0, t as i64), &s.pre).map_err(Failure::input)?;
    let steps = steps_to_string(&z.steps());
    if let Some(path) = svg {
        write_svg(path, &render_shape(&z.shape, &svg_opts()))?;
    }
    if s.json {
        s.print_json(json!({
            "root": beta,
            "notation": beta.to_string(),
            "init": t,
            "steps": steps,
            "shape": z.shape,
        }));
    } else {
        println!("root: {beta}");
        println!("init: {t}");
        println!("steps: {steps}");
        print!("{}", render_shape(&z.shape, &s.ascii_opts()));
    }
    Ok(())
}

fn cmd_check(s: &Session, shape: &ShapeArgs) -> Outcome {
    let host = load_shape(shape, s.e())?;
    let content = host.content();
    let cusp = is_cuspidal(&host, &s.pre);
    let semi = is_semicuspidal(&host, &s.pre);
    let undilated = undilate(&host, &s.pre);
    let rep = cuspidal_representatives(&s.pre, host.len() as u64)
        .into_iter()
        .find(|z| z.shape.e_similar(&host))
        .map(|z| (z.root, z.base.residue(s.e())));
    let kind = match classify(&content) {
        RootClass::RealRoot => "real root".to_string(),
        RootClass::ImaginaryRoot(m) => format!("imaginary root, multiplicity {m}"),
        RootClass::NotARoot => "not a root".to_string(),
    };
    if s.json {
        s.print_json(json!({
            "nodes": host.len(),
            "content": content,
            "notation": content.to_string(),
            "connected": host.is_connected(),
            "cuspidal": cusp,
            "semicuspidal": semi,
            "undilation": undilated.as_ref().map(|(t, core)| json!({"t": t, "core": core})),
            "representative": rep.as_ref().map(|(root, t)| json!({"root": root, "init": t})),
        }));
    } else {
        println!("nodes: {}", host.len());
        println!("content: {content} ({kind})");
        println!("connected: {}", host.is_connected());
        println!("cuspidal: {cusp}");
        println!("semicuspidal: {semi}");
        match &undilated {
            Some((t, core)) => println!("undilation: t = {t}, core of {} nodes", core.len()),
            None => println!("undilation: none"),
        }
        match &rep {
            Some((root, t)) => println!("representative: ribbon of {root} at residue {t}"),
            None => println!("representative: none"),
        }
    }
    Ok(())
}

fn report_line(r: &CheckReport) -> String {
    let tag = if r.is_ok() { "PASS" } else { "FAIL" };
    let mut line = format!("{tag} {}: {} cases, {} failures", r.name, r.checked, r.failures.len());
    for f in r.failures.iter().take(5) {
        line.push_str(&format!("\n  {f}"));
    }
    line
}

fn cmd_verify(s: &Session, axioms: &AxiomReport, max_nodes: usize, node_cap: usize) -> Outcome {
    let e = s.e();
    let exec = Exec::default();
    let window = oracle::window_shapes(e, 5, 5, max_nodes);
    let connected = oracle::connected_shapes(e, max_nodes);
    let maximality = oracle::check_maximality(&window, &s.pre, node_cap, exec).map_err(Failure::input)?;
    let reports = [
        oracle::check_uniqueness(&window, &s.pre, exec),
        maximality,
        oracle::check_classification(&connected, &s.pre, exec),
        oracle::check_semicuspidal(&connected, &s.pre, exec),
    ];
    let ok = reports.iter().all(CheckReport::is_ok);
    if s.json {
        let checks: Vec<_> =
            reports.iter().map(|r| json!({"name": r.name, "checked": r.checked, "failures": r.failures})).collect();
        s.print_json(json!({
            "axioms": {
                "height_bound": axioms.height_bound,
                "roots_checked": axioms.roots_checked,
                "violations": axioms.violations.iter().map(violation_text).collect::<Vec<_>>(),
            },
            "checks": checks,
            "ok": ok,
        }));
    } else {
        println!("PASS {}", axiom_summary(axioms));
        for r in &reports {
            println!("{}", report_line(r));
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification("oracle violations found".into()))
    }
}

fn cmd_build(s: &Session, components: &Path, svg: Option<&Path>) -> Outcome {
    let text = read_input(components)?;
    let specs: Vec<ComponentSpec> =
        serde_json::from_str(&text).map_err(|err| Failure::BadShape(format!("{}: {err}", components.display())))?;
    let mut parts = Vec::with_capacity(specs.len());
    for (i, c) in specs.iter().enumerate() {
        if c.color >= s.e() {
            return Err(Failure::BadShape(format!("component {i}: color {} is not below e = {}", c.color, s.e())));
        }
        parts.push((c.shape.build(s.e()).map_err(Failure::input)?, c.color));
    }
    let shape = build_imaginary_semicuspidal(&parts, &s.pre).map_err(Failure::input)?;
    if let Some(path) = svg {
        write_svg(path, &render_shape(&shape, &svg_opts()))?;
    }
    if s.json {
        s.print_json(json!({
            "content": shape.content(),
            "notation": shape.content().to_string(),
            "shape": shape,
        }));
    } else {
        println!("content: {}", shape.content());
        println!("nodes: {}", shape.len());
        print!("{}", render_shape(&shape, &s.ascii_opts()));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let pre = build_preorder(&cli.session)?;
    let axioms = verify_axioms(&pre, cli.session.height_bound);
    if !axioms.is_ok() {
        eprintln!("{}", axiom_details(&axioms));
        return Err(match cli.command {
            Command::Verify { .. } => Failure::Verification("preorder axioms fail".into()),
            _ => Failure::BadPreorder("preorder axioms fail".into()),
        });
    }
    let ansi = cli.session.color == ColorChoice::Auto && std::io::stdout().is_terminal();
    let s = Session { pre, json: cli.session.json, ansi };
    match &cli.command {
        Command::Tile { shape, strict, svg } => cmd_tile(&s, shape, *strict, svg.as_deref()),
        Command::Ribbon { root, init, svg } => cmd_ribbon(&s, root, *init, svg.as_deref()),
        Command::Check { shape } => cmd_check(&s, shape),
        Command::Verify { max_nodes, node_cap } => cmd_verify(&s, &axioms, *max_nodes, *node_cap),
        Command::Build { components, svg } => cmd_build(&s, components, svg.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
