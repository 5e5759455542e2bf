use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mtd::campaign::{max_dims, run_campaign, Corpus};
use mtd::generate::{gen_binary, gen_path, gen_random};
use mtd::io::{
    parse_coords, parse_tree_file, write_coords, write_report, write_tree_file, TreeFile,
};
use mtd::layout::{draw, drawing_from_coords, Algorithm};
use mtd::svg::render_svg;
use mtd::verify::verify;

const TREE_FORMAT: &str =
    "Tree files: first line n, optional line \"root R\", then n-1 lines \"u v\" \
(0-based). Each vertex's neighbours are ordered by the edge lines they appear on; that order is \
the embedding every layout respects.";

#[derive(Parser)]
#[command(name = "mtd", version, about = "Monotone grid drawings of trees", after_help = TREE_FORMAT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a tree and write its coordinates and/or an SVG.
    Draw(DrawArgs),
    /// Check a coordinate file against a tree.
    Verify(VerifyArgs),
    /// Draw and verify every tree on n vertices, writing a CSV report.
    Enumerate(EnumerateArgs),
    /// Generate a tree file.
    Gen(GenArgs),
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    input: PathBuf,
    /// Root for the one-quadrant layout; overrides the file's root line.
    #[arg(long)]
    root: Option<usize>,
    /// Coordinate output file. Printed to stdout when neither output is given.
    #[arg(long)]
    coords: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Run every check and exit with status 3 if any fails.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coords: PathBuf,
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    report: PathBuf,
    /// Enumerate rooted trees (default).
    #[arg(long, conflicts_with = "free")]
    rooted: bool,
    /// Enumerate free trees.
    #[arg(long)]
    free: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Binary,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

/// Failures mapped to exit codes.
enum Failure {
    Input(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read_tree(path: &Path) -> anyhow::Result<TreeFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_tree_file(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn pick_root(
    file: &TreeFile,
    flag: Option<usize>,
    algo: Algorithm,
) -> anyhow::Result<Option<usize>> {
    let root = flag.or(file.root);
    if let Some(r) = root {
        if r >= file.tree.len() {
            bail!("root {r} out of range for {} vertices", file.tree.len());
        }
    }
    if algo == Algorithm::OneQuadrant && root.is_none() {
        bail!("the one-quadrant layout needs a root: add a \"root R\" line or pass --root");
    }
    Ok(root)
}

fn cmd_draw(a: DrawArgs) -> Result<(), Failure> {
    let file = read_tree(&a.input)?;
    let root = pick_root(&file, a.root, a.algo)?;
    let d = draw(&file.tree, a.algo, root);
    if let Some(p) = &a.coords {
        write(p, &write_coords(&d.coords))?;
    }
    if let Some(p) = &a.svg {
        write(p, &render_svg(&d))?;
    }
    if a.coords.is_none() && a.svg.is_none() {
        print!("{}", write_coords(&d.coords));
    }
    eprintln!("grid: {}", d.dims());
    if a.verify {
        let report = verify(&d);
        eprintln!("{report}");
        if !report.all_ok() {
            return Err(Failure::Verification);
        }
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let file = read_tree(&a.input)?;
    let root = pick_root(&file, a.root, a.algo)?;
    let text =
        fs::read_to_string(&a.coords).with_context(|| format!("reading {}", a.coords.display()))?;
    let coords = parse_coords(&text, file.tree.len()).map_err(anyhow::Error::from)?;
    let d = drawing_from_coords(&file.tree, coords, a.algo, root);
    let report = verify(&d);
    println!("{report}");
    if report.all_ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<(), Failure> {
    let corpus = if a.free { Corpus::Free } else { Corpus::Rooted };
    let rows = run_campaign(a.n, a.algo, corpus).map_err(anyhow::Error::from)?;
    let mut buf = Vec::new();
    write_report(&mut buf, &rows).map_err(|e| anyhow!(e))?;
    fs::write(&a.report, buf).with_context(|| format!("writing {}", a.report.display()))?;
    let failures = rows
        .iter()
        .filter(|r| !(r.monotone && r.planar && r.bound_ok) || r.embedding_ok.is_fail())
        .count();
    let max = max_dims(&rows).expect("at least one tree");
    println!(
        "trees: {}, max dims: {max}, failures: {failures}",
        rows.len()
    );
    if failures > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    let n = usize::try_from(a.n).map_err(|_| anyhow!("n too large"))?;
    let tree = match a.kind {
        Kind::Path => gen_path(n),
        Kind::Binary => gen_binary(n),
        Kind::Random => gen_random(n, a.seed),
    };
    write(&a.out, &write_tree_file(&tree, None))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Draw(a) => cmd_draw(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
    }
}
