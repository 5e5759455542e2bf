//! Text formats: tree files, coordinate files and campaign CSV reports.
//!
//! A tree file holds `n` on the first line, an optional `root R` line, then
//! `n - 1` lines `u v` with 0-based vertex ids. Each vertex's neighbours are
//! ordered by the edge lines they appear on; that order is the embedding.
//! Blank lines and lines starting with `#` are ignored.
//!
//! A coordinate file holds one `v x y` line per vertex, sorted by `v`.

use std::io::Write;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::layout::GridDims;
use crate::locate::GridVector;
use crate::tree::Tree;
use crate::verify::Applicability;

/// A parsed tree file.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeFile {
    pub tree: Tree,
    pub root: Option<usize>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, got {tok:?}"),
        )
    })
}

fn parse_i64(line: usize, tok: &str) -> Result<i64> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected an integer, got {tok:?}")))
}

pub fn parse_tree_file(text: &str) -> Result<TreeFile> {
    let mut lines = content_lines(text).peekable();
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n = parse_usize(first, header)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut root = None;
    if let Some((line, l)) = lines.peek().copied() {
        if let Some(rest) = l.strip_prefix("root") {
            let r = parse_usize(line, rest.trim())?;
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, n });
            }
            root = Some(r);
            lines.next();
        }
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, format!("expected \"u v\", got {l:?}")));
        }
        edges.push((parse_usize(line, toks[0])?, parse_usize(line, toks[1])?));
    }
    let tree = Tree::from_edges(n, &edges)?;
    Ok(TreeFile { tree, root })
}

/// Emits a tree file whose parse reproduces every adjacency order.
pub fn write_tree_file(tree: &Tree, root: Option<usize>) -> String {
    let mut out = format!("{}\n", tree.len());
    if let Some(r) = root {
        out.push_str(&format!("root {r}\n"));
    }
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a coordinate file for a tree with `n` vertices. Every vertex must
/// appear exactly once; line order is free.
pub fn parse_coords(text: &str, n: usize) -> Result<Vec<Point>> {
    let mut coords: Vec<Option<Point>> = vec![None; n];
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_err(line, format!("expected \"v x y\", got {l:?}")));
        }
        let v = parse_usize(line, toks[0])?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if coords[v].is_some() {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        coords[v] = Some(GridVector::new(
            parse_i64(line, toks[1])?,
            parse_i64(line, toks[2])?,
        ));
    }
    coords
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| parse_err(0, format!("no coordinates for vertex {v}"))))
        .collect()
}

pub fn write_coords(coords: &[Point]) -> String {
    coords
        .iter()
        .enumerate()
        .map(|(v, p)| format!("{v} {} {}\n", p.x, p.y))
        .collect()
}

/// One line of a campaign report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub n: usize,
    pub tree_id: usize,
    pub algo: &'static str,
    pub dims: GridDims,
    pub monotone: bool,
    pub planar: bool,
    pub bound_ok: bool,
    pub embedding_ok: Applicability,
}

pub const REPORT_HEADER: [&str; 9] = [
    "n",
    "tree_id",
    "algo",
    "width_pts",
    "height_pts",
    "monotone",
    "planar",
    "bound_ok",
    "embedding_ok",
];

pub fn write_report<W: Write>(out: W, rows: &[ReportRow]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.tree_id.to_string(),
            r.algo.to_string(),
            r.dims.width_points.to_string(),
            r.dims.height_points.to_string(),
            r.monotone.to_string(),
            r.planar.to_string(),
            r.bound_ok.to_string(),
            r.embedding_ok.to_string(),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_file_with_root() {
        let f = parse_tree_file("4\nroot 2\n0 1\n# comment\n1 2\n\n1 3\n").unwrap();
        assert_eq!(f.root, Some(2));
        assert_eq!(f.tree.neighbors(1), &[0, 2, 3]);
        assert_eq!(
            write_tree_file(&f.tree, f.root),
            "4\nroot 2\n0 1\n1 2\n1 3\n"
        );
    }

    #[test]
    fn single_vertex() {
        let f = parse_tree_file("1\n").unwrap();
        assert_eq!(f.tree.len(), 1);
        assert_eq!(f.root, None);
    }

    #[test]
    fn malformed_tree_files() {
        assert!(matches!(parse_tree_file(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_tree_file("x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_tree_file("3\n0 1\n"),
            Err(Error::EdgeCount { .. })
        ));
        assert!(matches!(
            parse_tree_file("3\n0 1\n1 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_tree_file("2\nroot 5\n0 1\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_tree_file("3\n0 1\n0 1\n"),
            Err(Error::DuplicateEdge(..))
        ));
    }

    #[test]
    fn coords_round_trip() {
        let pts = vec![
            GridVector::new(0, 0),
            GridVector::new(-3, 7),
            GridVector::new(2, -1),
        ];
        let text = write_coords(&pts);
        assert_eq!(text, "0 0 0\n1 -3 7\n2 2 -1\n");
        assert_eq!(parse_coords(&text, 3).unwrap(), pts);
        assert!(parse_coords("0 0 0\n", 2).is_err());
        assert!(parse_coords("0 0 0\n0 1 1\n", 2).is_err());
    }

    #[test]
    fn report_format() {
        let rows = vec![ReportRow {
            n: 1,
            tree_id: 0,
            algo: "1q",
            dims: GridDims::new(1, 1),
            monotone: true,
            planar: true,
            bound_ok: true,
            embedding_ok: Applicability::NotApplicable,
        }];
        let mut buf = Vec::new();
        write_report(&mut buf, &rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,tree_id,algo,width_pts,height_pts,monotone,planar,bound_ok,embedding_ok\n1,0,1q,1,1,true,true,true,n/a\n"
        );
    }
}
