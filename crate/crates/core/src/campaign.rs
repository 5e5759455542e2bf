//! Exhaustive drawing campaigns over every tree of a given size.

use rayon::prelude::*;

use crate::enumerate::{enumerate_free_trees, enumerate_rooted_trees};
use crate::error::Result;
use crate::io::ReportRow;
use crate::layout::{draw, draw_one_quadrant, Algorithm, Drawing, GridDims};
use crate::verify::{verify, VerificationReport};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "MTD_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corpus {
    /// Rooted trees, drawn from their enumeration root.
    Rooted,
    /// Free trees; the one-quadrant layout roots them at a gravity root.
    Free,
}

/// Thread count from `MTD_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
}

/// Runs `f` on a pool sized by `MTD_THREADS`, or on the global pool.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match threads_from_env()
        .and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok())
    {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

pub fn report_row(n: usize, tree_id: usize, d: &Drawing, report: &VerificationReport) -> ReportRow {
    ReportRow {
        n,
        tree_id,
        algo: d.algorithm.tag(),
        dims: d.dims(),
        monotone: report.monotone.ok,
        planar: report.planar.ok,
        bound_ok: report.bounds.ok,
        embedding_ok: report.embedding,
    }
}

/// Draws and verifies every tree of the corpus. Rows come back in
/// enumeration order (`tree_id` 0, 1, ...) regardless of thread count.
pub fn run_campaign(n: usize, algorithm: Algorithm, corpus: Corpus) -> Result<Vec<ReportRow>> {
    let drawings: Vec<Drawing> = match corpus {
        Corpus::Rooted => enumerate_rooted_trees(n)?
            .map(|rt| match algorithm {
                Algorithm::OneQuadrant => draw_one_quadrant(&rt),
                other => draw(rt.tree(), other, None),
            })
            .collect(),
        Corpus::Free => enumerate_free_trees(n)?
            .map(|t| draw(&t, algorithm, None))
            .collect(),
    };
    Ok(with_thread_cap(|| {
        drawings
            .par_iter()
            .enumerate()
            .map(|(id, d)| report_row(n, id, d, &verify(d)))
            .collect()
    }))
}

/// Largest drawing in the report: maximum area, then width, then earliest
/// tree id.
pub fn max_dims(rows: &[ReportRow]) -> Option<GridDims> {
    rows.iter()
        .rev()
        .max_by_key(|r| (r.dims.area(), r.dims.width_points))
        .map(|r| r.dims)
}
