//! Draw every tree on n vertices with each layout and summarise.
//!
//! cargo run --release --example enumerate_campaign -- 10

use mtd::campaign::{max_dims, run_campaign, Corpus};
use mtd::io::write_report;
use mtd::Algorithm;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    for (algo, corpus) in [
        (Algorithm::OneQuadrant, Corpus::Rooted),
        (Algorithm::TwoQuadrants, Corpus::Free),
        (Algorithm::FourQuadrants, Corpus::Free),
    ] {
        let rows = run_campaign(n, algo, corpus).unwrap();
        let ok = rows.iter().all(|r| r.monotone && r.planar && r.bound_ok);
        println!(
            "{algo} {corpus:?}: {} trees, max {}, all ok: {ok}",
            rows.len(),
            max_dims(&rows).unwrap()
        );
    }
    let rows = run_campaign(n.min(4), Algorithm::OneQuadrant, Corpus::Rooted).unwrap();
    write_report(std::io::stdout(), &rows).unwrap();
}
