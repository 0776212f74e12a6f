//! Scaling measurements: construction time (preprocessing, both sweeps and the
//! boundary matrices) against rank time, on random bodies of growing size.

use std::fmt::Write as _;
use std::time::Duration;

use crate::error::Result;
use crate::morse::{compute, Options};
use crate::shapes::random_grid;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    /// Cubes in the subdivided grid.
    pub n: usize,
    pub n_c: usize,
    pub t_construct: Duration,
    pub t_rank: Duration,
}

/// Input edge length whose subdivision is closest to `size`.
pub fn input_side(size: usize) -> usize {
    ((size as f64 / 3.0).round() as usize).max(1)
}

/// Times one random body of subdivided edge length about `size`, keeping the
/// fastest of `repeats` runs for each phase.
pub fn bench_size(size: usize, density: f64, seed: u64, repeats: usize) -> Result<BenchRow> {
    let side = input_side(size);
    let grid = random_grid([side; 3], density, seed)?;
    let mut best: Option<BenchRow> = None;
    for _ in 0..repeats.max(1) {
        let report = compute(&grid, Options::default())?.report;
        let row = BenchRow {
            n: (3 * side).pow(3),
            n_c: report.n_c,
            t_construct: report.timing.construct(),
            t_rank: report.timing.rank,
        };
        best = Some(match best {
            None => row,
            Some(b) => BenchRow {
                t_construct: b.t_construct.min(row.t_construct),
                t_rank: b.t_rank.min(row.t_rank),
                ..b
            },
        });
    }
    Ok(best.expect("at least one run"))
}

pub fn run_bench(sizes: &[usize], density: f64, seed: u64, repeats: usize) -> Result<Vec<BenchRow>> {
    sizes.iter().map(|&s| bench_size(s, density, seed, repeats)).collect()
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct positive abscissae.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn construct_slope(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.t_construct.as_secs_f64())).collect();
    loglog_slope(&pts)
}

/// CSV with header `n,n_c,t_construct,t_rank`; times in seconds.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,n_c,t_construct,t_rank\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{:.6},{:.6}",
            r.n,
            r.n_c,
            r.t_construct.as_secs_f64(),
            r.t_rank.as_secs_f64()
        );
    }
    out
}
