//! Timing sweeps of `solve_all` over random graphs.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::generators::gnp;
use crate::solver::{solve_all_with, SolveOptions};

/// Edge probability for each size: fixed, or chosen for a target mean degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    Probability(f64),
    MeanDegree(f64),
}

impl Density {
    pub fn p(self, n: usize) -> f64 {
        match self {
            Density::Probability(p) => p,
            Density::MeanDegree(d) if n > 1 => (d / (n - 1) as f64).min(1.0),
            Density::MeanDegree(_) => 0.0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub seed: u64,
    pub seconds: f64,
    pub vp: usize,
    pub vp_minus: usize,
}

pub fn run_sweep(sizes: &[usize], density: Density, seed: u64, parallel: bool) -> Result<Vec<BenchRow>> {
    let opts = SolveOptions { audit: false, parallel };
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let p = density.p(n);
        let s = seed.wrapping_add(i as u64);
        let g = gnp(n, p, s);
        let t = Instant::now();
        let summary = solve_all_with(&g, opts)?;
        rows.push(BenchRow {
            n,
            m: g.m(),
            p,
            seed: s,
            seconds: t.elapsed().as_secs_f64(),
            vp: summary.vp,
            vp_minus: summary.vp_minus,
        });
    }
    Ok(rows)
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// usable points.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Exponent of wall time in `n * m`.
pub fn exponent_in_nm(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n * r.m) as f64, r.seconds)).collect();
    fit_exponent(&pts)
}

/// Exponent of wall time in `n`.
pub fn exponent_in_n(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.seconds)).collect();
    fit_exponent(&pts)
}
