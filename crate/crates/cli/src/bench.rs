//! Wall-time comparison of recursion and oracle on one sign sequence.

use std::time::{Duration, Instant};

use billiard_core::oracle::{StateSum, DEFAULT_CROSSING_LIMIT};
use billiard_core::{BilliardDiagram, Sign, SignSequence, TableSpec};
use serde::Serialize;

use crate::family::{recursion_expansion, Family};
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub a: u32,
    pub b: u32,
    pub signs: String,
    pub crossings: usize,
    /// Recursion skeletons, `2^(b-4)` for `h_b`.
    pub skeletons: Option<u64>,
    /// Smoothing states visited by the oracle, `2^crossings`.
    pub oracle_states: u64,
    pub compile_micros: f64,
    pub recursion_micros: f64,
    pub oracle_micros: f64,
    pub speedup: f64,
    pub agree: bool,
}

/// Fastest of `runs` timings, with at least `min_total` spent per
/// measurement so short calls are averaged.
fn time<T>(runs: usize, min_total: Duration, mut f: impl FnMut() -> Result<T>) -> Result<(f64, T)> {
    let mut best = f64::INFINITY;
    let mut out = f()?;
    for _ in 0..runs {
        let start = Instant::now();
        let mut n = 0u32;
        while n == 0 || start.elapsed() < min_total {
            out = f()?;
            n += 1;
        }
        best = best.min(start.elapsed().as_secs_f64() * 1e6 / n as f64);
    }
    Ok((best, out))
}

/// Periodic `++--` signs on the crossings of `d`.
pub fn default_signs(d: &BilliardDiagram) -> Result<SignSequence> {
    let pattern = [Sign::Plus, Sign::Plus, Sign::Minus, Sign::Minus];
    let signs: Vec<Sign> = pattern.iter().copied().cycle().take(d.crossing_count()).collect();
    Ok(d.spread_signs(&signs)?)
}

pub fn bench(spec: TableSpec, signs: Option<SignSequence>, runs: usize) -> Result<BenchReport> {
    let d = BilliardDiagram::build(spec)?;
    let signs = match signs {
        Some(s) => s,
        None => default_signs(&d)?,
    };
    let signed = d.assign_signs(signs.clone())?;
    let crossing_signs = signed.crossing_signs().to_vec();

    let start = Instant::now();
    let compiled = recursion_expansion(spec)?.compile()?;
    let compile_micros = start.elapsed().as_secs_f64() * 1e6;
    let (recursion_micros, via_recursion) =
        time(runs, Duration::from_millis(20), || Ok(compiled.eval(&signs)?))?;

    let sum = StateSum::new(&d);
    let (oracle_micros, via_oracle) = time(runs, Duration::ZERO, || {
        Ok(sum.bracket(&crossing_signs, DEFAULT_CROSSING_LIMIT)?)
    })?;

    let skeletons = match Family::of(spec) {
        Some((family, n)) => Some(family.skeletons(n as usize)?),
        None => None,
    };
    Ok(BenchReport {
        a: spec.a,
        b: spec.b,
        signs: signs.to_string(),
        crossings: d.crossing_count(),
        skeletons,
        oracle_states: 1 << d.crossing_count(),
        compile_micros,
        recursion_micros,
        oracle_micros,
        speedup: oracle_micros / recursion_micros,
        agree: via_recursion == via_oracle,
    })
}
