//! Exhaustive comparison of a family's flat term sum with the state-sum
//! oracle, parallel over sign sequences.

use std::time::Instant;

use billiard_core::oracle::{StateSum, DEFAULT_CROSSING_LIMIT};
use billiard_core::{BilliardDiagram, Sign, SignSequence};
use rayon::prelude::*;
use serde::Serialize;

use crate::family::Family;
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: Family,
    pub n: u32,
    pub crossings: usize,
    pub terms: usize,
    pub sequences: u64,
    pub mismatches: u64,
    /// The first sign sequence, in mask order, where the two values differ.
    pub first_mismatch: Option<String>,
    pub millis: f64,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

pub fn sweep(family: Family, n: u32) -> Result<SweepRow> {
    let start = Instant::now();
    let d = BilliardDiagram::build(family.spec(n))?;
    let terms = family.expansion(n as usize)?.flatten()?;
    let sum = StateSum::new(&d);
    let layout = d.slot_layout();
    let k = d.crossing_count();
    let bad: Vec<u64> = (0..1u64 << k)
        .into_par_iter()
        .map(|mask| -> Result<Option<u64>> {
            let signs: Vec<Sign> = SignSequence::from_mask(k, mask).crossing_signs().collect();
            let seq = SignSequence::spread(&layout, &signs)?;
            let expected = sum.bracket(&signs, DEFAULT_CROSSING_LIMIT)?;
            Ok((terms.eval(&seq)? != expected).then_some(mask))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    let first_mismatch = match bad.iter().min() {
        Some(&m) => {
            let signs: Vec<Sign> = SignSequence::from_mask(k, m).crossing_signs().collect();
            Some(SignSequence::spread(&layout, &signs)?.to_string())
        }
        None => None,
    };
    Ok(SweepRow {
        family,
        n,
        crossings: k,
        terms: terms.len(),
        sequences: 1 << k,
        mismatches: bad.len() as u64,
        first_mismatch,
        millis: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn sweep_range(family: Family, ns: impl IntoIterator<Item = u32>) -> Result<Vec<SweepRow>> {
    ns.into_iter().map(|n| sweep(family, n)).collect()
}
