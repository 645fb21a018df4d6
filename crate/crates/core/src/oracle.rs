//! Brute-force Kauffman bracket: a sum over all `2^k` smoothing states, with
//! loops counted by union-find over the diagram's arcs.
//!
//! At a crossing the A-smoothing opens the regions swept when the over-strand
//! is turned counterclockwise onto the under-strand. With the rising strand
//! on top (sign `+`) that joins north-west to south-west and north-east to
//! south-east.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{BilliardDiagram, SignedDiagram};
use crate::error::{Error, Result};
use crate::laurent::{delta_power, jones_normalize, LaurentPoly, QuarterPoly};
use crate::sign::{Sign, SignSequence};
use crate::union_find::UnionFind;

pub const DEFAULT_CROSSING_LIMIT: usize = 24;
pub const DEFAULT_SWEEP_LIMIT: usize = 14;

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// Arc pairs joined by each smoothing of one crossing.
#[derive(Debug, Clone, Copy)]
struct Smoothings {
    vertical: [(u32, u32); 2],
    horizontal: [(u32, u32); 2],
}

/// A diagram reduced to what the state sum needs. Build once and evaluate
/// many sign assignments.
#[derive(Debug, Clone)]
pub struct StateSum {
    arcs: usize,
    crossings: Vec<Smoothings>,
}

impl StateSum {
    pub fn new(d: &BilliardDiagram) -> Self {
        let crossings = d
            .crossings()
            .iter()
            .map(|c| {
                let p = c.ports.map(|a| a as u32);
                Smoothings {
                    vertical: [(p[NW], p[SW]), (p[NE], p[SE])],
                    horizontal: [(p[NW], p[NE]), (p[SW], p[SE])],
                }
            })
            .collect();
        Self {
            arcs: d.arcs().len(),
            crossings,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Bracket for one sign per crossing, in canonical crossing order.
    pub fn bracket(&self, signs: &[Sign], limit: usize) -> Result<LaurentPoly> {
        let k = self.crossings.len();
        if k > limit || k > 62 {
            return Err(Error::CrossingLimit { crossings: k, limit });
        }
        if signs.len() != k {
            return Err(Error::SignLengthMismatch {
                expected: k,
                got: signs.len(),
            });
        }
        let a_pairs: Vec<[(u32, u32); 2]> = self
            .crossings
            .iter()
            .zip(signs)
            .map(|(c, s)| match s {
                Sign::Plus => c.vertical,
                Sign::Minus => c.horizontal,
            })
            .collect();
        let b_pairs: Vec<[(u32, u32); 2]> = self
            .crossings
            .iter()
            .zip(signs)
            .map(|(c, s)| match s {
                Sign::Plus => c.horizontal,
                Sign::Minus => c.vertical,
            })
            .collect();

        // counts[b * (arcs + 1) + loops]: states with `b` B-smoothings.
        let stride = self.arcs + 1;
        let mut counts = vec![0u64; (k + 1) * stride];
        let base = UnionFind::new(self.arcs);
        let mut uf = base.clone();
        for state in 0..1u64 << k {
            uf.reset_from(&base);
            for j in 0..k {
                let pairs = if state >> j & 1 == 1 { &b_pairs[j] } else { &a_pairs[j] };
                uf.union(pairs[0].0, pairs[0].1);
                uf.union(pairs[1].0, pairs[1].1);
            }
            let b = state.count_ones() as usize;
            counts[b * stride + uf.classes()] += 1;
        }
        assemble(k, stride, &counts)
    }
}

fn assemble(k: usize, stride: usize, counts: &[u64]) -> Result<LaurentPoly> {
    let deltas: Vec<LaurentPoly> = (0..stride as u32).map(|l| delta_power(l.saturating_sub(1))).collect();
    let mut total = LaurentPoly::zero();
    for b in 0..=k {
        for loops in 1..stride {
            let n = counts[b * stride + loops];
            if n == 0 {
                continue;
            }
            let n = i64::try_from(n).map_err(|_| Error::Overflow)?;
            let exp = k as i32 - 2 * b as i32;
            total = total.checked_add(&deltas[loops].checked_mul_monomial(n, exp)?)?;
        }
    }
    Ok(total)
}

pub fn bracket_bruteforce(d: &SignedDiagram<'_>) -> Result<LaurentPoly> {
    bracket_bruteforce_with_limit(d, DEFAULT_CROSSING_LIMIT)
}

pub fn bracket_bruteforce_with_limit(d: &SignedDiagram<'_>, limit: usize) -> Result<LaurentPoly> {
    StateSum::new(d.diagram()).bracket(d.crossing_signs(), limit)
}

/// The skein relation applied crossing by crossing in `order`, which must be
/// a permutation of the crossing indices. Same value as
/// [`bracket_bruteforce`] for every order.
pub fn bracket_in_order(d: &SignedDiagram<'_>, order: &[usize]) -> Result<LaurentPoly> {
    let diagram = d.diagram();
    let k = diagram.crossing_count();
    if k > DEFAULT_CROSSING_LIMIT {
        return Err(Error::CrossingLimit {
            crossings: k,
            limit: DEFAULT_CROSSING_LIMIT,
        });
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return Err(Error::SignLengthMismatch {
            expected: k,
            got: order.len(),
        });
    }
    let sum = StateSum::new(diagram);
    skein(&sum, d.crossing_signs(), order, UnionFind::new(sum.arcs))
}

fn skein(sum: &StateSum, signs: &[Sign], order: &[usize], uf: UnionFind) -> Result<LaurentPoly> {
    let Some((&c, rest)) = order.split_first() else {
        return Ok(delta_power(uf.classes() as u32 - 1));
    };
    let x = sum.crossings[c];
    let (a, b) = match signs[c] {
        Sign::Plus => (x.vertical, x.horizontal),
        Sign::Minus => (x.horizontal, x.vertical),
    };
    let smooth = |pairs: [(u32, u32); 2]| {
        let mut next = uf.clone();
        next.union(pairs[0].0, pairs[0].1);
        next.union(pairs[1].0, pairs[1].1);
        skein(sum, signs, rest, next)
    };
    let with_a = smooth(a)?.checked_mul_monomial(1, 1)?;
    let with_b = smooth(b)?.checked_mul_monomial(1, -1)?;
    with_a.checked_add(&with_b)
}

pub fn jones(d: &SignedDiagram<'_>) -> Result<QuarterPoly> {
    Ok(jones_normalize(&bracket_bruteforce(d)?, d.writhe_direct()))
}

/// Brute-force brackets for every sign assignment, keyed by slot sequence.
pub fn bracket_all_signs(d: &BilliardDiagram) -> Result<BTreeMap<SignSequence, LaurentPoly>> {
    bracket_all_signs_with_limit(d, DEFAULT_SWEEP_LIMIT)
}

pub fn bracket_all_signs_with_limit(
    d: &BilliardDiagram,
    limit: usize,
) -> Result<BTreeMap<SignSequence, LaurentPoly>> {
    let k = d.crossing_count();
    if k > limit {
        return Err(Error::CrossingLimit { crossings: k, limit });
    }
    let sum = StateSum::new(d);
    d.all_sign_sequences()
        .map(|s| {
            let signs: Vec<Sign> = s.crossing_signs().collect();
            Ok((s, sum.bracket(&signs, DEFAULT_CROSSING_LIMIT)?))
        })
        .collect()
}
