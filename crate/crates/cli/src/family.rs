//! The four expansion families and the tables they describe.

use billiard_core::recursions::{b_expansion, bt_expansion, count_f_terms, count_h_skeletons, f_expansion, h_expansion};
use billiard_core::terms::Expansion;
use billiard_core::{Block, Bumpers, TableSpec};
use serde::Serialize;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `f_n` on `T(3,n)`.
    F,
    /// `h_n` on `T(5,n)`.
    H,
    /// `b_n` on the two-bumper table `B2(5,n)`.
    B,
    /// `bt_n` on the one-bumper table `B1(5,n)`.
    Bt,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::F => "f",
            Family::H => "h",
            Family::B => "b",
            Family::Bt => "bt",
        }
    }

    pub fn spec(self, n: u32) -> TableSpec {
        match self {
            Family::F => TableSpec::rect(3, n),
            Family::H => TableSpec::rect(5, n),
            Family::B => TableSpec::two_bumpers(n),
            Family::Bt => TableSpec::one_bumper(n),
        }
    }

    pub fn expansion(self, n: usize) -> Result<Expansion> {
        Ok(match self {
            Family::F => f_expansion(n)?,
            Family::H => h_expansion(n)?,
            Family::B => b_expansion(n)?,
            Family::Bt => bt_expansion(n)?,
        })
    }

    /// Skeleton count before blocks are flattened: `f_n` summands for `f`,
    /// composition skeletons for `h`, top-level summands otherwise.
    pub fn skeletons(self, n: usize) -> Result<u64> {
        Ok(match self {
            Family::F => count_f_terms(n),
            Family::H => count_h_skeletons(n) as u64,
            _ => self.expansion(n)?.summands.len() as u64,
        })
    }

    /// The family whose expansion computes the bracket of `spec`.
    pub fn of(spec: TableSpec) -> Option<(Family, u32)> {
        let b = spec.b;
        match (spec.a, spec.bumpers) {
            (3, Bumpers::None) => Some((Family::F, b)),
            (5, Bumpers::None) => Some((Family::H, b)),
            _ if spec == TableSpec::two_bumpers(b) => Some((Family::B, b)),
            _ if spec == TableSpec::one_bumper(b) => Some((Family::Bt, b)),
            _ => None,
        }
    }
}

/// Recursive expansion of the bracket of `spec`, including the single block
/// `g_2` for `T(4,2)`.
pub fn recursion_expansion(spec: TableSpec) -> Result<Expansion> {
    if spec == TableSpec::rect(4, 2) {
        return Ok(Block::G2.expansion()?);
    }
    let (family, n) = Family::of(spec).ok_or(CliError::NoRecursion)?;
    family.expansion(n as usize)
}
