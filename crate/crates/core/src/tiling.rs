//! Domino tilings of the `2 x n` board and the tile reading of `f_b`.
//!
//! A summand of `f_b` is a row of tiles over a board of length `b - 1`:
//! a vertical domino `V` for `A^±`, two horizontal dominoes `H` for
//! `f_2^∓,A^∓`, a square `C` for the block `C`, and a start tile, `S_2`
//! (width 2, `f_3`) or `S_1` (width 1, `f_2^±`).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::terms::{Block, Expansion, Piece, SlotFactor, Summand, TermSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    S1,
    S2,
    V,
    H,
    C,
}

impl Tile {
    pub fn width(self) -> usize {
        match self {
            Tile::S1 | Tile::V => 1,
            Tile::S2 | Tile::H | Tile::C => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Tile::S1 => "S_1",
            Tile::S2 => "S_2",
            Tile::V => "V",
            Tile::H => "H",
            Tile::C => "C",
        }
    }

    fn short(self) -> &'static str {
        match self {
            Tile::S1 => "S1",
            Tile::S2 => "S2",
            Tile::V => "V",
            Tile::H => "H",
            Tile::C => "C",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileSequence(pub Vec<Tile>);

impl TileSequence {
    pub fn tiles(&self) -> &[Tile] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.iter().map(|t| t.width()).sum()
    }

    /// The summand with blocks kept, e.g. `(f_3,C,A^±)`.
    pub fn summand(&self) -> Summand {
        Summand::new(
            self.0
                .iter()
                .flat_map(|t| match t {
                    Tile::S2 => vec![Piece::Block(Block::F3)],
                    Tile::S1 => vec![Piece::Factor(SlotFactor::F2pm)],
                    Tile::V => vec![Piece::Factor(SlotFactor::Apm)],
                    Tile::H => vec![Piece::Factor(SlotFactor::F2mp), Piece::Factor(SlotFactor::Amp)],
                    Tile::C => vec![Piece::Block(Block::C)],
                })
                .collect(),
        )
    }
}

/// Renders as `S2 C V H V`.
impl fmt::Display for TileSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|t| t.short()).collect();
        f.write_str(&names.join(" "))
    }
}

/// Number of domino tilings of the `2 x n` board, `F_n` with `F_0 = F_1 = 1`.
pub fn count_domino_tilings(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Tile sequences of length `b - 1` for the summands of `f_b`, `b >= 4`.
///
/// They are `S_2` followed by a body, or `S_1,H` followed by a body, where a
/// body is a row of `C` and `V,H` blocks with an optional final `V`. Output is
/// sorted.
pub fn enumerate_term_tilings(b: usize) -> Vec<TileSequence> {
    if b < 4 {
        return Vec::new();
    }
    let n = b - 1;
    let mut out = Vec::new();
    for start in [vec![Tile::S2], vec![Tile::S1, Tile::H]] {
        let used: usize = start.iter().map(|t| t.width()).sum();
        if used > n {
            continue;
        }
        for body in bodies(n - used) {
            if start == [Tile::S2] && body.is_empty() {
                continue;
            }
            out.push(TileSequence([start.clone(), body].concat()));
        }
    }
    out.sort();
    out
}

fn bodies(w: usize) -> Vec<Vec<Tile>> {
    let mut out = blocks(w);
    if w >= 1 {
        for mut b in blocks(w - 1) {
            b.push(Tile::V);
            out.push(b);
        }
    }
    out
}

/// Rows of `C` and `V,H` of total width `w`.
fn blocks(w: usize) -> Vec<Vec<Tile>> {
    if w == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if w >= 2 {
        for rest in blocks(w - 2) {
            out.push([&[Tile::C][..], &rest].concat());
        }
    }
    if w >= 3 {
        for rest in blocks(w - 3) {
            out.push([&[Tile::V, Tile::H][..], &rest].concat());
        }
    }
    out
}

/// The flat `f_b` summand a tile sequence stands for.
pub fn tiling_to_term(t: &TileSequence) -> Result<TermSum> {
    Expansion::new(vec![t.summand()]).flatten()
}

/// Tile sequences joined as `(S_2,V)+(S_1,H)`.
pub fn render_tilings(ts: &[TileSequence]) -> String {
    let parts: Vec<String> = ts
        .iter()
        .map(|t| {
            let names: Vec<&str> = t.0.iter().map(|x| x.symbol()).collect();
            alloc::format!("({})", names.join(","))
        })
        .collect();
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// Tilings by brute force: fill the leftmost column with one vertical
    /// domino or a pair of horizontal ones.
    fn brute(n: usize) -> u64 {
        match n {
            0 | 1 => 1,
            _ => brute(n - 1) + brute(n - 2),
        }
    }

    #[test]
    fn fibonacci_counts() {
        assert_eq!(count_domino_tilings(0), 1);
        assert_eq!(count_domino_tilings(2), 2);
        assert_eq!(count_domino_tilings(10), 89);
        for n in 0..20 {
            assert_eq!(count_domino_tilings(n), brute(n));
        }
    }

    #[test]
    fn small_boards() {
        let t4: Vec<String> = enumerate_term_tilings(4).iter().map(|t| t.to_string()).collect();
        assert_eq!(t4, ["S1 H", "S2 V"]);
        let t7 = enumerate_term_tilings(7);
        assert_eq!(t7.len(), 4);
        for s in ["S2 C C", "S2 V H V", "S1 H C V", "S1 H V H"] {
            assert!(t7.iter().any(|t| t.to_string() == s), "{s}");
        }
        for b in 4..14 {
            assert!(enumerate_term_tilings(b).iter().all(|t| t.width() == b - 1));
        }
    }

    #[test]
    fn tile_terms() {
        let t = TileSequence(vec![Tile::S2, Tile::V]);
        assert_eq!(Expansion::new(vec![t.summand()]).to_string(), "(f_3,A^±)");
        let t = TileSequence(vec![Tile::S1, Tile::H]);
        assert_eq!(tiling_to_term(&t).unwrap().to_string(), "(f_2^±,f_2^∓,A^∓)");
    }
}
