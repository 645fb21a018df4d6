//! Compressed expansions of the bracket for the billiard families.
//!
//! * `f_b`, the bracket of `T(3,b)`, grows by rewriting the last piece of
//!   every summand.
//! * `h_b`, the bracket of `T(5,b)`, is a sum over skeletons: a leading
//!   prefix chosen by `i`, then a composition of `b-1-i` filled with `P`
//!   blocks.
//! * `b_n` and `bt_n` are the brackets of the two- and one-bumper tables.
//!
//! A `P` block of size `k` is `P'_k` when an odd number of slot pairs precede
//! it in the tuple and `P̃'_k` otherwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{BilliardDiagram, TableSpec};
use crate::error::{Error, Result};
use crate::sign::SignSequence;
use crate::terms::{Block, Expansion, Piece, SlotFactor, Summand, TermSum};
use crate::tiling::Tile;

use SlotFactor::{Amp, Apm, F2mp, F2pm, Skip};

/// All ordered compositions of `n`, first part descending, then the rest
/// recursively in the same order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n).rev() {
        for rest in compositions(n - first) {
            let mut c = Vec::with_capacity(rest.len() + 1);
            c.push(first);
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// One step of the `f_b` rewriting: a single tile sequence, or the pair
/// `prefix,C,V` and `prefix,V,H` born from one summand that ended in `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
enum FItem {
    Single(Vec<Tile>),
    Split(Vec<Tile>),
}

impl FItem {
    fn sequences(&self) -> Vec<Vec<Tile>> {
        match self {
            FItem::Single(s) => vec![s.clone()],
            FItem::Split(prefix) => {
                let with = |tail: &[Tile]| [prefix.as_slice(), tail].concat();
                vec![with(&[Tile::C, Tile::V]), with(&[Tile::V, Tile::H])]
            }
        }
    }
}

fn f_items(b: usize) -> Vec<FItem> {
    let mut items = vec![
        FItem::Single(vec![Tile::S2, Tile::V]),
        FItem::Single(vec![Tile::S1, Tile::H]),
    ];
    for _ in 4..b {
        let mut next = Vec::new();
        for seq in items.iter().flat_map(FItem::sequences) {
            let (last, init) = seq.split_last().expect("non-empty summand");
            next.push(match last {
                Tile::V => FItem::Single([init, &[Tile::C]].concat()),
                Tile::H => FItem::Single([seq.as_slice(), &[Tile::V]].concat()),
                Tile::C => FItem::Split(init.to_vec()),
                Tile::S1 | Tile::S2 => unreachable!("start tiles only lead"),
            });
        }
        items = next;
    }
    items
}

/// The summands of `f_b` for `b >= 4` as tile sequences, in rewriting order
/// with split pairs listed separately.
pub fn f_summands(b: usize) -> Vec<Vec<Tile>> {
    if b < 4 {
        return Vec::new();
    }
    f_items(b).iter().flat_map(FItem::sequences).collect()
}

fn tile_pieces(tiles: &[Tile]) -> Vec<Piece> {
    tiles
        .iter()
        .flat_map(|t| match t {
            Tile::S2 => vec![Piece::Block(Block::F3)],
            Tile::S1 => vec![Piece::Factor(F2pm)],
            Tile::V => vec![Piece::Factor(Apm)],
            Tile::H => vec![Piece::Factor(F2mp), Piece::Factor(Amp)],
            Tile::C => vec![Piece::Block(Block::C)],
        })
        .collect()
}

/// `f_b` with split pairs kept as bracketed groups, as in
/// `(f_3,C,[C,A^±]+[A^±,f_2^∓,A^∓])`.
pub fn f_expansion(b: usize) -> Result<Expansion> {
    Ok(match b {
        0 => return Err(Error::ZeroWidth),
        1 => Expansion::single(Vec::new()),
        2 => Expansion::single(vec![Piece::Factor(F2pm)]),
        3 => Block::F3.expansion()?,
        _ => Expansion::new(
            f_items(b)
                .iter()
                .map(|item| match item {
                    FItem::Single(s) => Summand::new(tile_pieces(s)),
                    FItem::Split(prefix) => {
                        let mut pieces = tile_pieces(prefix);
                        pieces.push(Piece::Group(Expansion::new(vec![
                            Summand::new(tile_pieces(&[Tile::C, Tile::V])),
                            Summand::new(tile_pieces(&[Tile::V, Tile::H])),
                        ])));
                        Summand::new(pieces)
                    }
                })
                .collect(),
        ),
    })
}

/// `f_b` in tile notation, `(S_2,C,[C,V]+[V,H])+...`.
pub fn render_f_tiles(b: usize) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::new();
    let seq = |s: &mut alloc::string::String, tiles: &[Tile]| {
        let names: Vec<&str> = tiles.iter().map(|t| t.symbol()).collect();
        s.push_str(&names.join(","));
    };
    for (i, item) in f_items(b).iter().enumerate() {
        if i > 0 {
            s.push('+');
        }
        s.push('(');
        match item {
            FItem::Single(t) => seq(&mut s, t),
            FItem::Split(prefix) => {
                seq(&mut s, prefix);
                let _ = write!(s, ",[C,V]+[V,H]");
            }
        }
        s.push(')');
    }
    s
}

/// Flat `f_b`, width `b - 1`.
pub fn f_terms(b: usize) -> Result<TermSum> {
    f_expansion(b)?.flatten()
}

/// Number of summands of `f_b` once split pairs are separated. Counts
/// `(x, y, z)` summands ending in `A^±`, `[f_2^∓,A^∓]` and `C`; for `b < 4`
/// this is the number of summands of the base cases.
pub fn count_f_terms(b: usize) -> u64 {
    match b {
        0 => 0,
        1 | 2 => 1,
        3 => 2,
        _ => {
            let (mut x, mut y, mut z) = (1u64, 1u64, 0u64);
            for _ in 4..b {
                (x, y, z) = (y + z, z, x);
            }
            x + y + z
        }
    }
}

/// One summand pattern of the `h_b` sum: prefix index `i` and the composition
/// of `b - 1 - i` filled with `P` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSkeleton {
    pub i: usize,
    pub composition: Vec<usize>,
}

impl HSkeleton {
    /// The `P` blocks of the tail, resolved to `P'` or `P̃'`.
    pub fn tail_blocks(&self) -> Vec<Block> {
        let mut before = self.i;
        self.composition
            .iter()
            .map(|&k| {
                let b = p_block(k, before);
                before += k;
                b
            })
            .collect()
    }

    pub fn width(&self) -> usize {
        2 * (self.i + self.composition.iter().sum::<usize>())
    }

    /// `(prefix, tail)`, where the prefix is the sum of the `h_3`, `h_2` and
    /// `Q_i` openings.
    pub fn expansion(&self) -> Expansion {
        let tail: Vec<Piece> = self.tail_blocks().into_iter().map(Piece::Block).collect();
        Expansion::single(vec![Piece::Group(h_prefix(self.i)), Piece::Group(Expansion::single(tail))])
    }
}

fn p_block(k: usize, pairs_before: usize) -> Block {
    if pairs_before % 2 == 1 {
        Block::PPrime(k)
    } else {
        Block::PTildePrime(k)
    }
}

/// `[h_3,P_{i-2}]+[h_2,P_{i-1}]+[Q_i]`, with `Q_i` written out.
fn h_prefix(i: usize) -> Expansion {
    let mut summands = vec![
        Summand::new(vec![Piece::Block(Block::H(3)), Piece::Block(p_block(i - 2, 2))]),
        Summand::new(vec![Piece::Block(Block::H(2)), Piece::Block(p_block(i - 1, 1))]),
    ];
    summands.extend(Block::Q(i).expansion().expect("i >= 3").summands);
    Expansion::new(summands)
}

/// Skeletons of `h_b` for `b >= 4`, ordered by `i` then composition.
pub fn h_skeletons(b: usize) -> Vec<HSkeleton> {
    (3..b)
        .flat_map(|i| {
            compositions(b - 1 - i)
                .into_iter()
                .map(move |composition| HSkeleton { i, composition })
        })
        .collect()
}

pub fn count_h_skeletons(b: usize) -> usize {
    h_skeletons(b).len()
}

/// `h_b` grouped by prefix index, as in
/// `([h_3,P_1]+[h_2,P_2]+[M,L]+[S,A^∓,A^±],P_1)+...`. The last prefix, which
/// has no tail, is written out summand by summand.
pub fn h_expansion(b: usize) -> Result<Expansion> {
    if b < 4 {
        return Block::H(b).expansion();
    }
    let mut summands = Vec::new();
    for i in 3..b {
        let prefix = h_prefix(i);
        let tails: Vec<Summand> = compositions(b - 1 - i)
            .into_iter()
            .map(|composition| {
                let sk = HSkeleton { i, composition };
                Summand::new(sk.tail_blocks().into_iter().map(Piece::Block).collect())
            })
            .collect();
        if i == b - 1 {
            summands.extend(prefix.summands);
        } else {
            summands.push(Summand::new(vec![Piece::Group(prefix), Piece::Group(Expansion::new(tails))]));
        }
    }
    Ok(Expansion::new(summands))
}

/// Flat `h_b`, width `2(b - 1)`.
pub fn h_terms(b: usize) -> Result<TermSum> {
    Block::H(b).expand()
}

fn h(k: usize) -> Piece {
    Piece::Block(Block::H(k))
}

fn with_power(mut pieces: Vec<Piece>, block: Block, j: usize, tail: &[Piece]) -> Summand {
    pieces.extend(core::iter::repeat_n(Piece::Block(block), j));
    pieces.extend_from_slice(tail);
    Summand::new(pieces)
}

/// The bracket of the two-bumper table `B2(5,n)`. Even `n` carry a skipped
/// slot second to last.
pub fn b_expansion(n: usize) -> Result<Expansion> {
    let (f, blk) = (Piece::Factor, Piece::Block);
    Ok(match n {
        0 => return Err(Error::ZeroWidth),
        1 => Expansion::single(Vec::new()),
        2 => Expansion::single(vec![f(Skip), f(F2pm)]),
        3 => Expansion::new(vec![Summand::new(vec![h(2), f(Apm)]), Summand::new(vec![blk(Block::M)])]),
        _ if n % 2 == 1 => {
            let mut s = Vec::new();
            for i in 0..=(n - 3) / 2 {
                s.push(with_power(vec![h(n - 1 - 2 * i), f(Apm)], Block::K, i, &[]));
                if n >= 5 && i <= (n - 5) / 2 {
                    s.push(with_power(vec![h(n - 2 - 2 * i), blk(Block::L)], Block::K, i, &[]));
                }
            }
            s.push(with_power(vec![blk(Block::M)], Block::K, (n - 3) / 2, &[]));
            Expansion::new(s)
        }
        _ => {
            let end = [f(F2mp), f(Skip), f(Amp)];
            let mut s = vec![Summand::new(vec![h(n - 1), f(Skip), f(Apm)])];
            for i in 0..=(n - 4) / 2 {
                s.push(with_power(vec![h(n - 2 - 2 * i), f(Apm)], Block::K, i, &end));
                if n >= 6 && i <= (n - 6) / 2 {
                    s.push(with_power(vec![h(n - 3 - 2 * i), blk(Block::L)], Block::K, i, &end));
                }
            }
            s.push(with_power(vec![blk(Block::M)], Block::K, (n - 4) / 2, &end));
            Expansion::new(s)
        }
    })
}

/// The bracket of the one-bumper table `B1(5,n)`.
pub fn bt_expansion(n: usize) -> Result<Expansion> {
    let blk = Piece::Block;
    Ok(match n {
        0 => return Err(Error::ZeroWidth),
        1 => Expansion::single(Vec::new()),
        2 => Expansion::single(vec![blk(Block::G2)]),
        _ => {
            let odd = n % 2 == 1;
            let (rep, r) = if odd { (Block::NTilde, Block::RTilde) } else { (Block::N, Block::R) };
            let (x_last, r_last) = if odd { ((n - 3) / 2, (n as isize - 5) / 2) } else { ((n - 4) / 2, (n as isize - 4) / 2) };
            let mut s = Vec::new();
            for i in 0..=x_last {
                s.push(with_power(vec![h(n - 1 - 2 * i), blk(Block::X)], rep, i, &[]));
                if i as isize <= r_last {
                    s.push(with_power(vec![h(n - 2 - 2 * i), blk(r)], rep, i, &[]));
                }
            }
            s.push(if odd {
                with_power(vec![blk(Block::S)], rep, (n - 3) / 2, &[])
            } else {
                with_power(vec![blk(Block::G2)], rep, (n - 2) / 2, &[])
            });
            Expansion::new(s)
        }
    })
}

pub fn b_terms(n: usize) -> Result<TermSum> {
    b_expansion(n)?.flatten()
}

pub fn bt_terms(n: usize) -> Result<TermSum> {
    bt_expansion(n)?.flatten()
}

/// Writhe contributions, for sign `+`, of the crossings added when `T(3,b)`
/// grows to `T(3,b+3)`.
fn pattern3(b: u32) -> &'static str {
    match b % 3 {
        1 => "+-+",
        _ => "++-",
    }
}

/// The same for `T(5,b)` to `T(5,b+5)`, by residue and parity of `b`.
fn pattern5(b: u32) -> &'static str {
    match (b % 5, b.is_multiple_of(2)) {
        (1, true) => "++-+---+++",
        (1, false) => "+++---+-++",
        (2, true) => "+++--+++--",
        (2, false) => "++-++-++--",
        (3, true) => "++--+++--+",
        (3, false) => "++--++-++-",
        (4, true) => "+++++---+-",
        _ => "++++-+---+",
    }
}

/// Writhe of `T(a,b)` at `signs`, for `a` in `{3,5}` and `b` prime to `a`:
/// the writhe of the smallest table in the residue class, computed from the
/// diagram, plus one signed pattern per added block of `a` columns.
pub fn writhe_recursive(a: u32, b: u32, signs: &SignSequence) -> Result<i32> {
    let pattern: fn(u32) -> &'static str = match a {
        3 => pattern3,
        5 => pattern5,
        _ => return Err(Error::UnsupportedResidue { a, b }),
    };
    if b == 0 || b.is_multiple_of(a) {
        return Err(Error::UnsupportedResidue { a, b });
    }
    let per_block = ((a - 1) * a / 2) as usize;
    let base_b = b % a;
    let base = BilliardDiagram::build(TableSpec::rect(a, base_b))?;
    let expected = ((a - 1) * (b - 1) / 2) as usize;
    if signs.len() != expected {
        return Err(Error::SignLengthMismatch {
            expected,
            got: signs.len(),
        });
    }
    let slots = signs.slots();
    let k0 = base.crossing_count();
    let mut w = base
        .assign_signs(SignSequence::new(slots[..k0].to_vec()))?
        .writhe_direct();
    let mut at = k0;
    let mut cur = base_b;
    while cur < b {
        for (ch, s) in pattern(cur).chars().zip(&slots[at..at + per_block]) {
            let eps = if ch == '+' { 1 } else { -1 };
            let s = s.ok_or(Error::MissingSign(at))?;
            w += eps * s.value();
        }
        at += per_block;
        cur += a;
    }
    Ok(w)
}
