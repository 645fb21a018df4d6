//! The tuple notation made executable.
//!
//! A [`TermSum`] is the flat form: every summand is a scalar times one factor
//! per crossing slot. An [`Expansion`] keeps the nesting of named blocks and
//! bracketed groups, renders the way the expansions are usually written, and
//! evaluates block by block.
//!
//! Every factor reads a crossing sign `s = ±1`: `A^±` is `A^s`, `A^∓` is
//! `A^-s`, `f_2^±` is `-A^{-3s}` and `f_2^∓` is `-A^{3s}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::laurent::{delta_power, LaurentPoly};
use crate::recursions;
use crate::sign::{Sign, SignSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotFactor {
    /// `A^±`
    Apm,
    /// `A^∓`
    Amp,
    /// `f_2^±`
    F2pm,
    /// `f_2^∓`
    F2mp,
    /// `_`, a slot without a crossing.
    Skip,
}

impl SlotFactor {
    /// `(coefficient, exponent)` of the monomial this factor takes at `s`.
    fn monomial(self, s: Sign) -> (i64, i32) {
        let s = s.value();
        match self {
            SlotFactor::Apm => (1, s),
            SlotFactor::Amp => (1, -s),
            SlotFactor::F2pm => (-1, -3 * s),
            SlotFactor::F2mp => (-1, 3 * s),
            SlotFactor::Skip => (1, 0),
        }
    }

    pub fn eval(self, slot: usize, s: Option<Sign>) -> Result<LaurentPoly> {
        let (c, e) = self.checked_monomial(slot, s)?;
        Ok(LaurentPoly::monomial(c, e))
    }

    fn checked_monomial(self, slot: usize, s: Option<Sign>) -> Result<(i64, i32)> {
        match (self, s) {
            (SlotFactor::Skip, None) => Ok((1, 0)),
            (SlotFactor::Skip, Some(_)) => Err(Error::SkipOverCrossing(slot)),
            (_, None) => Err(Error::FactorOnSkippedSlot(slot)),
            (f, Some(s)) => Ok(f.monomial(s)),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SlotFactor::Apm => "A^±",
            SlotFactor::Amp => "A^∓",
            SlotFactor::F2pm => "f_2^±",
            SlotFactor::F2mp => "f_2^∓",
            SlotFactor::Skip => "_",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotTerm {
    pub scalar: LaurentPoly,
    pub factors: Vec<SlotFactor>,
}

impl SlotTerm {
    pub fn new(scalar: LaurentPoly, factors: Vec<SlotFactor>) -> Self {
        Self { scalar, factors }
    }

    pub fn width(&self) -> usize {
        self.factors.len()
    }

    /// The product of the factors at `signs`, without the scalar.
    fn monomial(&self, signs: &[Option<Sign>]) -> Result<(i64, i32)> {
        let mut coeff = 1i64;
        let mut exp = 0i32;
        for (i, (f, s)) in self.factors.iter().zip(signs).enumerate() {
            let (c, e) = f.checked_monomial(i, *s)?;
            coeff *= c;
            exp += e;
        }
        Ok((coeff, exp))
    }
}

/// A sum of slot terms of one common width.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermSum {
    width: usize,
    terms: Vec<SlotTerm>,
}

impl TermSum {
    pub fn new(width: usize, terms: Vec<SlotTerm>) -> Result<Self> {
        if terms.iter().any(|t| t.width() != width) {
            return Err(Error::InconsistentWidth);
        }
        Ok(Self { width, terms })
    }

    /// The single empty tuple with scalar 1, the unit of [`concat`](Self::concat).
    pub fn unit() -> Self {
        Self {
            width: 0,
            terms: vec![SlotTerm::new(LaurentPoly::one(), Vec::new())],
        }
    }

    pub fn factor(f: SlotFactor) -> Self {
        Self::from_factors(&[f])
    }

    pub fn from_factors(factors: &[SlotFactor]) -> Self {
        Self {
            width: factors.len(),
            terms: vec![SlotTerm::new(LaurentPoly::one(), factors.to_vec())],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn terms(&self) -> &[SlotTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The width shared by every term; an error if the terms disagree.
    pub fn slot_width(&self) -> Result<usize> {
        if self.terms.iter().all(|t| t.width() == self.width) {
            Ok(self.width)
        } else {
            Err(Error::InconsistentWidth)
        }
    }

    /// Every term of `self` followed by every term of `suffix`.
    pub fn concat(&self, suffix: &TermSum) -> Result<TermSum> {
        let mut terms = Vec::with_capacity(self.terms.len() * suffix.terms.len());
        for p in &self.terms {
            for s in &suffix.terms {
                let mut factors = Vec::with_capacity(self.width + suffix.width);
                factors.extend_from_slice(&p.factors);
                factors.extend_from_slice(&s.factors);
                let scalar = if p.scalar.is_one() {
                    s.scalar.clone()
                } else {
                    p.scalar.checked_mul(&s.scalar)?
                };
                terms.push(SlotTerm::new(scalar, factors));
            }
        }
        Ok(TermSum {
            width: self.width + suffix.width,
            terms,
        })
    }

    /// Sum of two term sums of the same width.
    pub fn plus(mut self, other: TermSum) -> Result<TermSum> {
        if self.width != other.width {
            return Err(Error::InconsistentWidth);
        }
        self.terms.extend(other.terms);
        Ok(self)
    }

    pub fn scaled(mut self, scalar: &LaurentPoly) -> Result<TermSum> {
        for t in &mut self.terms {
            t.scalar = t.scalar.checked_mul(scalar)?;
        }
        Ok(self)
    }

    /// Terms sorted with equal factor lists merged and zero scalars dropped.
    pub fn canonical(&self) -> TermSum {
        let mut merged: BTreeMap<&[SlotFactor], LaurentPoly> = BTreeMap::new();
        for t in &self.terms {
            *merged.entry(&t.factors).or_default() += &t.scalar;
        }
        TermSum {
            width: self.width,
            terms: merged
                .into_iter()
                .filter(|(_, s)| !s.is_zero())
                .map(|(f, s)| SlotTerm::new(s, f.to_vec()))
                .collect(),
        }
    }

    pub fn eval(&self, signs: &SignSequence) -> Result<LaurentPoly> {
        self.eval_slots(signs.slots())
    }

    pub fn eval_slots(&self, signs: &[Option<Sign>]) -> Result<LaurentPoly> {
        if signs.len() != self.width {
            return Err(Error::WidthMismatch {
                width: self.width,
                got: signs.len(),
            });
        }
        // Terms sharing a scalar are accumulated before one multiplication.
        let mut groups: Vec<(&LaurentPoly, BTreeMap<i32, i64>)> = Vec::new();
        for t in &self.terms {
            let (c, e) = t.monomial(signs)?;
            let idx = match groups.iter().position(|(s, _)| *s == &t.scalar) {
                Some(i) => i,
                None => {
                    groups.push((&t.scalar, BTreeMap::new()));
                    groups.len() - 1
                }
            };
            let acc = groups[idx].1.entry(e).or_insert(0);
            *acc = acc.checked_add(c).ok_or(Error::Overflow)?;
        }
        let mut total = LaurentPoly::zero();
        for (scalar, acc) in groups {
            let p = LaurentPoly::from_terms(acc);
            total = total.checked_add(&scalar.checked_mul(&p)?)?;
        }
        Ok(total)
    }
}

/// The sum of several term sums of one width.
pub fn sum_of(parts: Vec<TermSum>) -> Result<TermSum> {
    let mut it = parts.into_iter();
    let first = it.next().ok_or(Error::InconsistentWidth)?;
    it.try_fold(first, TermSum::plus)
}

impl fmt::Display for TermSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write_scalar(f, &t.scalar)?;
            f.write_str("(")?;
            for (j, x) in t.factors.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                f.write_str(x.symbol())?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn write_scalar(f: &mut fmt::Formatter<'_>, s: &LaurentPoly) -> fmt::Result {
    if s.is_one() {
        return Ok(());
    }
    if -s == LaurentPoly::one() {
        return f.write_str("-");
    }
    let top = s.max_exponent().unwrap_or(0);
    if top > 0 && top % 2 == 0 && *s == delta_power(top as u32 / 2) {
        return match top / 2 {
            1 => f.write_str("δ"),
            k => write!(f, "δ^{k}"),
        };
    }
    write!(f, "[{s}]")
}

/// Named blocks of the expansions. `H(k)` is the bracket `h_k` of `T(5,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    C,
    X,
    K,
    L,
    M,
    N,
    NTilde,
    R,
    RTilde,
    S,
    G2,
    F3,
    H(usize),
    /// `P'_i`
    PPrime(usize),
    /// `P̃'_i`
    PTildePrime(usize),
    Q(usize),
}

use SlotFactor::{Amp, Apm, F2mp, F2pm};

impl Block {
    pub fn name(&self) -> String {
        let mut s = String::new();
        let _ = match self {
            Block::C => write!(s, "C"),
            Block::X => write!(s, "X"),
            Block::K => write!(s, "K"),
            Block::L => write!(s, "L"),
            Block::M => write!(s, "M"),
            Block::N => write!(s, "N"),
            Block::NTilde => write!(s, "Ñ"),
            Block::R => write!(s, "R"),
            Block::RTilde => write!(s, "R̃"),
            Block::S => write!(s, "S"),
            Block::G2 => write!(s, "g_2"),
            Block::F3 => write!(s, "f_3"),
            Block::H(k) => write!(s, "h_{k}"),
            // The two P families agree at i = 1.
            Block::PPrime(i) | Block::PTildePrime(i @ 1) => write!(s, "P_{i}"),
            Block::PTildePrime(i) => write!(s, "P̃_{i}"),
            Block::Q(i) => write!(s, "Q_{i}"),
        };
        s
    }

    /// Looks a block up by its written name: `C`, `X`, ..., `Nt`/`Ñ`,
    /// `Rt`/`R̃`, `g2`, `f3`, and the indexed `h`, `P'`, `Pt'`, `Q`.
    pub fn from_name(name: &str, index: Option<usize>) -> Option<Block> {
        let i = index.unwrap_or(0);
        Some(match name {
            "C" => Block::C,
            "X" => Block::X,
            "K" => Block::K,
            "L" => Block::L,
            "M" => Block::M,
            "N" => Block::N,
            "Nt" | "Ñ" => Block::NTilde,
            "R" => Block::R,
            "Rt" | "R̃" => Block::RTilde,
            "S" => Block::S,
            "g2" => Block::G2,
            "f3" => Block::F3,
            "h" => Block::H(i),
            "h2" => Block::H(2),
            "h3" => Block::H(3),
            "P'" | "P" => Block::PPrime(i),
            "Pt'" | "Pt" | "P̃'" => Block::PTildePrime(i),
            "Q" => Block::Q(i),
            _ => return None,
        })
    }

    fn check(&self) -> Result<()> {
        let bad = |block: &'static str, index: usize| Err(Error::InvalidBlockIndex { block, index });
        match *self {
            Block::H(0) => bad("h", 0),
            Block::PPrime(0) => bad("P'", 0),
            Block::PTildePrime(0) => bad("P̃'", 0),
            Block::Q(i) if i < 3 => bad("Q", i),
            _ => Ok(()),
        }
    }

    /// Slot count of the block.
    pub fn width(&self) -> Result<usize> {
        self.check()?;
        Ok(match *self {
            Block::C | Block::X | Block::G2 | Block::F3 => 2,
            Block::L | Block::M => 3,
            Block::K | Block::N | Block::NTilde | Block::R | Block::RTilde | Block::S => 4,
            Block::H(k) => 2 * (k - 1),
            Block::PPrime(i) | Block::PTildePrime(i) | Block::Q(i) => 2 * i,
        })
    }

    /// The defining expression, one level deep.
    pub fn expansion(&self) -> Result<Expansion> {
        self.check()?;
        let f = Piece::Factor;
        let b = Piece::Block;
        let one = |pieces: Vec<Piece>| Summand::new(pieces);
        let single = |factors: &[SlotFactor]| Expansion::single(factors.iter().map(|&x| f(x)).collect());
        let delta = LaurentPoly::delta();
        Ok(match *self {
            Block::C => Expansion::new(vec![one(vec![f(Apm), f(Apm)]), one(vec![f(F2mp), f(Amp)])]),
            Block::X => Expansion::new(vec![
                Summand::scaled(delta, vec![f(Apm), f(Apm)]),
                one(vec![f(Apm), f(Amp)]),
                one(vec![f(Amp), f(Apm)]),
            ]),
            Block::G2 => Expansion::new(vec![one(vec![b(Block::X)]), Summand::scaled(delta, vec![f(Amp), f(Amp)])]),
            Block::F3 => Expansion::new(vec![one(vec![f(F2pm), f(Apm)]), one(vec![f(F2mp), f(Amp)])]),
            Block::K => single(&[F2mp, F2mp, Amp, Amp]),
            Block::L => single(&[F2mp, Apm, Amp]),
            Block::M => single(&[F2mp, F2pm, Amp]),
            Block::N => single(&[F2mp, Amp, Amp, Amp]),
            Block::NTilde => single(&[Amp, F2mp, Amp, Amp]),
            Block::R => single(&[F2mp, Apm, Amp, Amp]),
            Block::RTilde => single(&[Apm, F2mp, Amp, Amp]),
            Block::S => single(&[F2pm, F2mp, Amp, Amp]),
            Block::H(1) => Expansion::single(Vec::new()),
            Block::H(2) => Expansion::new(vec![
                one(vec![f(Apm), f(Apm)]),
                Summand::scaled(delta.clone(), vec![f(Apm), f(Amp)]),
                Summand::scaled(delta.clone(), vec![f(Amp), f(Apm)]),
                Summand::scaled(delta_power(2), vec![f(Amp), f(Amp)]),
            ]),
            Block::H(3) => Expansion::new(vec![
                one(vec![b(Block::H(2)), f(Apm), f(Apm)]),
                one(vec![f(F2mp), f(F2mp), f(Amp), f(Amp)]),
                one(vec![b(Block::G2), f(Apm), f(Amp)]),
                one(vec![f(F2mp), f(F2pm), f(Amp), f(Apm)]),
            ]),
            Block::H(k) => recursions::h_expansion(k)?,
            Block::PPrime(i) => p_prime(i),
            Block::PTildePrime(i) => p_tilde_prime(i),
            Block::Q(i) => q_block(i),
        })
    }

    /// Fully distributed flat form.
    pub fn expand(&self) -> Result<TermSum> {
        self.expansion()?.flatten()
    }
}

/// `[p, q^j, ...]`: `p`, then `j` copies of `q`, then `rest`.
fn run(head: Vec<Piece>, rep: Block, j: usize, tail: Vec<Piece>) -> Summand {
    let mut pieces = head;
    pieces.extend(core::iter::repeat_n(Piece::Block(rep), j));
    pieces.extend(tail);
    Summand::new(pieces)
}

fn p_prime(i: usize) -> Expansion {
    let (f, b) = (Piece::Factor, Piece::Block);
    match i {
        1 => Expansion::single(vec![f(Apm), f(Apm)]),
        2 => Expansion::new(vec![
            Summand::new(vec![b(Block::K)]),
            Summand::new(vec![f(Apm), b(Block::L)]),
            Summand::new(vec![b(Block::X), f(Amp), f(Apm)]),
        ]),
        _ if i % 2 == 1 => {
            let j = (i - 3) / 2;
            Expansion::new(vec![
                run(vec![b(Block::R)], Block::N, j, vec![f(Apm), f(Amp)]),
                run(vec![f(Apm)], Block::K, j + 1, vec![f(Apm)]),
            ])
        }
        _ => {
            let j = (i - 2) / 2;
            Expansion::new(vec![
                run(vec![b(Block::X)], Block::NTilde, j, vec![f(Amp), f(Apm)]),
                run(vec![f(Apm)], Block::K, j, vec![b(Block::L)]),
            ])
        }
    }
}

fn p_tilde_prime(i: usize) -> Expansion {
    let (f, b) = (Piece::Factor, Piece::Block);
    match i {
        1 => Expansion::single(vec![f(Apm), f(Apm)]),
        2 => Expansion::new(vec![
            Summand::new(vec![b(Block::X), f(Apm), f(Amp)]),
            Summand::new(vec![b(Block::L), f(Apm)]),
            Summand::new(vec![b(Block::K)]),
        ]),
        _ if i % 2 == 1 => {
            let j = (i - 3) / 2;
            Expansion::new(vec![
                run(vec![b(Block::L)], Block::K, j, vec![b(Block::L)]),
                run(vec![b(Block::RTilde)], Block::NTilde, j, vec![f(Amp), f(Apm)]),
            ])
        }
        _ => {
            let j = (i - 2) / 2;
            Expansion::new(vec![
                run(vec![b(Block::L)], Block::K, j, vec![f(Apm)]),
                run(vec![b(Block::X)], Block::N, j, vec![f(Apm), f(Amp)]),
            ])
        }
    }
}

fn q_block(i: usize) -> Expansion {
    let (f, b) = (Piece::Factor, Piece::Block);
    if i % 2 == 1 {
        let j = (i - 3) / 2;
        Expansion::new(vec![
            run(vec![b(Block::M)], Block::K, j, vec![b(Block::L)]),
            run(vec![b(Block::S)], Block::NTilde, j, vec![f(Amp), f(Apm)]),
        ])
    } else {
        let j = (i - 2) / 2;
        Expansion::new(vec![
            run(vec![b(Block::M)], Block::K, j, vec![f(Apm)]),
            run(vec![b(Block::G2)], Block::N, j, vec![f(Apm), f(Amp)]),
        ])
    }
}

/// Expands a named block. `index` is required for `h`, `P'`, `P̃'` and `Q`.
pub fn expand_block(block: Block) -> Result<TermSum> {
    block.expand()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Factor(SlotFactor),
    Block(Block),
    /// A bracketed sum occupying consecutive slots.
    Group(Expansion),
}

impl Piece {
    pub fn width(&self) -> Result<usize> {
        match self {
            Piece::Factor(_) => Ok(1),
            Piece::Block(b) => b.width(),
            Piece::Group(e) => e.width(),
        }
    }
}

/// One tuple: a scalar times the concatenation of its pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub scalar: LaurentPoly,
    pub pieces: Vec<Piece>,
}

impl Summand {
    pub fn new(pieces: Vec<Piece>) -> Self {
        Self {
            scalar: LaurentPoly::one(),
            pieces,
        }
    }

    pub fn scaled(scalar: LaurentPoly, pieces: Vec<Piece>) -> Self {
        Self { scalar, pieces }
    }

    pub fn width(&self) -> Result<usize> {
        self.pieces.iter().map(Piece::width).sum()
    }
}

/// A sum of tuples whose entries may be blocks or nested sums.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expansion {
    pub summands: Vec<Summand>,
}

impl Expansion {
    pub fn new(summands: Vec<Summand>) -> Self {
        Self { summands }
    }

    pub fn single(pieces: Vec<Piece>) -> Self {
        Self::new(vec![Summand::new(pieces)])
    }

    pub fn width(&self) -> Result<usize> {
        let mut widths = self.summands.iter().map(Summand::width);
        let w = widths.next().ok_or(Error::InconsistentWidth)??;
        for other in widths {
            if other? != w {
                return Err(Error::InconsistentWidth);
            }
        }
        Ok(w)
    }

    pub fn flatten(&self) -> Result<TermSum> {
        self.flatten_with(&mut BTreeMap::new())
    }

    fn flatten_with(&self, cache: &mut BTreeMap<Block, TermSum>) -> Result<TermSum> {
        let width = self.width()?;
        let mut out = TermSum::new(width, Vec::new())?;
        for s in &self.summands {
            let mut acc = TermSum::unit();
            for p in &s.pieces {
                let part = match p {
                    Piece::Factor(x) => TermSum::factor(*x),
                    Piece::Block(b) => flat_block(*b, cache)?,
                    Piece::Group(e) => e.flatten_with(cache)?,
                };
                acc = acc.concat(&part)?;
            }
            if !s.scalar.is_one() {
                acc = acc.scaled(&s.scalar)?;
            }
            out = out.plus(acc)?;
        }
        Ok(out)
    }

    /// Precomputes the flat form of every block used, for repeated evaluation.
    pub fn compile(&self) -> Result<CompiledExpansion> {
        let mut table = Vec::new();
        let mut index = BTreeMap::new();
        let mut cache = BTreeMap::new();
        let root = compile_node(self, &mut table, &mut index, &mut cache)?;
        let width = self.width()?;
        Ok(CompiledExpansion { root, table, width })
    }

    /// Evaluates without flattening; see [`CompiledExpansion`] for repeated use.
    pub fn eval(&self, signs: &SignSequence) -> Result<LaurentPoly> {
        self.compile()?.eval(signs)
    }
}

fn flat_block(b: Block, cache: &mut BTreeMap<Block, TermSum>) -> Result<TermSum> {
    if let Some(t) = cache.get(&b) {
        return Ok(t.clone());
    }
    let t = b.expansion()?.flatten_with(cache)?;
    cache.insert(b, t.clone());
    Ok(t)
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self, '(', ')')
    }
}

fn write_sum(f: &mut fmt::Formatter<'_>, e: &Expansion, open: char, close: char) -> fmt::Result {
    for (i, s) in e.summands.iter().enumerate() {
        if i > 0 {
            f.write_str("+")?;
        }
        write_scalar(f, &s.scalar)?;
        f.write_char(open)?;
        write_pieces(f, &s.pieces)?;
        f.write_char(close)?;
    }
    Ok(())
}

fn write_pieces(f: &mut fmt::Formatter<'_>, pieces: &[Piece]) -> fmt::Result {
    for (i, p) in pieces.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        match p {
            Piece::Factor(x) => f.write_str(x.symbol())?,
            Piece::Block(b) => f.write_str(&b.name())?,
            Piece::Group(e) => match e.summands.as_slice() {
                [only] if only.scalar.is_one() => write_pieces(f, &only.pieces)?,
                _ => write_sum(f, e, '[', ']')?,
            },
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
enum Node {
    Factor(SlotFactor),
    Block(usize),
    Sum(Vec<(LaurentPoly, Vec<(usize, Node)>)>),
}

fn compile_node(
    e: &Expansion,
    table: &mut Vec<TermSum>,
    index: &mut BTreeMap<Block, usize>,
    cache: &mut BTreeMap<Block, TermSum>,
) -> Result<Node> {
    let mut summands = Vec::new();
    for s in &e.summands {
        let mut offset = 0;
        let mut parts = Vec::new();
        for p in &s.pieces {
            let node = match p {
                Piece::Factor(x) => Node::Factor(*x),
                Piece::Block(b) => {
                    let id = match index.get(b) {
                        Some(&id) => id,
                        None => {
                            table.push(flat_block(*b, cache)?);
                            index.insert(*b, table.len() - 1);
                            table.len() - 1
                        }
                    };
                    Node::Block(id)
                }
                Piece::Group(g) => compile_node(g, table, index, cache)?,
            };
            parts.push((offset, node));
            offset += p.width()?;
        }
        summands.push((s.scalar.clone(), parts));
    }
    Ok(Node::Sum(summands))
}

/// An expansion with every block flattened once. Evaluation multiplies block
/// values instead of expanding the whole product, and reuses a block's value
/// wherever it recurs at the same slot offset.
#[derive(Debug, Clone)]
pub struct CompiledExpansion {
    root: Node,
    table: Vec<TermSum>,
    width: usize,
}

impl CompiledExpansion {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn eval(&self, signs: &SignSequence) -> Result<LaurentPoly> {
        let slots = signs.slots();
        if slots.len() != self.width {
            return Err(Error::WidthMismatch {
                width: self.width,
                got: slots.len(),
            });
        }
        let mut memo = BTreeMap::new();
        self.eval_node(&self.root, slots, 0, &mut memo)
    }

    fn eval_node(
        &self,
        node: &Node,
        slots: &[Option<Sign>],
        at: usize,
        memo: &mut BTreeMap<(usize, usize), LaurentPoly>,
    ) -> Result<LaurentPoly> {
        match node {
            Node::Factor(x) => x.eval(at, slots[at]),
            Node::Block(id) => {
                if let Some(v) = memo.get(&(*id, at)) {
                    return Ok(v.clone());
                }
                let t = &self.table[*id];
                let v = t.eval_slots(&slots[at..at + t.width()]).map_err(|e| shift(e, at))?;
                memo.insert((*id, at), v.clone());
                Ok(v)
            }
            Node::Sum(summands) => {
                let mut total = LaurentPoly::zero();
                for (scalar, parts) in summands {
                    let mut acc = scalar.clone();
                    for (off, part) in parts {
                        if acc.is_zero() {
                            break;
                        }
                        let v = self.eval_node(part, slots, at + off, memo)?;
                        acc = acc.checked_mul(&v)?;
                    }
                    total = total.checked_add(&acc)?;
                }
                Ok(total)
            }
        }
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::SkipOverCrossing(i) => Error::SkipOverCrossing(i + by),
        Error::FactorOnSkippedSlot(i) => Error::FactorOnSkippedSlot(i + by),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn signs(s: &str) -> SignSequence {
        s.parse().unwrap()
    }

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn factor_values() {
        let plus = Some(Sign::Plus);
        let minus = Some(Sign::Minus);
        assert_eq!(F2pm.eval(0, plus).unwrap(), p(&[(-3, -1)]));
        assert_eq!(F2pm.eval(0, minus).unwrap(), p(&[(3, -1)]));
        assert_eq!(F2mp.eval(0, plus).unwrap(), p(&[(3, -1)]));
        assert_eq!(Amp.eval(0, plus).unwrap(), p(&[(-1, 1)]));
        assert_eq!(SlotFactor::Skip.eval(3, plus), Err(Error::SkipOverCrossing(3)));
        assert_eq!(Apm.eval(2, None), Err(Error::FactorOnSkippedSlot(2)));
    }

    #[test]
    fn x_vanishes_on_unequal_signs() {
        let x = Block::X.expand().unwrap();
        assert_eq!(x.eval(&signs("+-")).unwrap(), LaurentPoly::zero());
        assert_eq!(x.eval(&signs("-+")).unwrap(), LaurentPoly::zero());
        assert_eq!(x.eval(&signs("++")).unwrap(), p(&[(0, 1), (4, -1)]));
        assert_eq!(x.eval(&signs("--")).unwrap(), p(&[(0, 1), (-4, -1)]));
    }

    #[test]
    fn small_block_values() {
        let h2 = Block::H(2).expand().unwrap();
        assert_eq!(h2.eval(&signs("+-")).unwrap(), LaurentPoly::one());
        assert_eq!(h2.eval(&signs("++")).unwrap(), p(&[(-6, 1)]));
        let f3 = Block::F3.expand().unwrap();
        assert_eq!(f3.eval(&signs("++")).unwrap(), LaurentPoly::delta());
        let g2 = Block::G2.expand().unwrap();
        assert_eq!(g2.eval(&signs("--")).unwrap(), p(&[(4, -1), (-4, -1)]));
        assert_eq!(g2.eval(&signs("+-")).unwrap(), LaurentPoly::delta());
    }

    #[test]
    fn block_widths() {
        assert_eq!(Block::H(3).expand().unwrap().slot_width(), Ok(4));
        for i in 1..=6 {
            for b in [Block::PPrime(i), Block::PTildePrime(i)] {
                assert_eq!(b.expand().unwrap().width(), 2 * i);
                assert_eq!(b.width().unwrap(), 2 * i);
            }
        }
        for i in 3..=8 {
            assert_eq!(Block::Q(i).expand().unwrap().width(), 2 * i);
        }
        assert_eq!(Block::Q(2).expand(), Err(Error::InvalidBlockIndex { block: "Q", index: 2 }));
        assert!(Block::PPrime(0).expand().is_err());
    }

    #[test]
    fn printed_blocks() {
        assert_eq!(Block::PPrime(1).expansion().unwrap().to_string(), "(A^±,A^±)");
        assert_eq!(Block::PPrime(1).expand().unwrap().len(), 1);
        assert_eq!(
            Block::PPrime(3).expansion().unwrap().to_string(),
            "(R,A^±,A^∓)+(A^±,K,A^±)"
        );
        assert_eq!(Block::PPrime(3).expand().unwrap().len(), 2);
        assert_eq!(Block::Q(3).expansion().unwrap().to_string(), "(M,L)+(S,A^∓,A^±)");
        assert_eq!(
            Block::H(2).expand().unwrap().to_string(),
            "(A^±,A^±)+δ(A^±,A^∓)+δ(A^∓,A^±)+δ^2(A^∓,A^∓)"
        );
    }

    #[test]
    fn concat_distributes() {
        let f3 = Block::F3.expand().unwrap();
        let c = Block::C.expand().unwrap();
        let joined = f3.concat(&c).unwrap();
        assert_eq!(joined.len(), 4);
        assert_eq!(joined.width(), 4);
        assert_eq!(TermSum::unit().concat(&c).unwrap(), c);
        let h2 = Block::H(2).expand().unwrap();
        let t = h2.concat(&TermSum::factor(Apm)).unwrap().concat(&TermSum::factor(Apm)).unwrap();
        assert_eq!((t.width(), t.len()), (4, 4));
    }

    #[test]
    fn width_mismatch() {
        let c = Block::C.expand().unwrap();
        assert_eq!(
            c.eval(&signs("+")),
            Err(Error::WidthMismatch { width: 2, got: 1 })
        );
        assert!(TermSum::new(2, vec![SlotTerm::new(LaurentPoly::one(), vec![Apm])]).is_err());
    }

    #[test]
    fn compiled_matches_flat() {
        let e = Block::PTildePrime(4).expansion().unwrap();
        let flat = e.flatten().unwrap();
        let compiled = e.compile().unwrap();
        for s in SignSequence::all(8) {
            assert_eq!(compiled.eval(&s).unwrap(), flat.eval(&s).unwrap());
        }
    }

    #[test]
    fn canonical_merges() {
        let t = TermSum::from_factors(&[Apm])
            .plus(TermSum::from_factors(&[Apm]))
            .unwrap()
            .plus(TermSum::from_factors(&[Amp]).scaled(&p(&[(0, -1)])).unwrap())
            .unwrap()
            .plus(TermSum::from_factors(&[Amp]))
            .unwrap();
        let c = t.canonical();
        assert_eq!(c.len(), 1);
        assert_eq!(c.terms()[0], SlotTerm::new(p(&[(0, 2)]), vec![Apm]));
    }
}
