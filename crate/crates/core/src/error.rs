use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported table height a={0}, expected 3, 4 or 5")]
    UnsupportedHeight(u32),
    #[error("table width b must be at least 1")]
    ZeroWidth,
    #[error("bumpered tables need a=5 and one or two removed squares")]
    UnsupportedBumpers,
    #[error("a crossing would sit on the interior corner ({x}, {y}); remove the squares from the other side")]
    InteriorCornerCrossing { x: u32, y: u32 },
    #[error("the open strands cannot be closed without an extra crossing")]
    NonPlanarClosure,
    #[error("sign sequence has {got} positions but the diagram has {expected} slots")]
    SignLengthMismatch { expected: usize, got: usize },
    #[error("slot {0} has no crossing and cannot carry a sign")]
    SignOnSkippedSlot(usize),
    #[error("slot {0} is a crossing and needs a sign")]
    MissingSign(usize),
    #[error("invalid sign character {0:?}, expected '+', '-' or '_'")]
    InvalidSignChar(char),
    #[error("{crossings} crossings exceed the configured limit of {limit}")]
    CrossingLimit { crossings: usize, limit: usize },
    #[error("empty polynomial")]
    EmptyPolynomial,
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("term sum has width {width} but {got} signs were given")]
    WidthMismatch { width: usize, got: usize },
    #[error("skip factor at slot {0} covers a real crossing")]
    SkipOverCrossing(usize),
    #[error("factor at slot {0} needs a sign but the slot is skipped")]
    FactorOnSkippedSlot(usize),
    #[error("terms of a sum disagree on their width")]
    InconsistentWidth,
    #[error("invalid index {index} for block {block}")]
    InvalidBlockIndex { block: &'static str, index: usize },
    #[error("no writhe recursion for a={a}, b={b}")]
    UnsupportedResidue { a: u32, b: u32 },
}
