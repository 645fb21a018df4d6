//! The two printed coefficient tables of alternating billiard knots and their
//! recomputation from the recursions.

use billiard_core::{BilliardDiagram, LaurentPoly, Sign};
use serde::Serialize;

use crate::family::Family;
use crate::Result;

#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub b: u32,
    pub knot: &'static str,
    /// The tuple as printed.
    pub printed: &'static str,
    /// The printed tuple as read, which differs only where the print has a
    /// typo.
    pub reading: &'static [i64],
}

/// `T(3,b)` with signs `+-+-...`, coefficients of `f_b`.
pub const TABLE_1: [TableRow; 7] = [
    TableRow { b: 2, knot: "U", printed: "(1,0)", reading: &[1, 0] },
    TableRow { b: 4, knot: "3_1", printed: "(1,-1,0,-1)", reading: &[1, -1, 0, -1] },
    TableRow { b: 5, knot: "4_1", printed: "(1,-1,1,-1,1)", reading: &[1, -1, 1, -1, 1] },
    TableRow { b: 7, knot: "6_3", printed: "(-1,2,-2,3,-2,2,-1)", reading: &[-1, 2, -2, 3, -2, 2, -1] },
    TableRow { b: 8, knot: "7_7", printed: "(1,-3,3,-4,4,-3,2,-1)", reading: &[1, -3, 3, -4, 4, -3, 2, -1] },
    TableRow {
        b: 10,
        knot: "9_31",
        printed: "(-1,4,-6,8,-10,9,-8,5,-3,1)",
        reading: &[-1, 4, -6, 8, -10, 9, -8, 5, -3, 1],
    },
    TableRow {
        b: 11,
        knot: "10_45",
        printed: "(-1,4,-7,11,-14,15,-14,11,-7,4,-1)",
        reading: &[-1, 4, -7, 11, -14, 15, -14, 11, -7, 4, -1],
    },
];

/// `T(5,b)` with signs `++--++--...`, coefficients of `h_b`. The `b = 4` print
/// drops a comma in `2-2`.
pub const TABLE_2: [TableRow; 5] = [
    TableRow { b: 2, knot: "U", printed: "(1)", reading: &[1] },
    TableRow { b: 3, knot: "4_1", printed: "(1,-1,1,-1,1)", reading: &[1, -1, 1, -1, 1] },
    TableRow { b: 4, knot: "6_2", printed: "(1,-1,2,-2,2-2,1)", reading: &[1, -1, 2, -2, 2, -2, 1] },
    TableRow {
        b: 6,
        knot: "10_116",
        printed: "(1,-4,8,-11,15,-16,15,-12,8,-4,1)",
        reading: &[1, -4, 8, -11, 15, -16, 15, -12, 8, -4, 1],
    },
    TableRow {
        b: 7,
        knot: "12a_0960",
        printed: "(1,-5,13,-23,34,-42,45,-42,34,-23,13,-5,1)",
        reading: &[1, -5, 13, -23, 34, -42, 45, -42, 34, -23, 13, -5, 1],
    },
];

#[derive(Debug, Clone, Serialize)]
pub struct RowCheck {
    pub b: u32,
    pub knot: &'static str,
    pub signs: String,
    pub bracket: String,
    /// Coefficients from the highest power down.
    pub computed: Vec<i64>,
    pub printed: &'static str,
    /// Whether the reading equals `computed` or its reverse.
    pub matches: bool,
    pub reversed: bool,
}

impl RowCheck {
    /// The computed tuple in the orientation of the print when they agree.
    pub fn tuple(&self) -> String {
        let mut c = self.computed.clone();
        if self.reversed {
            c.reverse();
        }
        render_tuple(&c)
    }
}

pub fn render_tuple(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn rows(which: u8) -> Option<(&'static [TableRow], Family, &'static [Sign])> {
    const ALT: [Sign; 2] = [Sign::Plus, Sign::Minus];
    const ALT2: [Sign; 4] = [Sign::Plus, Sign::Plus, Sign::Minus, Sign::Minus];
    match which {
        1 => Some((&TABLE_1, Family::F, &ALT)),
        2 => Some((&TABLE_2, Family::H, &ALT2)),
        _ => None,
    }
}

/// Recomputes one table from the recursion of its family.
pub fn check_table(rows: &[TableRow], family: Family, pattern: &[Sign]) -> Result<Vec<RowCheck>> {
    rows.iter().map(|row| check_row(row, family, pattern)).collect()
}

fn check_row(row: &TableRow, family: Family, pattern: &[Sign]) -> Result<RowCheck> {
    let d = BilliardDiagram::build(family.spec(row.b))?;
    let signs: Vec<Sign> = pattern.iter().copied().cycle().take(d.crossing_count()).collect();
    let seq = d.spread_signs(&signs)?;
    let bracket: LaurentPoly = family.expansion(row.b as usize)?.compile()?.eval(&seq)?;
    let computed = bracket.coefficient_string()?;
    let mut rev = computed.clone();
    rev.reverse();
    let forward = computed == row.reading;
    let reversed = !forward && rev == row.reading;
    Ok(RowCheck {
        b: row.b,
        knot: row.knot,
        signs: seq.to_string(),
        bracket: bracket.to_string(),
        computed,
        printed: row.printed,
        matches: forward || reversed,
        reversed,
    })
}
