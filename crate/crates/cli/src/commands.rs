//! Argument definitions and the subcommand implementations.

use std::collections::BTreeSet;
use std::fmt::Write;

use billiard_core::laurent::jones_normalize;
use billiard_core::oracle::{StateSum, DEFAULT_CROSSING_LIMIT};
use billiard_core::recursions::{count_f_terms, f_summands};
use billiard_core::terms::Expansion;
use billiard_core::tiling::{enumerate_term_tilings, tiling_to_term, Tile};
use billiard_core::{BilliardDiagram, LaurentPoly, SignSequence, TableSpec, TermSum};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{bench, default_signs};
use crate::family::{recursion_expansion, Family};
use crate::report::{diagram_json, Output};
use crate::sweep::sweep_range;
use crate::tables::{check_table, rows};
use crate::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "billiard", version, about = "Kauffman bracket and Jones polynomials of billiard table knots")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BumperArg {
    None,
    /// Two squares removed from the last column, `B2(5,b)`.
    Two,
    /// One square removed from the last column, `B1(5,b)`.
    One,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    Oracle,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long, value_enum, default_value_t = BumperArg::None)]
    pub bumpers: BumperArg,
}

impl TableArgs {
    pub fn spec(&self) -> Result<TableSpec> {
        match (self.bumpers, self.a) {
            (BumperArg::None, a) => Ok(TableSpec::rect(a, self.b)),
            (BumperArg::Two, 5) => Ok(TableSpec::two_bumpers(self.b)),
            (BumperArg::One, 5) => Ok(TableSpec::one_bumper(self.b)),
            _ => Err(CliError::Usage("bumpered tables need --a 5".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kauffman bracket of a signed table.
    Bracket {
        #[command(flatten)]
        table: TableArgs,
        /// One of '+', '-' per slot, '_' on skipped slots; skips may be left
        /// out.
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Jones polynomial of a signed table.
    Jones {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
    /// Rendered expansion of a family with its term counts.
    Terms {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// PD and Gauss codes.
    Pd {
        #[command(flatten)]
        table: TableArgs,
        /// Defaults to all '+'.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// Compare a family with the oracle on every sign sequence.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        min_n: u32,
        #[arg(long)]
        max_n: u32,
    },
    /// Recompute a coefficient table.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Time the recursion against the oracle.
    Bench {
        #[command(flatten)]
        table: TableArgs,
        /// Defaults to '++--' repeated.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        #[arg(long, default_value_t = 3)]
        runs: usize,
    },
    /// Tile sequences of `f_b` and the tiling-to-term check.
    Tilings {
        #[arg(long)]
        b: usize,
    },
}

/// Reads a sign string given per slot, or per crossing when the table has
/// skipped slots.
pub fn parse_signs(d: &BilliardDiagram, s: &str) -> Result<SignSequence> {
    let seq: SignSequence = s.parse()?;
    if seq.len() != d.slot_count() && seq.len() == d.crossing_count() {
        let signs: Option<Vec<_>> = seq.slots().iter().copied().collect();
        if let Some(signs) = signs {
            return Ok(d.spread_signs(&signs)?);
        }
    }
    d.assign_signs(seq.clone())?;
    Ok(seq)
}

fn poly_json(p: &LaurentPoly) -> serde_json::Value {
    json!({
        "text": p.to_string(),
        "terms": p.terms().rev().collect::<Vec<_>>(),
        "coefficients": p.coefficient_string().ok(),
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Bracket { table, signs, method } => bracket_cmd(table, signs, *method),
        Command::Jones { table, signs } => jones_cmd(table, signs),
        Command::Terms { family, n } => terms_cmd(*family, *n),
        Command::Pd { table, signs } => pd_cmd(table, signs.as_deref()),
        Command::Verify { family, min_n, max_n } => verify_cmd(*family, *min_n, *max_n),
        Command::Table { which } => table_cmd(*which),
        Command::Bench { table, signs, runs } => bench_cmd(table, signs.as_deref(), *runs),
        Command::Tilings { b } => tilings_cmd(*b),
    }
}

fn bracket_of(d: &BilliardDiagram, seq: &SignSequence, method: Method) -> Result<LaurentPoly> {
    match method {
        Method::Recursion => Ok(recursion_expansion(d.spec())?.compile()?.eval(seq)?),
        Method::Oracle => {
            let signed = d.assign_signs(seq.clone())?;
            Ok(StateSum::new(d).bracket(signed.crossing_signs(), DEFAULT_CROSSING_LIMIT)?)
        }
    }
}

fn bracket_cmd(table: &TableArgs, signs: &str, method: Method) -> Result<Output> {
    let spec = table.spec()?;
    let d = BilliardDiagram::build(spec)?;
    let seq = parse_signs(&d, signs)?;
    let p = bracket_of(&d, &seq, method)?;
    let body = json!({
        "a": spec.a,
        "b": spec.b,
        "signs": seq.to_string(),
        "method": format!("{method:?}").to_lowercase(),
        "writhe": d.assign_signs(seq.clone())?.writhe_direct(),
        "bracket": poly_json(&p),
    });
    Ok(Output::new("bracket", p.to_string(), body))
}

fn jones_cmd(table: &TableArgs, signs: &str) -> Result<Output> {
    let spec = table.spec()?;
    let d = BilliardDiagram::build(spec)?;
    let seq = parse_signs(&d, signs)?;
    let method = if recursion_expansion(spec).is_ok() { Method::Recursion } else { Method::Oracle };
    let p = bracket_of(&d, &seq, method)?;
    let writhe = d.assign_signs(seq.clone())?.writhe_direct();
    let v = jones_normalize(&p, writhe);
    let body = json!({
        "a": spec.a,
        "b": spec.b,
        "signs": seq.to_string(),
        "writhe": writhe,
        "bracket": p.to_string(),
        "jones": v.to_string(),
        "quarter_terms": v.quarter_terms().rev().collect::<Vec<_>>(),
    });
    Ok(Output::new("jones", v.to_string(), body))
}

fn terms_cmd(family: Family, n: usize) -> Result<Output> {
    let e = family.expansion(n)?;
    let flat = e.flatten()?;
    let skeletons = family.skeletons(n)?;
    let text = format!(
        "{}_{n} = {e}\nskeletons: {skeletons}\nflat terms: {}\nwidth: {}",
        family.name(),
        flat.len(),
        flat.width()
    );
    let body = json!({
        "family": family,
        "n": n,
        "expansion": e.to_string(),
        "flat": flat.to_string(),
        "skeletons": skeletons,
        "flat_terms": flat.len(),
        "width": flat.width(),
    });
    Ok(Output::new("terms", text, body))
}

fn pd_cmd(table: &TableArgs, signs: Option<&str>) -> Result<Output> {
    let spec = table.spec()?;
    let d = BilliardDiagram::build(spec)?;
    let seq = match signs {
        Some(s) => parse_signs(&d, s)?,
        None => d.spread_signs(&vec![billiard_core::Sign::Plus; d.crossing_count()])?,
    };
    let signed = d.assign_signs(seq.clone())?;
    let text = format!("{}\n{}", signed.pd_code(), signed.gauss_code());
    let body = json!({
        "a": spec.a,
        "b": spec.b,
        "signs": seq.to_string(),
        "pd": signed.pd_tuples(),
        "loops": signed.free_loops(),
        "gauss": signed.gauss_sequences(),
        "writhe": signed.writhe_direct(),
        "diagram": diagram_json(&d),
    });
    Ok(Output::new("pd", text, body))
}

fn verify_cmd(family: Family, min_n: u32, max_n: u32) -> Result<Output> {
    if min_n == 0 || min_n > max_n {
        return Err(CliError::Usage("need 1 <= --min-n <= --max-n".into()));
    }
    let rows = sweep_range(family, min_n..=max_n)?;
    let mut text = String::new();
    for r in &rows {
        let _ = write!(
            text,
            "{}_{} crossings={} sequences={} mismatches={} ({:.1} ms)",
            family.name(),
            r.n,
            r.crossings,
            r.sequences,
            r.mismatches,
            r.millis
        );
        if let Some(s) = &r.first_mismatch {
            let _ = write!(text, " first at {s}");
        }
        text.push('\n');
    }
    let ok = rows.iter().all(|r| r.passed());
    text.push_str(if ok { "all sequences agree" } else { "MISMATCH" });
    let body = json!({ "family": family, "rows": rows, "ok": ok });
    Ok(Output::with_code("verify", text, body, if ok { 0 } else { 1 }))
}

fn table_cmd(which: u8) -> Result<Output> {
    let (table, family, pattern) =
        rows(which).ok_or_else(|| CliError::Usage("--which must be 1 or 2".into()))?;
    let checks = check_table(table, family, pattern)?;
    let mut text = String::new();
    for c in &checks {
        let status = if c.matches {
            "matches".to_string()
        } else {
            format!("differs from printed {}", c.printed)
        };
        let _ = writeln!(text, "{} | {} | {} | {status}", c.b, c.knot, c.tuple());
    }
    let ok = checks.iter().all(|c| c.matches);
    let body = json!({ "table": which, "rows": checks, "ok": ok });
    Ok(Output::with_code("table", text.trim_end().to_string(), body, if ok { 0 } else { 1 }))
}

fn bench_cmd(table: &TableArgs, signs: Option<&str>, runs: usize) -> Result<Output> {
    let spec = table.spec()?;
    let d = BilliardDiagram::build(spec)?;
    let seq = match signs {
        Some(s) => parse_signs(&d, s)?,
        None => default_signs(&d)?,
    };
    let r = bench(spec, Some(seq), runs.max(1))?;
    let skeletons = r.skeletons.map_or("-".to_string(), |s| s.to_string());
    let text = format!(
        "T({},{}) signs {} crossings {}\nrecursion: {skeletons} skeletons, {:.1} us per evaluation (compile {:.1} us)\noracle: {} states, {:.1} us\nspeedup: {:.0}x, values agree: {}",
        r.a, r.b, r.signs, r.crossings, r.recursion_micros, r.compile_micros, r.oracle_states, r.oracle_micros, r.speedup, r.agree
    );
    let code = if r.agree { 0 } else { 1 };
    Ok(Output::with_code("bench", text, serde_json::to_value(&r)?, code))
}

fn tilings_cmd(b: usize) -> Result<Output> {
    if b < 4 {
        return Err(CliError::Usage("tile sequences start at --b 4".into()));
    }
    let tilings = enumerate_term_tilings(b);
    let expected = count_f_terms(b);
    let summands: BTreeSet<String> = tilings
        .iter()
        .map(|t| Expansion::new(vec![t.summand()]).to_string())
        .collect();
    let injective = summands.len() == tilings.len();
    let skeletons: BTreeSet<Vec<Tile>> = f_summands(b).into_iter().collect();
    let same_skeletons = skeletons == tilings.iter().map(|t| t.0.clone()).collect();
    let images: Vec<TermSum> = tilings.iter().map(tiling_to_term).collect::<billiard_core::Result<_>>()?;
    let total = billiard_core::terms::sum_of(images)?.canonical();
    let reproduces = total == Family::F.expansion(b)?.flatten()?.canonical();
    let ok = injective && same_skeletons && reproduces && tilings.len() as u64 == expected;
    let mut text = String::new();
    for t in &tilings {
        let _ = writeln!(text, "{t}");
    }
    let _ = write!(
        text,
        "count {} (f_{b} has {expected} terms), injective {injective}, reproduces f_{b} {reproduces}",
        tilings.len()
    );
    let body = json!({
        "b": b,
        "tilings": tilings.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "count": tilings.len(),
        "count_f_terms": expected,
        "injective": injective,
        "matches_f_summands": same_skeletons,
        "reproduces": reproduces,
        "ok": ok,
    });
    Ok(Output::with_code("tilings", text, body, if ok { 0 } else { 1 }))
}
