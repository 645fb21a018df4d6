//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process fails when a criterion fails, except for failures listed in
//! `KNOWN_FAILURES`, which are printed as FAIL and must keep failing in the
//! documented way.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use billiard_cli::bench::bench;
use billiard_cli::family::Family;
use billiard_cli::sweep::sweep_range;
use billiard_cli::tables::{check_table, render_tuple, rows};
use billiard_core::oracle::{bracket_bruteforce, jones};
use billiard_core::recursions::{count_f_terms, count_h_skeletons, f_terms, render_f_tiles, writhe_recursive};
use billiard_core::terms::sum_of;
use billiard_core::tiling::{enumerate_term_tilings, tiling_to_term};
use billiard_core::{BilliardDiagram, Block, LaurentPoly, QuarterPoly, SignSequence, TableSpec, TermSum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Table 1 prints `(1,0)` for the unknot at `b = 2`, but `T(3,2)` is a single
/// kink with bracket `-A^{-3}`, coefficient string `(-1)`, for either sign.
const KNOWN_FAILURES: &[(u32, &str)] = &[(3, "b=2 computed (-1) printed (1,0)")];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn table(spec: TableSpec) -> BilliardDiagram {
    BilliardDiagram::build(spec).expect("valid table")
}

fn oracle(d: &BilliardDiagram, signs: &str) -> LaurentPoly {
    bracket_bruteforce(&d.assign_signs(signs.parse().unwrap()).unwrap()).unwrap()
}

fn trefoil() -> Outcome {
    let d = table(TableSpec::rect(3, 4));
    let signs: SignSequence = "+-+".parse().unwrap();
    let start = Instant::now();
    let s = d.assign_signs(signs.clone()).unwrap();
    let bracket = bracket_bruteforce(&s).unwrap();
    let writhe = s.writhe_direct();
    let v = jones(&s).unwrap();
    let elapsed = start.elapsed();
    let by_recursion = f_terms(4).unwrap().eval(&signs).unwrap();
    let expected = poly(&[(5, -1), (-3, -1), (-7, 1)]);
    let expected_v = QuarterPoly::from_integer_terms([(1, 1), (3, 1), (4, -1)]);
    outcome(
        bracket == expected && by_recursion == expected && writhe == 3 && v == expected_v && elapsed < Duration::from_millis(1),
        format!("bracket {bracket}, writhe {writhe}, Jones {v}, {:.0} us", elapsed.as_secs_f64() * 1e6),
    )
}

fn base_blocks() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |name: &str, d: &BilliardDiagram, signs: &str, terms: &TermSum, expected: LaurentPoly| {
        let via_terms = terms.eval(&signs.parse().unwrap()).unwrap();
        let via_oracle = oracle(d, signs);
        if via_terms != expected || via_oracle != expected {
            bad.push(format!("{name}({signs}): terms {via_terms}, oracle {via_oracle}, expected {expected}"));
        }
    };
    // f_2^± is a single factor rather than a block.
    let (t32, f2) = (table(TableSpec::rect(3, 2)), f_terms(2).unwrap());
    for (s, v) in [("+", poly(&[(-3, -1)])), ("-", poly(&[(3, -1)]))] {
        check("f_2", &t32, s, &f2, v);
    }
    let (t52, h2) = (table(TableSpec::rect(5, 2)), Block::H(2).expand().unwrap());
    for (s, v) in [("+-", LaurentPoly::one()), ("-+", LaurentPoly::one()), ("++", poly(&[(-6, 1)])), ("--", poly(&[(6, 1)]))] {
        check("h_2", &t52, s, &h2, v);
    }
    let (t42, g2) = (table(TableSpec::rect(4, 2)), Block::G2.expand().unwrap());
    let hopf = poly(&[(4, -1), (-4, -1)]);
    for (s, v) in [("++", hopf.clone()), ("--", hopf), ("+-", LaurentPoly::delta()), ("-+", LaurentPoly::delta())] {
        check("g_2", &t42, s, &g2, v);
    }
    let pass = bad.is_empty();
    outcome(pass, if pass { "f_2, h_2, g_2 equal the printed values on both routes".into() } else { bad.join("; ") })
}

fn coefficient_table(which: u8) -> Outcome {
    let (table_rows, family, pattern) = rows(which).unwrap();
    let start = Instant::now();
    let checks = check_table(table_rows, family, pattern).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.matches)
        .map(|c| format!("b={} computed {} printed {}", c.b, render_tuple(&c.computed), c.printed))
        .collect();
    let in_time = which != 1 || elapsed < Duration::from_millis(100);
    let detail = format!(
        "{}/{} rows, {:.1} ms{}{}",
        checks.len() - failed.len(),
        checks.len(),
        elapsed.as_secs_f64() * 1e3,
        if failed.is_empty() { "" } else { "; " },
        failed.join("; ")
    );
    outcome(failed.is_empty() && in_time, detail)
}

fn sweeps(parts: &[(Family, std::ops::RangeInclusive<u32>)], limit: Duration) -> Outcome {
    let start = Instant::now();
    let mut sequences = 0;
    let mut bad = Vec::new();
    for (family, range) in parts {
        for r in sweep_range(*family, range.clone()).unwrap() {
            sequences += r.sequences;
            if !r.passed() {
                bad.push(format!(
                    "{}_{}: {} mismatches, first {}",
                    family.name(),
                    r.n,
                    r.mismatches,
                    r.first_mismatch.unwrap_or_default()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < limit;
    let mut detail = format!("{sequences} sign sequences, {:.2} s", elapsed.as_secs_f64());
    if !bad.is_empty() {
        detail = format!("{detail}; {}", bad.join("; "));
    }
    outcome(pass, detail)
}

/// OEIS A000931: a(0) = 1, a(1) = a(2) = 0, a(n) = a(n-2) + a(n-3).
fn padovan(n: usize) -> u64 {
    let mut a = vec![1u64, 0, 0];
    while a.len() <= n {
        let k = a.len();
        a.push(a[k - 2] + a[k - 3]);
    }
    a[n]
}

fn term_counts() -> Outcome {
    let f_bad: Vec<usize> = (4..=16).filter(|&b| count_f_terms(b) != padovan(b + 4)).collect();
    let h_bad: Vec<usize> = (5..=16).filter(|&b| count_h_skeletons(b) != 1 << (b - 4)).collect();
    outcome(
        f_bad.is_empty() && h_bad.is_empty(),
        format!(
            "f_16 has {} terms = a(20), h_16 has {} skeletons = 2^12; mismatches at f {f_bad:?}, h {h_bad:?}",
            count_f_terms(16),
            count_h_skeletons(16)
        ),
    )
}

fn writhe_check(a: u32, b: u32, seqs: impl Iterator<Item = SignSequence>, bad: &mut Vec<String>) -> u64 {
    let d = table(TableSpec::rect(a, b));
    let mut n = 0;
    for s in seqs {
        let direct = d.assign_signs(s.clone()).unwrap().writhe_direct();
        let recursive = writhe_recursive(a, b, &s).unwrap();
        if direct != recursive {
            bad.push(format!("T({a},{b},{s}): direct {direct}, recursive {recursive}"));
        }
        n += 1;
    }
    n
}

fn writhes() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for b in (1..=12).filter(|b| b % 3 != 0) {
        let d = table(TableSpec::rect(3, b));
        checked += writhe_check(3, b, d.all_sign_sequences(), &mut bad);
    }
    // Exhaustive up to b = 9. Each residue class mod 5 meets its pattern for
    // one parity there; b = 11..14 add the other parity by sampling.
    for b in (1..=9).filter(|b| b % 5 != 0) {
        let d = table(TableSpec::rect(5, b));
        checked += writhe_check(5, b, d.all_sign_sequences(), &mut bad);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for b in 11..=14 {
        let k = 2 * (b as usize - 1);
        let seqs: Vec<SignSequence> = (0..10_000).map(|_| SignSequence::from_mask(k, rng.gen::<u64>() & ((1 << k) - 1))).collect();
        checked += writhe_check(5, b, seqs.into_iter(), &mut bad);
    }
    let pass = bad.is_empty();
    bad.truncate(3);
    outcome(pass, format!("{checked} sign sequences{}{}", if pass { "" } else { "; " }, bad.join("; ")))
}

/// Tile sequences of a printed listing such as `(S_2,C,[C,V]+[V,H])+(S_1,H)`,
/// with bracketed alternatives expanded.
fn expand_listing(s: &str) -> BTreeSet<String> {
    fn split_top(s: &str, sep: char) -> Vec<&str> {
        let (mut depth, mut start, mut out) = (0, 0, Vec::new());
        for (i, c) in s.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ if c == sep && depth == 0 => {
                    out.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(&s[start..]);
        out
    }
    let mut all = BTreeSet::new();
    for summand in split_top(s, '+') {
        let inner = &summand[1..summand.len() - 1];
        let mut partial = vec![Vec::<String>::new()];
        for item in split_top(inner, ',') {
            let options: Vec<Vec<String>> = if item.starts_with('[') {
                split_top(item, '+')
                    .iter()
                    .map(|alt| alt[1..alt.len() - 1].split(',').map(str::to_string).collect())
                    .collect()
            } else {
                vec![vec![item.to_string()]]
            };
            partial = partial
                .iter()
                .flat_map(|p| options.iter().map(move |o| [p.clone(), o.clone()].concat()))
                .collect();
        }
        for p in partial {
            all.insert(p.join(" ").replace("S_", "S"));
        }
    }
    all
}

const TILE_LISTS: &[(usize, &str)] = &[
    (4, "(S_2,V)+(S_1,H)"),
    (5, "(S_2,C)+(S_1,H,V)"),
    (6, "(S_2,[C,V]+[V,H])+(S_1,H,C)"),
    (7, "(S_2,C,C)+(S_2,V,H,V)+(S_1,H,[C,V]+[V,H])"),
    (8, "(S_2,C,[C,V]+[V,H])+(S_2,V,H,C)+(S_1,H,C,C)+(S_1,H,V,H,V)"),
    (9, "(S_2,C,C,C)+(S_2,C,V,H,V)+(S_2,V,H,[C,V]+[V,H])+(S_1,H,C,[C,V]+[V,H])+(S_1,H,V,H,C)"),
    (
        10,
        "(S_2,C,C,[C,V]+[V,H])+(S_2,C,V,H,C)+(S_2,V,H,C,C)+(S_2,V,H,V,H,V)+(S_1,H,C,C,C)+(S_1,H,C,V,H,V)+(S_1,H,V,H,[C,V]+[V,H])",
    ),
];

fn tilings() -> Outcome {
    let mut bad = Vec::new();
    for &(b, printed) in TILE_LISTS {
        let ts = enumerate_term_tilings(b);
        let names: BTreeSet<String> = ts.iter().map(|t| t.to_string()).collect();
        if ts.len() as u64 != count_f_terms(b) || names.len() != ts.len() {
            bad.push(format!("b={b}: {} tilings, {} terms", ts.len(), count_f_terms(b)));
        }
        if names != expand_listing(printed) || render_f_tiles(b) != printed {
            bad.push(format!("b={b}: listing differs"));
        }
        let image = sum_of(ts.iter().map(|t| tiling_to_term(t).unwrap()).collect()).unwrap();
        if image.canonical() != f_terms(b).unwrap().canonical() {
            bad.push(format!("b={b}: image differs from f_{b}"));
        }
    }
    let pass = bad.is_empty();
    outcome(pass, if pass { "b=4..10: counts, listings and term sets agree".into() } else { bad.join("; ") })
}

fn performance() -> Outcome {
    let r = bench(TableSpec::rect(5, 10), None, 3).unwrap();
    let pass = r.speedup >= 100.0 && r.agree && r.skeletons == Some(64) && r.oracle_states == 1 << 18;
    outcome(
        pass,
        format!(
            "T(5,10): {} skeletons, {:.1} us per recursion evaluation vs {} oracle states in {:.1} us, speedup {:.0}x",
            r.skeletons.unwrap_or(0),
            r.recursion_micros,
            r.oracle_states,
            r.oracle_micros,
            r.speedup
        ),
    )
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "trefoil bracket, writhe and Jones", trefoil),
        (2, "base blocks against the oracle", base_blocks),
        (3, "Table 1 coefficient strings", || coefficient_table(1)),
        (4, "Table 2 coefficient strings", || coefficient_table(2)),
        (5, "T(3,b) sweep, b=3..10", || sweeps(&[(Family::F, 3..=10)], Duration::from_secs(60))),
        (6, "T(5,b) sweep, b=3..6", || sweeps(&[(Family::H, 3..=6)], Duration::from_secs(120))),
        (7, "bumpered sweeps, n=3..6", || {
            sweeps(&[(Family::B, 3..=6), (Family::Bt, 3..=6)], Duration::from_secs(120))
        }),
        (8, "term and skeleton counts", term_counts),
        (9, "writhe recursions", writhes),
        (10, "tiling correspondence", tilings),
        (11, "recursion against oracle timing", performance),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let o = run();
        println!("{} [{id:>2}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        match (o.pass, known) {
            (true, None) => {}
            (false, Some((_, why))) if o.detail.contains(why) => {}
            (false, Some(_)) | (false, None) => unexpected.push(id),
            (true, Some(_)) => {
                println!("      criterion {id} was listed as failing and now passes; update KNOWN_FAILURES");
                unexpected.push(id);
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected results: {unexpected:?}");
        ExitCode::FAILURE
    }
}
