//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.
//!
//! Expected values come either from the worked examples transcribed below or
//! from independent brute-force oracles defined in this file.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use latticebij::bijection::{deutsch, kimberling, schroder};
use latticebij::enumeration::{self, Enumerator, Size};
use latticebij::paths::{BoundedSeq, Family, Height, MarkedHeightSeq, PathObject};
use latticebij::verify::{self, BijectionId, Bounds};
use latticebij::{format_path, Count};

const CRIT1_BUDGET: Duration = Duration::from_secs(1);
const CRIT3_BUDGET: Duration = Duration::from_secs(120);
const SAMPLES_PER_FAMILY: usize = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- oracles

fn pascal(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for t in 1..row.len() {
            next[t] = row[t - 1] + row[t];
        }
        row = next;
    }
    row[k as usize]
}

fn dyck_count(n: u32) -> u64 {
    fn go(up: u32, down: u32, n: u32) -> u64 {
        if up == n && down == n {
            return 1;
        }
        let mut c = 0;
        if up < n {
            c += go(up + 1, down, n);
        }
        if down < up {
            c += go(up, down + 1, n);
        }
        c
    }
    go(0, 0, n)
}

/// Every marked height sequence of length `n` in raw form: unmarked 1 first,
/// the i-th value at most i, weakly increasing, strictly into marked entries.
fn raw_sequences(n: usize) -> Vec<MarkedHeightSeq> {
    fn go(n: usize, cur: &mut Vec<Height>, out: &mut Vec<MarkedHeightSeq>) {
        if cur.len() == n {
            out.push(MarkedHeightSeq::new_unchecked(cur.clone()));
            return;
        }
        let pos = cur.len() as u32 + 1;
        let prev = cur.last().unwrap().value;
        for v in prev..=pos {
            cur.push(Height::plain(v));
            go(n, cur, out);
            cur.pop();
            if v > prev {
                cur.push(Height::marked(v));
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![Height::plain(1)], &mut out);
    out
}

// --------------------------------------------------------------- criteria

fn crit1_small_counts() -> Outcome {
    let start = Instant::now();
    let e = Enumerator::default();
    let expected = [1u64, 3, 11, 45, 197];
    for (n, &want) in (1..=5).zip(&expected) {
        let ls = e.count(Family::LittleSchroder, Size::N(n)).map_err(err)?;
        let s = e.count(Family::GrowthSeq, Size::N(n)).map_err(err)?;
        ensure(ls == Count(want) && s == Count(want), || format!("n={n}: |LS|={ls} |S|={s}, want {want}"))?;
    }
    let took = start.elapsed();
    ensure(took < CRIT1_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("1 3 11 45 197 on both sides in {took:?}"))
}

fn crit2_worked_examples() -> Outcome {
    // the rewriting table as printed: blank cells repeat the line above
    let table: [[&str; 8]; 7] = [
        ["1", "2d", "2", "3", "4d", "6d", "7d", "8"],
        ["", "", "", "", "5d", "4d", "", ""],
        ["", "", "", "4d", "3", "", "", ""],
        ["", "", "3d", "2", "", "", "", ""],
        ["1", "2d", "3d", "2", "3", "6d", "4d", "8"],
        ["", "", "", "", "5d", "3", "", ""],
        ["1", "2d", "3d", "4d", "2", "3", "4d", "8"],
    ];
    let mut rows: Vec<String> = Vec::new();
    let mut line = table[0];
    for row in table {
        for (c, cell) in row.iter().enumerate() {
            if !cell.is_empty() {
                line[c] = cell;
            }
        }
        rows.push(line.join(" "));
    }

    let path = "EDENEDNDDNEN".parse().map_err(err)?;
    let heights = schroder::heights_of(&path).map_err(err)?;
    let d = schroder::lonely_derivation(&heights, schroder::Strategy::Leftmost);
    let got: Vec<String> = d.states.iter().map(|s| s.to_string()).collect();
    ensure(got == rows, || format!("derivation {got:?}"))?;
    let g = schroder::forward(&path).map_err(err)?;
    ensure(g.to_string() == "1 0 0 0 2 3 0 8", || format!("growth {g}"))?;
    ensure(schroder::backward(&g).map_err(err)? == path, || "schroder inverse".into())?;

    for (u, j, want) in [
        (vec![1, 4, 3, 5], 3, "0,0 2,2 4,3 5,3"),
        (vec![4, 3, 5], 3, "0,0 1,2 3,3 4,3"),
        (vec![1, 3], 1, "0,0 2,1 3,1"),
    ] {
        let seq = BoundedSeq::new(u.clone(), j).map_err(err)?;
        let q = kimberling::phi(&seq).map_err(err)?;
        ensure(q.to_string() == want, || format!("phi_{j}({u:?}) = {q}"))?;
        ensure(kimberling::phi_inv(&q).map_err(err)? == seq, || format!("phi inverse at {want}"))?;
    }

    let p = "UUUU1UUU1UU313".parse().map_err(err)?;
    let w = deutsch::expand_color(&p).map_err(err)?;
    ensure(w.blue_runs() == vec![vec![1, 2], vec![7], vec![10]] && w.terminators() == vec![3, 8, 11], || {
        format!("coloring {w}")
    })?;
    let q = deutsch::forward(&p).map_err(err)?;
    ensure(q == "31D12D2DDD".parse().map_err(err)?, || format!("deutsch image {q}"))?;
    ensure(deutsch::backward(&q).map_err(err)? == p, || "deutsch inverse".into())?;
    Ok("derivation table, three phi vertex lists, coloring and contraction exact".into())
}

fn crit3_exhaustive() -> Outcome {
    let start = Instant::now();
    let runs = [
        (BijectionId::Schroder, Bounds::up_to(10)),
        (BijectionId::Kimberling, Bounds::grid(6, 5)),
        (BijectionId::Deutsch, Bounds::up_to(14)),
    ];
    let mut checked = 0u64;
    for (id, bounds) in runs {
        let r = verify::check_bijection(id, bounds).map_err(err)?;
        let bad: usize = r
            .sizes
            .iter()
            .map(|s| s.round_trip_failures.len() + s.codomain_violations.len() + s.count_mismatches.len())
            .sum();
        ensure(r.pass && bad == 0, || format!("{id}: {bad} failures, first {:?}", r.smallest_counterexample))?;
        checked += r.sizes.iter().map(|s| s.domain_count.get() + s.codomain_count.get()).sum::<u64>();
    }
    let took = start.elapsed();
    ensure(took < CRIT3_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{checked} objects round-tripped, 0 failures, {took:?}"))
}

fn crit4_closed_form() -> Outcome {
    let e = Enumerator::default();
    let mut cells = 0;
    for i in 1..=7u32 {
        for j in 0..=7u32 {
            let want: u64 = (0..i as u64).map(|k| pascal(i as u64 - 1, k) * pascal(j as u64 + k, k)).sum();
            let got = e.count_by_enumeration(Family::Kimberling, Size::IJ(i, j)).map_err(err)?;
            ensure(got == Count(want), || format!("|K({i},{j})| = {got}, closed form {want}"))?;
            let lib = enumeration::kimberling_count(i, j).map_err(err)?;
            ensure(lib == Count(want), || format!("library closed form at ({i},{j}) = {lib}"))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells agree"))
}

fn crit5_equinumerous() -> Outcome {
    let e = Enumerator::default();
    for i in 0..=6 {
        for j in 0..=6 {
            let l = e.count_by_enumeration(Family::BoundedSeq, Size::IJ(i, j)).map_err(err)?;
            let k = e.count_by_enumeration(Family::Kimberling, Size::IJ(i + 1, j)).map_err(err)?;
            ensure(l == k, || format!("|L({i},{j})|={l} but |K({},{j})|={k}", i + 1))?;
        }
    }
    let mut pr = Vec::new();
    for n in 0..=14 {
        let p = e.count(Family::Deutsch, Size::N(n)).map_err(err)?;
        let r = e.count(Family::Ramirez, Size::N(n)).map_err(err)?;
        ensure(p == r, || format!("|P_{n}|={p} but |R_{n}|={r}"))?;
        pr.push(p.get());
    }
    ensure(pr[4] == 3 && pr[5] == 5, || format!("anchors |P_4|={} |P_5|={}", pr[4], pr[5]))?;
    Ok(format!("L/K grid 7x7 equal; P_n = R_n for n<=14 ({pr:?})"))
}

fn crit6_confluence() -> Outcome {
    use schroder::Strategy::{Leftmost, Rightmost};
    let mut total = 0usize;
    let mut mismatches = 0usize;
    for n in 1..=9 {
        let seqs = raw_sequences(n);
        let expected = enumeration::count(Family::LittleSchroder, Size::N(n as u32)).map_err(err)?;
        ensure(seqs.len() as u64 == expected.get(), || format!("n={n}: {} raw sequences vs {expected} paths", seqs.len()))?;
        for m in &seqs {
            ensure(m.is_raw(), || format!("oracle produced non-raw {m}"))?;
            let left = schroder::normalize_lonely(m, Leftmost);
            let right = schroder::normalize_lonely(m, Rightmost);
            mismatches += (left != right) as usize;
            for x in [m, &left] {
                mismatches += (schroder::normalize_offending(x, Leftmost) != schroder::normalize_offending(x, Rightmost)) as usize;
            }
        }
        total += seqs.len();
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!("{total} raw sequences, both normalizers, 0 mismatches"))
}

fn crit7_catalan() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=10 {
        let c = verify::catalan_check(n).map_err(err)?;
        let dyck = dyck_count(n);
        ensure(c.passed(), || format!("n={n}: {:?}", c.stray_images.first()))?;
        ensure(c.dfree_paths == Count(dyck) && c.zerofree_sequences == Count(dyck), || {
            format!("n={n}: {} D-free, {} zero-free, {dyck} Dyck", c.dfree_paths, c.zerofree_sequences)
        })?;
        counts.push(dyck);
    }
    Ok(format!("images are exactly the zero-free sequences: {counts:?}"))
}

// ------------------------------------------------------------------- CLI

fn cli(args: &[&str]) -> (i32, String) {
    cli_env(args, None)
}

fn cli_env(args: &[&str], limit: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_latticebij"));
    cmd.args(args);
    if let Some(l) = limit {
        cmd.env("LATTICEBIJ_MAX_OBJECTS", l);
    } else {
        cmd.env_remove("LATTICEBIJ_MAX_OBJECTS");
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn sample<T: Clone>(all: &[T]) -> Vec<T> {
    assert!(all.len() >= SAMPLES_PER_FAMILY, "sample pool too small");
    (0..SAMPLES_PER_FAMILY).map(|k| all[k * all.len() / SAMPLES_PER_FAMILY].clone()).collect()
}

fn map_once(bij: &str, direction: &str, input: &str, j: Option<u32>) -> Result<String, String> {
    let j_text = j.map(|j| j.to_string());
    let mut args = vec!["map", "--bijection", bij, "--direction", direction, "--input", input];
    if let Some(j) = &j_text {
        args.extend(["--j", j.as_str()]);
    }
    let (code, out) = cli(&args);
    ensure(code == 0, || format!("{bij} {direction} {input:?} exited {code}"))?;
    Ok(out)
}

/// Maps `text` in direction `first`, feeds the output back through the
/// opposite direction and demands the original text byte for byte.
fn round_trip(bij: &str, first: &str, text: &str, j_first: Option<u32>, j_second: Option<u32>) -> Result<(), String> {
    let second = if first == "forward" { "backward" } else { "forward" };
    let mid = map_once(bij, first, text, j_first)?;
    let mid = mid.strip_suffix('\n').unwrap_or(&mid);
    let back = map_once(bij, second, mid, j_second)?;
    ensure(back == format!("{text}\n"), || format!("{bij}: {text:?} -> {mid:?} -> {back:?}"))
}

fn crit8_cli() -> Outcome {
    let e = Enumerator::default();
    let text = |o: PathObject| format_path(&o);
    let mut trips = 0;

    for p in sample(&e.little_schroder(6).map_err(err)?) {
        round_trip("schroder", "forward", &text(PathObject::Schroder(p)), None, None)?;
        trips += 1;
    }
    for g in sample(&e.growth_sequences(6).map_err(err)?) {
        round_trip("schroder", "backward", &text(PathObject::Growth(g)), None, None)?;
        trips += 1;
    }
    for u in sample(&e.bounded_sequences(4, 2).map_err(err)?) {
        round_trip("kimberling", "forward", &text(PathObject::Bounded(u)), Some(2), None)?;
        trips += 1;
    }
    for q in sample(&e.kimberling(5, 2).map_err(err)?) {
        round_trip("kimberling", "backward", &text(PathObject::Kimberling(q)), None, Some(2))?;
        trips += 1;
    }
    for p in sample(&e.deutsch(11).map_err(err)?) {
        round_trip("deutsch", "forward", &text(PathObject::Deutsch(p)), None, None)?;
        trips += 1;
    }
    for q in sample(&e.ramirez(11).map_err(err)?) {
        round_trip("deutsch", "backward", &text(PathObject::Ramirez(q)), None, None)?;
        trips += 1;
    }

    let dir = tempfile::tempdir().map_err(err)?;
    let bad_ref = dir.path().join("wrong.txt");
    fs::write(&bad_ref, "1 1\n2 3\n3 12\n").map_err(err)?;
    let bad_ref = bad_ref.to_str().unwrap().to_string();
    let missing_out = dir.path().join("no/such/dir/out.svg");
    let missing_out = missing_out.to_str().unwrap().to_string();
    let cases: Vec<(i32, Vec<&str>, Option<&str>)> = vec![
        (0, vec!["verify", "--bijection", "deutsch", "--max", "4"], None),
        (0, vec!["--help"], None),
        (1, vec!["verify", "--bijection", "schroder", "--max", "3", "--ref", &bad_ref], None),
        (2, vec!["enumerate", "--family", "deutsch"], None),
        (2, vec!["map", "--bijection", "nope", "--direction", "forward", "--input", "U 1"], None),
        (3, vec!["enumerate", "--family", "little-schroder", "--n", "5"], Some("10")),
        (4, vec!["map", "--bijection", "deutsch", "--direction", "forward", "--input", "U U 2 U 1"], None),
        (4, vec!["render", "--family", "schroder", "--input", "DEN"], None),
        (5, vec!["render", "--family", "deutsch", "--input", "U 1", "--out", &missing_out], None),
    ];
    for (want, args, limit) in &cases {
        let (code, _) = cli_env(args, *limit);
        ensure(code == *want, || format!("{args:?} exited {code}, want {want}"))?;
    }
    Ok(format!("{trips} CLI round trips byte-exact; {} exit-code cases", cases.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("counts 1,3,11,45,197 for n=1..5 (<1s)", crit1_small_counts),
        ("worked examples bit-exact", crit2_worked_examples),
        ("exhaustive bijectivity at desk bounds (<2min)", crit3_exhaustive),
        ("Kimberling closed form for 1<=i<=7, 0<=j<=7", crit4_closed_form),
        ("equinumerosity L/K and P/R with anchors", crit5_equinumerous),
        ("normalizer confluence over raw sequences n<=9", crit6_confluence),
        ("Catalan specialization n<=10", crit7_catalan),
        ("CLI round trips and exit codes", crit8_cli),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{:.2}s]", k + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{:.2}s]", k + 1, took.as_secs_f64())
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
