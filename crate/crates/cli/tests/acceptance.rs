//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use corepath::bijection::{expected_run_delta, phi, psi, run_class, run_delta, Side};
use corepath::core_maps::{
    free_path_to_prefix, path_to_tcore, prefix_to_free_path, prefix_to_symmetric,
    sc_sequence_to_free_path, sc_tcore_to_sequence, sc_tcore_to_symmetric_path,
    symmetric_path_to_sc_tcore, tcore_to_path, tcore_to_sequence,
};
use corepath::counting::{cc, cigler_count, scc};
use corepath::path::{
    is_free_motzkin, is_member, is_motzkin_prefix, width_index_free, width_index_prefix,
};
use corepath::{BigCount, Family, FamilySpec, Partition, PathWord, Step};

const STEPS: [Step; 3] = [Step::Down, Step::Flat, Step::Up];

const TABLE_CC: [[u64; 8]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [3, 5, 7, 9, 11, 13, 15, 17],
    [6, 16, 31, 51, 76, 106, 141, 181],
    [10, 40, 105, 219, 396, 650, 995, 1445],
    [15, 85, 295, 771, 1681, 3235, 5685, 9325],
];

const TABLE_SCC: [[u64; 8]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 4, 5, 7, 8, 10, 11, 13],
    [3, 9, 15, 27, 37, 55, 69, 93],
    [4, 16, 34, 76, 124, 216, 309, 471],
    [5, 25, 65, 175, 335, 675, 1095, 1875],
];

type Outcome = Result<String, String>;

fn w(s: &str) -> PathWord {
    s.parse().unwrap()
}

fn big(n: u64) -> BigCount {
    BigCount::from(n)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every word over {d, f, u} of the given length.
fn all_words(n: usize) -> impl Iterator<Item = PathWord> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let mut steps = Vec::with_capacity(n);
        for _ in 0..n {
            steps.push(STEPS[code % 3]);
            code /= 3;
        }
        PathWord::new(steps)
    })
}

/// Cornerless Motzkin paths with `up` up-steps and `flats` flat steps,
/// generated by a plain recursive walk.
fn cornerless_motzkin(up: usize, flats: usize) -> Vec<PathWord> {
    fn go(
        acc: &mut Vec<Step>,
        h: usize,
        ups: usize,
        downs: usize,
        flats: usize,
        out: &mut Vec<PathWord>,
    ) {
        if ups == 0 && downs == 0 && flats == 0 {
            out.push(PathWord::new(acc.clone()));
            return;
        }
        let last = acc.last().copied();
        if ups > 0 && last != Some(Step::Down) {
            acc.push(Step::Up);
            go(acc, h + 1, ups - 1, downs, flats, out);
            acc.pop();
        }
        if downs > 0 && h > 0 && last != Some(Step::Up) {
            acc.push(Step::Down);
            go(acc, h - 1, ups, downs - 1, flats, out);
            acc.pop();
        }
        if flats > 0 {
            acc.push(Step::Flat);
            go(acc, h, ups, downs, flats - 1, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, up, up, flats, &mut out);
    out
}

fn mean_time(reps: u32, mut f: impl FnMut()) -> Duration {
    let start = Instant::now();
    for _ in 0..reps {
        f();
    }
    start.elapsed() / reps
}

fn criterion_1() -> Outcome {
    let phi_cases = [
        ("fduduufdfduufdff", "ffuduufdfdufuddf"),
        (
            "fduduufudfdduufudfdffdfufuddfuf",
            "fufuuddfdufufudffduddfufudfduuf",
        ),
    ];
    let psi_cases = [
        ("uufufdddufuuf", "ufddfdfuuudfd"),
        ("uufuufdddfdfuuudfddf", "dfdfuuuufddfdfuuudfd"),
        (
            "fuuufuduufuffdddfddfuuufufdddufuuf",
            "ufufddduddfdfdffuuuuufddfdfuuudfdf",
        ),
    ];
    let mut slowest = Duration::ZERO;
    for (input, want) in phi_cases {
        let got = phi(&w(input)).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || format!("phi({input}) = {got}"))?;
        slowest = slowest.max(mean_time(1000, || {
            phi(&w(input)).unwrap();
        }));
    }
    for (input, want) in psi_cases {
        let got = psi(&w(input)).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || format!("psi({input}) = {got}"))?;
        slowest = slowest.max(mean_time(1000, || {
            psi(&w(input)).unwrap();
        }));
    }
    ensure(slowest < Duration::from_millis(1), || {
        format!("slowest call took {slowest:?}")
    })?;
    Ok(format!(
        "5 golden maps byte-exact, slowest {slowest:?} per call"
    ))
}

#[derive(Default)]
struct Sweep {
    free: BTreeMap<(usize, usize, usize), u64>,
    prefix: BTreeMap<(usize, usize, usize), u64>,
    cornerless_free: BTreeMap<(usize, usize, usize), u64>,
    cornerless_prefix: BTreeMap<(usize, usize, usize), u64>,
    inverse_errors: Vec<String>,
    run_errors: Vec<String>,
    cornerless_errors: Vec<String>,
    run_checks: u64,
    elapsed: Duration,
}

/// One pass over every word with `m + r <= max_len`, classifying each as a
/// free Motzkin path and/or a Motzkin prefix.
fn sweep(max_len: usize) -> Sweep {
    let start = Instant::now();
    let mut sw = Sweep::default();
    for n in 0..=max_len {
        for word in all_words(n) {
            let (m, r) = (word.nonflat_count(), word.flat_count());
            if is_free_motzkin(&word) {
                let k = width_index_free(&word).unwrap();
                *sw.free.entry((m, r, k)).or_default() += 1;
                match phi(&word) {
                    Ok(s) => {
                        let same_class = is_motzkin_prefix(&s)
                            && width_index_prefix(&s).ok() == Some(k)
                            && s.nonflat_count() == m
                            && s.flat_count() == r;
                        if !same_class || psi(&s).ok().as_ref() != Some(&word) {
                            sw.inverse_errors.push(format!("psi(phi({word})) via {s}"));
                        }
                        if is_member(&word, &FamilySpec::new(Family::CornerlessFree, m, r, k)) {
                            *sw.cornerless_free.entry((m, r, k)).or_default() += 1;
                            if !is_member(&s, &FamilySpec::new(Family::CornerlessPrefix, m, r, k)) {
                                sw.cornerless_errors
                                    .push(format!("phi({word}) = {s} is not cornerless"));
                            }
                        }
                    }
                    Err(e) => sw.inverse_errors.push(format!("phi({word}): {e}")),
                }
                if m > 0 {
                    sw.run_checks += 1;
                    let d = run_delta(&word).unwrap();
                    let ok = d.abs() <= 1
                        && Some(d) == expected_run_delta(&word).ok()
                        && run_class(&word, Side::FreeSide).i == phi(&word).unwrap().run_count();
                    if !ok {
                        sw.run_errors.push(format!("{word}: delta {d}"));
                    }
                }
            }
            if is_motzkin_prefix(&word) {
                let k = width_index_prefix(&word).unwrap();
                *sw.prefix.entry((m, r, k)).or_default() += 1;
                if is_member(&word, &FamilySpec::new(Family::CornerlessPrefix, m, r, k)) {
                    *sw.cornerless_prefix.entry((m, r, k)).or_default() += 1;
                }
                if psi(&word).and_then(|p| phi(&p)).ok().as_ref() != Some(&word) {
                    sw.inverse_errors.push(format!("phi(psi({word}))"));
                }
            }
        }
    }
    sw.elapsed = start.elapsed();
    sw
}

fn criterion_2(sw: &Sweep) -> Outcome {
    ensure(sw.inverse_errors.is_empty(), || {
        format!(
            "{} failures, first {}",
            sw.inverse_errors.len(),
            sw.inverse_errors[0]
        )
    })?;
    ensure(sw.free == sw.prefix, || {
        "per-(m,r,k) cardinalities differ".into()
    })?;
    ensure(sw.free.keys().all(|&(m, _, k)| k <= m + 1), || {
        "width index above m+1".into()
    })?;
    ensure(sw.elapsed < Duration::from_secs(120), || {
        format!("took {:?}", sw.elapsed)
    })?;
    let total: u64 = sw.free.values().sum();
    Ok(format!(
        "{total} pairs over {} classes, single worker {:.2?}",
        sw.free.len(),
        sw.elapsed
    ))
}

fn criterion_3(sw: &Sweep) -> Outcome {
    ensure(sw.run_errors.is_empty(), || {
        format!(
            "{} failures, first {}",
            sw.run_errors.len(),
            sw.run_errors[0]
        )
    })?;
    let (a, b) = (
        w("dduuuuudddddduuu").run_count(),
        w("uuuuuuddduuuddud").run_count(),
    );
    ensure((a, b) == (4, 6), || {
        format!("fixture pair gives {a} and {b}")
    })?;
    Ok(format!(
        "{} paths, fixture pair runs 4 and 6",
        sw.run_checks
    ))
}

fn criterion_4(sw: &Sweep) -> Outcome {
    ensure(sw.cornerless_errors.is_empty(), || {
        sw.cornerless_errors[0].clone()
    })?;
    ensure(sw.cornerless_free == sw.cornerless_prefix, || {
        "cornerless cardinalities differ".into()
    })?;
    let total: u64 = sw.cornerless_free.values().sum();
    Ok(format!("{total} cornerless pairs"))
}

fn criterion_5() -> Outcome {
    for (row, t) in (2..=6).enumerate() {
        for m in 1..=8 {
            let got = cc(t, m);
            ensure(got == big(TABLE_CC[row][m - 1]), || {
                format!("cc({t},{m}) = {got}")
            })?;
        }
    }
    for t in 2..=6 {
        for m in 0..=6 {
            let brute = cornerless_motzkin(m, t - 1).len() as u64;
            ensure(cc(t, m) == big(brute), || {
                format!("cc({t},{m}) = {} but {brute} paths", cc(t, m))
            })?;
        }
    }
    Ok("40 cells, brute force t<=6 m<=6".into())
}

fn criterion_6() -> Outcome {
    for (row, j) in (1..=5).enumerate() {
        for t in [2 * j, 2 * j + 1] {
            for m in 1..=8 {
                let got = scc(t, m);
                ensure(got == big(TABLE_SCC[row][m - 1]), || {
                    format!("scc({t},{m}) = {got}")
                })?;
            }
        }
    }
    for t in (2..=40).step_by(2) {
        for m in 0..=20 {
            ensure(scc(t, m) == scc(t + 1, m), || {
                format!("scc({t},{m}) != scc({},{m})", t + 1)
            })?;
        }
    }
    for t in 2..=7 {
        for m in 0..=6 {
            let brute = cornerless_motzkin(m, t - 1)
                .iter()
                .filter(|p| p.is_symmetric())
                .count() as u64;
            ensure(scc(t, m) == big(brute), || {
                format!("scc({t},{m}) = {} but {brute} paths", scc(t, m))
            })?;
        }
    }
    Ok("80 cells, even/odd rows equal, brute force t<=7 m<=6".into())
}

fn criterion_7() -> Outcome {
    let triples = [
        ("4,4,2,2", "0,0,2,2", "fuuffdd"),
        ("2,2,2,1,1,1", "0,2,2,2", "uufffdd"),
        ("3,3,1,1,1", "0,1,2,2", "ufuffdd"),
        ("5,2,2", "0,0,1,2", "fufufdd"),
        ("6,3", "0,0,0,2", "ffuufdd"),
        ("3,3,1,1", "0,2,2,0", "uuffddf"),
        ("4,2,2", "0,0,2,1", "fuufdfd"),
        ("2,2,1,1,1", "0,2,2,1", "uuffdfd"),
        ("4,1,1,1", "0,1,1,2", "uffufdd"),
        ("5,2", "0,0,2,0", "fuufddf"),
        ("3,1,1,1", "0,1,2,1", "ufufdfd"),
        ("4,1,1", "0,1,2,0", "ufufddf"),
        ("2,1,1,1", "0,2,1,1", "uufdffd"),
        ("3,1,1", "0,2,1,0", "uufdfdf"),
        ("4,1", "0,2,0,0", "uufddff"),
        ("2,1", "0,1,0,1", "ufdfufd"),
    ];
    // every 4-core with 2 corners has at most 12 boxes
    let found: Vec<Partition> = Partition::all_up_to(20)
        .into_iter()
        .filter(|l| l.is_t_core(4) && l.corner_count() == 2)
        .collect();
    ensure(found.len() == 16, || {
        format!("{} four-cores with two corners", found.len())
    })?;
    for lambda in &found {
        let seq = tcore_to_sequence(lambda, 4).map_err(|e| e.to_string())?;
        let path = tcore_to_path(lambda, 4).map_err(|e| e.to_string())?;
        let seq_text = seq
            .values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let row = (lambda.to_string(), seq_text, path.to_string());
        ensure(
            triples
                .iter()
                .any(|&(a, b, c)| (a, b, c) == (&row.0[..], &row.1[..], &row.2[..])),
            || format!("{row:?} not listed"),
        )?;
        ensure(
            path_to_tcore(&path, 4).ok().as_ref() == Some(lambda),
            || format!("{path} does not map back"),
        )?;
    }
    let chains = [
        ("4,4,2,2", "-1,-1", "dffu", "uuff", "uufffdd"),
        ("4,1,1,1", "-1,0", "dfuf", "fuuf", "fuufddf"),
        ("3,1,1", "0,-1", "fdfu", "ufuf", "ufufdfd"),
        ("2,1", "0,1", "fufd", "ufdf", "ufdfufd"),
    ];
    let starred: Vec<String> = found
        .iter()
        .filter(|l| l.is_self_conjugate())
        .map(|l| l.to_string())
        .collect();
    ensure(starred.len() == 4, || {
        format!("{} self-conjugate", starred.len())
    })?;
    for row in chains {
        ensure(starred.iter().any(|s| s == row.0), || {
            format!("{} is not starred", row.0)
        })?;
        check_chain(row, 4, 2)?;
    }
    Ok("16 triples, 4 self-conjugate chains".into())
}

fn check_chain(
    (lambda, seq, free, prefix, sym): (&str, &str, &str, &str, &str),
    t: usize,
    m: usize,
) -> Result<(), String> {
    let l: Partition = lambda.parse().unwrap();
    let e = |e: corepath::Error| e.to_string();
    let n = sc_tcore_to_sequence(&l, t).map_err(e)?;
    let n_text = n
        .values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let f = sc_sequence_to_free_path(&n, m).map_err(e)?;
    let s = free_path_to_prefix(&f).map_err(e)?;
    let y = prefix_to_symmetric(&s, t).map_err(e)?;
    let got = (n_text.as_str(), f.to_string(), s.to_string(), y.to_string());
    ensure(got == (seq, free.into(), prefix.into(), sym.into()), || {
        format!("{lambda}: {got:?}")
    })?;
    ensure(
        sc_tcore_to_symmetric_path(&l, t).ok() == Some(y.clone()),
        || format!("{lambda}: direct chain differs"),
    )?;
    let back = symmetric_path_to_sc_tcore(&y, t).map_err(e)?;
    ensure(back == l, || format!("{sym} returns {back}"))?;
    ensure(prefix_to_free_path(&s).map_err(e)? == f, || {
        format!("{prefix} does not return {free}")
    })
}

fn criterion_8() -> Outcome {
    check_chain(
        ("7,7,4,4,2,2,2", "2,2", "uffdd", "uuuff", "uuuffffddd"),
        5,
        3,
    )?;
    Ok("(7,7,4,4,2,2,2) -> [2,2] -> uffdd -> uuuff -> uuuffffddd -> back".into())
}

fn criterion_9() -> Outcome {
    for n in 0..=14 {
        let mut free = [0u64; 9];
        let mut prefix = [0u64; 9];
        for word in all_words(n).filter(|p| p.flat_count() == 0) {
            if is_free_motzkin(&word) {
                let k = width_index_free(&word).unwrap();
                for c in free.iter_mut().skip(k) {
                    *c += 1;
                }
            }
            if is_motzkin_prefix(&word) {
                let k = width_index_prefix(&word).unwrap();
                for c in prefix.iter_mut().skip(k) {
                    *c += 1;
                }
            }
        }
        for k in 0..=8 {
            let c = cigler_count(n, k);
            ensure(c == big(free[k]) && c == big(prefix[k]), || {
                format!(
                    "n={n} k={k}: formula {c}, free {}, prefix {}",
                    free[k], prefix[k]
                )
            })?;
        }
    }
    Ok("n<=14, k<=8".into())
}

fn criterion_10() -> Outcome {
    for m in 0..=20u64 {
        let mu = m as usize;
        ensure(cc(3, mu) == big(2 * m + 1), || format!("cc(3,{m})"))?;
        ensure(cc(4, mu) == big((5 * m * m + 5 * m + 2) / 2), || {
            format!("cc(4,{m})")
        })?;
        ensure(scc(4, mu) == big(3 * m / 2 + 1), || format!("scc(4,{m})"))?;
        let sign: i64 = if m % 2 == 0 { 1 } else { -1 };
        let mi = m as i64;
        let want = (10 * mi * (mi + 1) + sign * (2 * mi + 1) + 7) / 8;
        ensure(scc(6, mu) == big(want as u64), || format!("scc(6,{m})"))?;
    }
    Ok("four closed forms, m<=20".into())
}

fn criterion_11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_corepath");
    let start = Instant::now();
    let status = Command::new(bin)
        .args(["verify", "all", "--max-size", "10"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    let elapsed = start.elapsed();
    ensure(status.success(), || {
        format!("verify all exited with {status}")
    })?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("verify all took {elapsed:?}")
    })?;
    for case in ["case0", "case1-i", "case1-ii", "case2-i", "case2-ii"] {
        let out = Command::new(bin)
            .args([
                "verify",
                "all",
                "--max-size",
                "10",
                "--inject-mutation",
                case,
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(!out.status.success(), || {
            format!("mutation {case} was not caught")
        })?;
    }
    Ok(format!("verify all in {elapsed:.2?}, 5/5 mutations caught"))
}

fn main() -> ExitCode {
    let sw = sweep(12);
    let results = [
        (1, "golden maps", criterion_1()),
        (2, "inverse property", criterion_2(&sw)),
        (3, "run statistic", criterion_3(&sw)),
        (4, "cornerless restriction", criterion_4(&sw)),
        (5, "cc table", criterion_5()),
        (6, "scc table", criterion_6()),
        (7, "4-cores with 2 corners", criterion_7()),
        (8, "self-conjugate 5-core chain", criterion_8()),
        (9, "Cigler agreement", criterion_9()),
        (10, "closed forms", criterion_10()),
        (11, "verify command", criterion_11()),
    ];
    let mut failed = 0;
    for (n, name, outcome) in results {
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
