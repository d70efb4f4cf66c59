use std::io::{self, BufWriter, Write};

use corepath::bijection::{phi, psi, PhiCase};
use corepath::core_maps::{convert, ConversionRecord, Representation};
use corepath::counting::table::{CountTable, Formula};
use corepath::counting::{count, enumerate};
use corepath::path::{parse_path, width_index_free, width_index_prefix, Family, FamilySpec};
use corepath::verify::{self, Suite, SuiteReport, VerifyOptions};
use corepath::Error;
use serde_json::json;

use crate::args::{
    Cli, Command, ConvertArgs, CountArgs, Direction, EnumerateArgs, FamilyArg, Format, FormulaArg,
    From, MapArgs, MutationArg, SuiteArg, VerifyArgs,
};
use crate::range::parse_range;
use crate::Status;

fn input_error(e: Error) -> Status {
    Status::InputError(format!("{}: {e}", e.name()))
}

/// Write `text` to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Status {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Status::Ok,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Status::Ok,
        Err(e) => Status::InputError(format!("writing output: {e}")),
    }
}

fn csv_text(rows: &[Vec<String>]) -> Result<String, Status> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row)
            .map_err(|e| Status::InputError(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Status::InputError(format!("csv: {e}")))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

pub fn run(cli: &Cli) -> Status {
    let result = match &cli.command {
        Command::Map(a) => map(a, cli.format),
        Command::Convert(a) => convert_cmd(a, cli.format),
        Command::Count(a) => count_cmd(a, cli.format),
        Command::Enumerate(a) => enumerate_cmd(a, cli.format),
        Command::Verify(a) => verify_cmd(a, cli.format),
    };
    result.unwrap_or_else(|status| status)
}

fn map(a: &MapArgs, format: Format) -> Result<Status, Status> {
    let p = parse_path(&a.path).map_err(input_error)?;
    let (name, image, k) = match a.direction {
        Direction::Phi => ("phi", phi(&p), width_index_free(&p)),
        Direction::Psi => ("psi", psi(&p), width_index_prefix(&p)),
    };
    let image = image.map_err(input_error)?;
    let k = k.map_err(input_error)?;
    let (m, r) = (p.nonflat_count(), p.flat_count());
    let text = match format {
        Format::Plain => format!(
            "{name}\ninput:  {p} (m={m}, r={r}, k={k})\noutput: {image} (m={m}, r={r}, k={k})\n"
        ),
        Format::Json => {
            format!(
                "{}\n",
                json!({"input": p.to_string(), "output": image.to_string(), "m": m, "r": r, "k": k})
            )
        }
        Format::Csv => csv_text(&[
            vec![
                "input".into(),
                "output".into(),
                "m".into(),
                "r".into(),
                "k".into(),
            ],
            vec![
                p.to_string(),
                image.to_string(),
                m.to_string(),
                r.to_string(),
                k.to_string(),
            ],
        ])?,
    };
    Ok(emit(&text))
}

fn record_fields(r: &ConversionRecord) -> Vec<(&'static str, String)> {
    let seq: Vec<String> = r.sequence.iter().map(ToString::to_string).collect();
    let mut fields = vec![
        ("partition", r.partition.to_string()),
        ("sequence", format!("[{}]", seq.join(","))),
    ];
    let paths = [
        ("path", &r.path),
        ("free_path", &r.free_path),
        ("prefix", &r.prefix),
        ("symmetric_path", &r.symmetric_path),
    ];
    for (name, value) in paths {
        if let Some(p) = value {
            fields.push((name, p.to_string()));
        }
    }
    fields.push(("t", r.t.to_string()));
    fields.push(("corners", r.corners.to_string()));
    fields.push(("k_min", r.k_min.to_string()));
    fields
}

fn convert_cmd(a: &ConvertArgs, format: Format) -> Result<Status, Status> {
    let from = match a.from {
        From::Partition => Representation::Partition,
        From::Sequence => Representation::Sequence,
        From::Path => Representation::Path,
        From::Prefix => Representation::Prefix,
        From::Symmetric => Representation::Symmetric,
    };
    let record = convert(a.t, from, &a.value, a.self_conjugate).map_err(input_error)?;
    let fields = record_fields(&record);
    let text = match format {
        Format::Plain => fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&record).map_err(|e| Status::InputError(e.to_string()))?
        ),
        Format::Csv => csv_text(&[
            fields.iter().map(|(k, _)| k.to_string()).collect(),
            fields.iter().map(|(_, v)| v.clone()).collect(),
        ])?,
    };
    Ok(emit(&text))
}

fn count_cmd(a: &CountArgs, format: Format) -> Result<Status, Status> {
    let formula = match a.formula {
        FormulaArg::Cc => Formula::Cc,
        FormulaArg::Scc => Formula::Scc,
        FormulaArg::Cigler => Formula::Cigler,
        FormulaArg::Narayana => Formula::Narayana,
        FormulaArg::Sympeaks => Formula::SymPeaks,
    };
    let table = if a.paper_tables {
        match formula {
            Formula::Cc => CountTable::cc_reference_layout(),
            Formula::Scc => CountTable::scc_reference_layout().map_err(input_error)?,
            _ => {
                return Err(Status::InputError(
                    "--paper-tables applies to cc and scc only".into(),
                ))
            }
        }
    } else {
        let given = [
            ("t", &a.t),
            ("m", &a.m),
            ("n", &a.n),
            ("k", &a.k),
            ("i", &a.i),
        ];
        let (row_name, col_name) = formula.labels();
        for (flag, value) in given {
            if value.is_some() && flag != row_name && flag != col_name {
                return Err(Status::InputError(format!(
                    "--{flag} does not apply to {}",
                    formula.name()
                )));
            }
        }
        let pick = |name: &str, default: &str| -> Result<Vec<usize>, Status> {
            let text = given
                .iter()
                .find(|(f, _)| *f == name)
                .and_then(|(_, v)| v.as_deref())
                .unwrap_or(default);
            parse_range(text).map_err(Status::InputError)
        };
        let (rows, cols) = match formula {
            Formula::Cc => (pick("t", "2..6")?, pick("m", "1..8")?),
            Formula::Scc => (pick("t", "2..11")?, pick("m", "1..8")?),
            Formula::Cigler => (pick("n", "0..14")?, pick("k", "0..8")?),
            Formula::Narayana | Formula::SymPeaks => (pick("m", "1..8")?, pick("i", "1..8")?),
        };
        if formula == Formula::Scc && rows.contains(&0) {
            return Err(Status::InputError("scc needs t >= 2".into()));
        }
        if formula == Formula::Cc && rows.contains(&0) {
            return Err(Status::InputError("cc needs t >= 1".into()));
        }
        CountTable::build(formula, &rows, &cols).map_err(input_error)?
    };
    let text = match format {
        Format::Plain => table.to_string(),
        Format::Json => format!("{}\n", table.to_json()),
        Format::Csv => table.to_csv().map_err(input_error)?,
    };
    Ok(emit(&text))
}

fn family_spec(a: &EnumerateArgs) -> Result<FamilySpec, Status> {
    let family = match a.family {
        FamilyArg::Fbar => Family::FreeMotzkin,
        FamilyArg::Mbar => Family::MotzkinPrefix,
        FamilyArg::FbarC => Family::CornerlessFree,
        FamilyArg::MbarC => Family::CornerlessPrefix,
        FamilyArg::Cornerless => Family::CornerlessMotzkin,
        FamilyArg::Symmetric => Family::SymmetricCornerlessMotzkin,
    };
    let missing = |flag: &str| {
        Status::InputError(format!(
            "--{flag} is required for --family {}",
            family.short_name()
        ))
    };
    if family.is_bounded() {
        if a.len.is_some() || a.flats.is_some() {
            return Err(Status::InputError(
                "--len/--flats apply to the cornerless and symmetric families".into(),
            ));
        }
        let m = a.m.ok_or_else(|| missing("m"))?;
        let k = a.k.ok_or_else(|| missing("k"))?;
        return Ok(FamilySpec::new(family, m, a.r.unwrap_or(0), k));
    }
    match (a.len, a.flats, a.m, a.r) {
        (Some(len), Some(flats), None, None) => FamilySpec::by_length(family, len, flats)
            .ok_or_else(|| Status::InputError(format!("{flats} flats do not fit in length {len}"))),
        (None, None, Some(m), r) => Ok(FamilySpec::new(family, m, r.unwrap_or(0), 0)),
        _ => Err(Status::InputError(
            "give either --len and --flats, or --m and --r".into(),
        )),
    }
}

fn enumerate_cmd(a: &EnumerateArgs, format: Format) -> Result<Status, Status> {
    let spec = family_spec(a)?;
    let total = count(&spec);
    let name = spec.family.short_name();
    let (m, r, k) = (spec.m, spec.r, spec.k);
    if a.count_only {
        let text = match format {
            Format::Plain => format!("{total}\n"),
            Format::Json => format!(
                "{}\n",
                json!({"family": name, "m": m, "r": r, "k": k, "count": total.to_string()})
            ),
            Format::Csv => csv_text(&[
                vec![
                    "family".into(),
                    "m".into(),
                    "r".into(),
                    "k".into(),
                    "count".into(),
                ],
                vec![
                    name.into(),
                    m.to_string(),
                    r.to_string(),
                    k.to_string(),
                    total.to_string(),
                ],
            ])?,
        };
        return Ok(emit(&text));
    }
    if total > a.cap.into() {
        return Err(input_error(Error::CapExceeded {
            count: total.to_string(),
            cap: a.cap,
        }));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let written = (|| -> io::Result<()> {
        match format {
            Format::Plain => {
                for w in enumerate(spec) {
                    writeln!(out, "{w}")?;
                }
            }
            Format::Csv => {
                writeln!(out, "word")?;
                for w in enumerate(spec) {
                    writeln!(out, "{w}")?;
                }
            }
            Format::Json => {
                write!(out, "{{\"family\":\"{name}\",\"m\":{m},\"r\":{r},\"k\":{k},\"count\":\"{total}\",\"words\":[")?;
                for (i, w) in enumerate(spec).enumerate() {
                    write!(out, "{}\"{w}\"", if i == 0 { "" } else { "," })?;
                }
                writeln!(out, "]}}")?;
            }
        }
        out.flush()
    })();
    match written {
        Ok(()) => Ok(Status::Ok),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(Status::Ok),
        Err(e) => Err(Status::InputError(format!("writing output: {e}"))),
    }
}

fn plain_report(reports: &[SuiteReport], timing: bool) -> String {
    let mut s = String::new();
    for rep in reports {
        s.push_str(&format!("== {} ==\n", rep.suite));
        for p in &rep.properties {
            let verdict = if p.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{verdict}  {} [{} checks]\n",
                p.property, p.checked
            ));
            if let Some(c) = &p.counterexample {
                s.push_str(&format!("      counterexample: {c}\n"));
            }
        }
        for d in &rep.details {
            s.push_str(&format!("  {d}\n"));
        }
        if timing {
            s.push_str(&format!("  elapsed: {} ms\n", rep.elapsed_ms));
        }
    }
    let ok = reports.iter().all(SuiteReport::passed);
    s.push_str(&format!("overall: {}\n", if ok { "PASS" } else { "FAIL" }));
    s
}

fn verify_cmd(a: &VerifyArgs, format: Format) -> Result<Status, Status> {
    let suite = match a.suite {
        SuiteArg::Bijection => Suite::Bijection,
        SuiteArg::Runs => Suite::Runs,
        SuiteArg::Cornerless => Suite::Cornerless,
        SuiteArg::Tcore => Suite::TCore,
        SuiteArg::SelfConjugate => Suite::SelfConjugate,
        SuiteArg::Counts => Suite::Counts,
        SuiteArg::All => Suite::All,
    };
    let mutation = a.inject_mutation.map(|m| match m {
        MutationArg::Case0 => PhiCase::Case0,
        MutationArg::Case1NoBreak => PhiCase::Case1NoBreak,
        MutationArg::Case1Break => PhiCase::Case1Break,
        MutationArg::Case2NoBreak => PhiCase::Case2NoBreak,
        MutationArg::Case2Break => PhiCase::Case2Break,
    });
    let workers = a.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    if workers == 0 {
        return Err(Status::InputError("--workers must be at least 1".into()));
    }
    let opts = VerifyOptions {
        max_size: a.max_size,
        workers,
        mutation,
    };
    let reports = verify::run(suite, &opts);
    let ok = reports.iter().all(SuiteReport::passed);
    let text = match format {
        Format::Plain => plain_report(&reports, a.timing),
        Format::Json => {
            let suites: Vec<_> = reports
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "suite": r.suite,
                        "passed": r.passed(),
                        "properties": r.properties,
                        "details": r.details,
                    });
                    if a.timing {
                        v["elapsed_ms"] = json!(r.elapsed_ms as u64);
                    }
                    v
                })
                .collect();
            format!(
                "{}\n",
                json!({"passed": ok, "max_size": a.max_size, "suites": suites})
            )
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "suite".into(),
                "property".into(),
                "checked".into(),
                "passed".into(),
                "counterexample".into(),
            ]];
            for r in &reports {
                for p in &r.properties {
                    rows.push(vec![
                        r.suite.clone(),
                        p.property.clone(),
                        p.checked.to_string(),
                        p.passed.to_string(),
                        p.counterexample.clone().unwrap_or_default(),
                    ]);
                }
            }
            csv_text(&rows)?
        }
    };
    emit(&text);
    Ok(if ok {
        Status::Ok
    } else {
        Status::VerificationFailed
    })
}
