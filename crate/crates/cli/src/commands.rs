use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::Path;
use std::str::FromStr;

use octic_core::corpus;
use octic_core::resolution::BranchLocus;
use octic_core::{
    analyze as analyze_planes, classify_elliptic, derive_extended, euler_main, euler_upstairs,
    run, to_descriptor, validate as validate_descriptor, ArrangementDescriptor, Construction,
    EnumerationBounds, EulerResult, GeometryError, IncidenceReport, LedgerError, LedgerRun,
    LedgerState,
};
use serde_json::{json, Value};

use crate::input::{self, Source};
use crate::render;
use crate::{EnumerateArgs, Format, InputArgs, OutputArgs};

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_VIOLATIONS: u8 = 4;
pub const EXIT_LEDGER: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Output already produced before the failure was detected.
    pub stdout: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
            stdout: String::new(),
        }
    }

    fn with_output(mut self, stdout: String) -> Self {
        self.stdout = stdout;
        self
    }
}

type Outcome = Result<String, Failure>;

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

fn load(args: &InputArgs) -> Result<Source, Failure> {
    let loaded = match (&args.input, &args.fixture) {
        (Some(path), _) => input::read_file(path),
        (None, Some(name)) => input::fixture(name),
        (None, None) => unreachable!("clap requires one input"),
    };
    loaded.map_err(|e| Failure::new(EXIT_PARSE, format!("{e:#}")))
}

fn geometry_failure(e: GeometryError) -> Failure {
    let code = match e {
        GeometryError::Violations(_) => EXIT_VIOLATIONS,
        GeometryError::DuplicatePlane { .. } | GeometryError::ZeroPlane | GeometryError::ZeroPoint => EXIT_INVALID,
        _ => EXIT_PARSE,
    };
    Failure::new(code, e)
}

fn ledger_failure(e: LedgerError) -> Failure {
    match e {
        LedgerError::Geometry(g) => geometry_failure(g),
        LedgerError::Arrangement(a) => Failure::new(EXIT_INVALID, a),
        other => Failure::new(EXIT_LEDGER, other),
    }
}

/// Descriptor of the source, analysing plane lists first.
fn descriptor_of(source: Source) -> Result<(ArrangementDescriptor, Option<IncidenceReport>), Failure> {
    match source {
        Source::Descriptor(d) => Ok((d, None)),
        Source::Planes { planes, .. } => {
            let report = analyze_planes(&planes).map_err(geometry_failure)?;
            let desc = to_descriptor(&report).map_err(geometry_failure)?;
            Ok((desc, Some(report)))
        }
    }
}

/// Euler number by the path appropriate for the descriptor.
fn evaluate(desc: &ArrangementDescriptor) -> Result<EulerResult, Failure> {
    let report = validate_descriptor(desc);
    if !report.is_valid() {
        return Err(Failure::new(EXIT_INVALID, format!("invalid descriptor: {report}")));
    }
    let result = if desc.elliptic_case.is_some() {
        classify_elliptic(desc)
    } else {
        euler_main(desc)
    };
    result.map_err(|e| Failure::new(EXIT_INVALID, e))
}

fn ledger_run(desc: &ArrangementDescriptor, report: Option<&IncidenceReport>) -> Result<LedgerRun, Failure> {
    match report {
        Some(report) => BranchLocus::from_report(report)
            .and_then(|locus| locus.resolve())
            .map(|r| r.run)
            .map_err(ledger_failure),
        None => LedgerState::from_descriptor(desc)
            .and_then(|state| run(&state))
            .map_err(ledger_failure),
    }
}

pub fn euler(args: &InputArgs, out: OutputArgs) -> Outcome {
    let (desc, analysed) = descriptor_of(load(args)?)?;
    let validation = validate_descriptor(&desc);
    let human_head = render::descriptor_human(&desc) + &render::validation_human(&validation);
    let result = evaluate(&desc).map_err(|f| {
        let head = match out.format {
            Format::Human => human_head.clone(),
            Format::Structured => String::new(),
        };
        f.with_output(head)
    })?;
    let upstairs = if desc.elliptic_case.is_none() {
        derive_extended(&desc).ok().map(|ext| euler_upstairs(&ext).value)
    } else {
        None
    };
    let trace = if out.trace && desc.elliptic_case.is_none() {
        Some(ledger_run(&desc, analysed.as_ref())?)
    } else {
        None
    };

    Ok(match out.format {
        Format::Structured => json_text(&json!({
            "descriptor": desc,
            "validation": render::validation_json(&validation),
            "result": result,
            "upstairs": upstairs,
            "ledger": trace.as_ref().map(render::run_json),
        })),
        Format::Human => {
            let mut text = human_head;
            text.push_str(&render::result_human(&result));
            if let Some(u) = upstairs {
                let _ = writeln!(text, "upstairs    {u}");
            }
            if let Some(run) = &trace {
                text.push_str(&render::run_human(run));
                let _ = writeln!(text, "ledger      {}", run.result.value);
            }
            text
        }
    })
}

pub fn analyze(args: &InputArgs, out: OutputArgs) -> Outcome {
    let Source::Planes { planes, .. } = load(args)? else {
        return Err(Failure::new(EXIT_PARSE, "analyze needs a plane list, got a descriptor"));
    };
    let report = analyze_planes(&planes).map_err(geometry_failure)?;
    let head = match out.format {
        Format::Human => render::report_human(&planes, &report),
        Format::Structured => String::new(),
    };
    if !report.violations.is_empty() {
        let stdout = match out.format {
            Format::Human => head,
            Format::Structured => json_text(&json!({ "report": render::report_json(&planes, &report) })),
        };
        return Err(Failure::new(
            EXIT_VIOLATIONS,
            format!("{} violation(s) of the resolution hypotheses; no Euler number", report.violations.len()),
        )
        .with_output(stdout));
    }
    let desc = to_descriptor(&report).map_err(geometry_failure)?;
    let validation = validate_descriptor(&desc);
    let result = evaluate(&desc);
    let trace = match (&result, out.trace) {
        (Ok(_), true) => Some(ledger_run(&desc, Some(&report))?),
        _ => None,
    };

    let text = match out.format {
        Format::Structured => json_text(&json!({
            "report": render::report_json(&planes, &report),
            "descriptor": desc,
            "validation": render::validation_json(&validation),
            "result": result.as_ref().ok(),
            "ledger": trace.as_ref().map(render::run_json),
        })),
        Format::Human => {
            let mut text = head;
            text.push_str(&render::descriptor_human(&desc));
            text.push_str(&render::validation_human(&validation));
            if let Ok(r) = &result {
                text.push_str(&render::result_human(r));
            }
            if let Some(run) = &trace {
                text.push_str(&render::run_human(run));
            }
            text
        }
    };
    match result {
        Ok(_) => Ok(text),
        Err(f) => Err(f.with_output(text)),
    }
}

pub fn resolve(args: &InputArgs, out: OutputArgs) -> Outcome {
    let (desc, analysed) = descriptor_of(load(args)?)?;
    if desc.elliptic_case.is_some() {
        return Err(Failure::new(
            EXIT_INVALID,
            "arrangements with a triple elliptic curve have no ledger worklist; use `euler`",
        ));
    }
    let closed = evaluate(&desc)?;
    let ledger = ledger_run(&desc, analysed.as_ref())?;
    let agree = ledger.result.value == closed.value;

    let text = match out.format {
        Format::Structured => json_text(&json!({
            "descriptor": desc,
            "source": if analysed.is_some() { "planes" } else { "descriptor" },
            "ledger": render::run_json(&ledger),
            "closed_form": closed.value,
            "agreement": agree,
        })),
        Format::Human => {
            let mut text = render::descriptor_human(&desc);
            text.push_str(&render::run_human(&ledger));
            let _ = writeln!(text, "e(Y) = {} (ledger)", ledger.result.value);
            let _ = writeln!(text, "e(Y) = {} (closed form)", closed.value);
            let _ = writeln!(text, "agreement {}", if agree { "ok" } else { "MISMATCH" });
            text
        }
    };
    if agree {
        Ok(text)
    } else {
        Err(Failure::new(
            EXIT_LEDGER,
            format!("ledger gives {}, closed form gives {}", ledger.result.value, closed.value),
        )
        .with_output(text))
    }
}

pub fn validate(args: &InputArgs, out: OutputArgs) -> Outcome {
    let (desc, _) = descriptor_of(load(args)?)?;
    let report = validate_descriptor(&desc);
    let text = match out.format {
        Format::Structured => json_text(&json!({
            "descriptor": desc,
            "validation": render::validation_json(&report),
        })),
        Format::Human => render::descriptor_human(&desc) + &render::validation_human(&report),
    };
    if report.is_valid() {
        Ok(text)
    } else {
        Err(Failure::new(EXIT_INVALID, format!("invalid descriptor: {report}")).with_output(text))
    }
}

struct Row {
    desc: ArrangementDescriptor,
    value: i64,
}

/// Evaluates one catalogue row three ways and insists they agree.
fn table_row(index: usize, desc: ArrangementDescriptor) -> Result<Row, Failure> {
    let name = format!("row {index} {desc}");
    let closed = euler_main(&desc).map_err(|e| Failure::new(EXIT_INVALID, format!("{name}: {e}")))?;
    let ext = derive_extended(&desc).map_err(|e| Failure::new(EXIT_INVALID, format!("{name}: {e}")))?;
    let upstairs = euler_upstairs(&ext).value;
    let ledger = LedgerState::from_descriptor(&desc)
        .and_then(|s| run(&s))
        .map_err(|e| Failure::new(EXIT_LEDGER, format!("{name}: {e}")))?
        .result
        .value;
    if closed.value != upstairs || closed.value != ledger {
        return Err(Failure::new(
            EXIT_LEDGER,
            format!("{name}: closed form {}, upstairs {upstairs}, ledger {ledger}", closed.value),
        ));
    }
    Ok(Row { desc, value: closed.value })
}

fn cell(v: i64) -> String {
    if v == 0 {
        String::new()
    } else {
        v.to_string()
    }
}

pub fn table(out: OutputArgs) -> Outcome {
    let rows = corpus::catalogue()
        .into_iter()
        .enumerate()
        .map(|(i, d)| table_row(i + 1, d))
        .collect::<Result<Vec<_>, _>>()?;
    let elliptic = corpus::elliptic()
        .into_iter()
        .map(|d| {
            classify_elliptic(&d)
                .map(|r| Row { desc: d, value: r.value })
                .map_err(|e| Failure::new(EXIT_INVALID, e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let distinct: BTreeSet<i64> = rows.iter().map(|r| r.value).collect();

    Ok(match out.format {
        Format::Structured => json_text(&json!({
            "rows": rows.iter().enumerate().map(|(i, r)| json!({
                "row": i + 1,
                "descriptor": r.desc,
                "euler": r.value,
            })).collect::<Vec<_>>(),
            "elliptic": elliptic.iter().map(|r| json!({
                "descriptor": r.desc,
                "euler": r.value,
            })).collect::<Vec<_>>(),
            "distinct_values": distinct.len(),
        })),
        Format::Human => {
            let mut text = format!(
                "{:>3}  {:<16}{:>5}{:>5}{:>5}{:>5}{:>5}{:>5}{:>7}\n",
                "#", "degrees", "p4_0", "p4_1", "p5_0", "p5_1", "p5_2", "l3", "e(Y)"
            );
            for (i, r) in rows.iter().enumerate() {
                let d = &r.desc;
                let degrees: Vec<String> = d.sorted_degrees().iter().map(u32::to_string).collect();
                let _ = writeln!(
                    text,
                    "{:>3}  {:<16}{:>5}{:>5}{:>5}{:>5}{:>5}{:>5}{:>7}",
                    i + 1,
                    degrees.join(","),
                    cell(d.p4_0),
                    cell(d.p4_1),
                    cell(d.p5_0),
                    cell(d.p5_1),
                    cell(d.p5_2),
                    cell(d.l3),
                    r.value
                );
            }
            let (lo, hi) = (distinct.first().copied().unwrap_or(0), distinct.last().copied().unwrap_or(0));
            let _ = writeln!(text, "{} rows, {} distinct values from {lo} to {hi}", rows.len(), distinct.len());
            let _ = writeln!(text, "\ntriple elliptic curve");
            for r in &elliptic {
                let case = r.desc.elliptic_case.map(|c| c.to_string()).unwrap_or_default();
                let _ = writeln!(text, "  {case}  {}  e(Y) = {}", r.desc, r.value);
            }
            text
        }
    })
}

pub fn examples(name: Option<&str>, output: Option<&Path>, format: Format) -> Outcome {
    let Some(name) = name else {
        let entries: Vec<Value> = Construction::registry()
            .into_iter()
            .map(|c| {
                let advertised = euler_main(&c.advertised()).ok().map(|r| r.value);
                let realised = c
                    .planes()
                    .and_then(|p| analyze_planes(&p))
                    .and_then(|r| to_descriptor(&r))
                    .ok();
                let realised_euler = realised.as_ref().and_then(|d| euler_main(d).ok()).map(|r| r.value);
                json!({
                    "name": c.name(),
                    "euler": advertised,
                    "certified": realised.as_ref() == Some(&c.advertised()),
                    "realised": realised.map(|d| d.to_string()),
                    "realised_euler": realised_euler,
                })
            })
            .collect();
        return Ok(match format {
            Format::Structured => json_text(&Value::Array(entries)),
            Format::Human => {
                let mut text = String::new();
                for e in &entries {
                    let _ = write!(text, "{:<22}{:>5}", e["name"].as_str().unwrap_or(""), e["euler"].to_string());
                    if e["certified"] != json!(true) {
                        let _ = write!(
                            text,
                            "  not certified: realises {} with e(Y) = {}",
                            e["realised"].as_str().unwrap_or("-"),
                            e["realised_euler"]
                        );
                    }
                    text.push('\n');
                }
                text
            }
        });
    };
    let doc = if let Some(desc) = corpus::descriptor_fixture(name) {
        input::write_descriptor(&desc)
    } else {
        let construction = Construction::from_str(name).map_err(|e| {
            let names: Vec<String> = Construction::registry().iter().map(Construction::name).collect();
            Failure::new(
                EXIT_PARSE,
                format!("{e}; available: {}, or a descriptor fixture such as row-12", names.join(", ")),
            )
        })?;
        let planes = construction.planes().map_err(geometry_failure)?;
        input::write_planes(Some(name), &planes)
    };
    match output {
        Some(path) => {
            std::fs::write(path, &doc)
                .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(doc),
    }
}

fn parse_degrees(text: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(|d| d.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new(EXIT_PARSE, format!("bad degree list {text:?}: {e}")))
}

pub fn enumerate(args: &EnumerateArgs, out: OutputArgs) -> Outcome {
    let mut bounds = EnumerationBounds::catalogue_ranges();
    if !args.degrees.is_empty() {
        bounds.degree_sets = args.degrees.iter().map(|d| parse_degrees(d)).collect::<Result<_, _>>()?;
    }
    for (field, value) in [
        (&mut bounds.p4_0, args.max_p4_0),
        (&mut bounds.p4_1, args.max_p4_1),
        (&mut bounds.p5_0, args.max_p5_0),
        (&mut bounds.p5_1, args.max_p5_1),
        (&mut bounds.p5_2, args.max_p5_2),
        (&mut bounds.l3, args.max_l3),
    ] {
        if let Some(v) = value {
            *field = v;
        }
    }
    let found: Vec<(ArrangementDescriptor, i64)> = octic_core::enumerate_descriptors(&bounds)
        .map(|(d, r)| (d, r.value))
        .collect();
    let distinct: BTreeSet<i64> = found.iter().map(|(_, v)| *v).collect();

    Ok(match out.format {
        Format::Structured => json_text(&json!({
            "count": found.len(),
            "distinct_values": distinct,
            "descriptors": if args.list {
                Some(found.iter().map(|(d, v)| json!({ "descriptor": d, "euler": v })).collect::<Vec<_>>())
            } else {
                None
            },
        })),
        Format::Human => {
            let mut text = String::new();
            if args.list {
                for (d, v) in &found {
                    let _ = writeln!(text, "{v:>6}  {d}");
                }
            }
            let values: Vec<String> = distinct.iter().map(i64::to_string).collect();
            let _ = writeln!(text, "{} descriptors, {} distinct values", found.len(), distinct.len());
            let _ = writeln!(text, "{}", values.join(" "));
            text
        }
    })
}
