use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use faber::audit::{
    default_audit_grid, full_audit, mandatory_passed, theorem1_falsifier, theorem2_falsifier, Execution,
    SampleMode,
};
use faber::bounds::{bound_a2, bound_a3, fekete_record, general_an_record, specialize, BoundRecord, Specialization};
use faber::faber::{bell_d, faber_k, leading_an_coefficient, operator_expansion, ClassParams};
use faber::scalar::{format_rational, parse_rational};
use faber::series::{NormalizedSeries, SeriesJson, DEFAULT_ORDER, MAX_ORDER};
use faber::{MPoly, NumericSeries, SymbolicSeries};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::grid::parse_grid;
use crate::{
    BoundsArgs, Cli, CliError, Command, Format, InvertArgs, ParamArgs, SampleArgs, TargetArg, TheoremArg,
    EXIT_FAILURE, EXIT_OK,
};

type CmdResult = Result<i32, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let mut sink = Sink { cli, stdout };
    match &cli.command {
        Command::Kp { n, p } => cmd_kp(cli, &mut sink, *n, *p),
        Command::Bell { n, m } => cmd_bell(cli, &mut sink, *n, *m),
        Command::Invert(args) => cmd_invert(cli, &mut sink, args),
        Command::Operator { params, n } => cmd_operator(cli, &mut sink, params, *n),
        Command::Bounds(args) => cmd_bounds(cli, &mut sink, args),
        Command::Audit { params } => cmd_audit(cli, &mut sink, stderr, params),
        Command::Sample(args) => cmd_sample(cli, &mut sink, stderr, args),
    }
}

/// Main output: `--out` file or stdout.
struct Sink<'a> {
    cli: &'a Cli,
    stdout: &'a mut dyn Write,
}

impl Sink<'_> {
    fn to_file(&self) -> bool {
        self.cli.out.is_some()
    }

    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        match &self.cli.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string())),
        }
    }
}

fn format_of(cli: &Cli, default: Format) -> Format {
    cli.format.unwrap_or(default)
}

fn resolve_order(cli: &Cli, default: usize) -> Result<usize, CliError> {
    let order = cli.order.unwrap_or(default);
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(usage(format!("--order {order} must lie in 1..={MAX_ORDER}")));
    }
    Ok(order)
}

fn to_json_text<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------

fn poly_output(poly: &MPoly, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", poly.to_json()),
        Format::Text | Format::Csv => format!("{poly}\n"),
    }
}

fn cmd_kp(cli: &Cli, sink: &mut Sink, n: usize, p: i64) -> CmdResult {
    let order = resolve_order(cli, DEFAULT_ORDER.max(n))?;
    let k = faber_k(n, p, order).map_err(|e| usage(e.to_string()))?;
    sink.emit(&poly_output(&k, format_of(cli, Format::Text)))?;
    Ok(EXIT_OK)
}

fn cmd_bell(cli: &Cli, sink: &mut Sink, n: u32, m: u32) -> CmdResult {
    let d = bell_d(n, m).map_err(|e| usage(e.to_string()))?;
    sink.emit(&poly_output(&d, format_of(cli, Format::Text)))?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------

enum InvertInput {
    Symbolic(SymbolicSeries),
    Numeric(NumericSeries),
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(e.to_string()))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn numeric_entry(v: &Value) -> Option<Complex64> {
    match v {
        Value::Number(n) => n.as_f64().map(|re| Complex64::new(re, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Some(Complex64::new(pair[0].as_f64()?, pair[1].as_f64()?)),
        _ => None,
    }
}

fn parse_series_file(text: &str) -> Result<InvertInput, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| usage(format!("input is not valid JSON: {e}")))?;
    let coeffs = value
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| usage("input needs a \"coeffs\" array"))?;
    let numeric: Option<Vec<Complex64>> = coeffs.iter().map(numeric_entry).collect();
    if let Some(values) = numeric {
        if values.is_empty() || values[0] != Complex64::new(1.0, 0.0) {
            return Err(usage("numeric coeffs list z^1..z^N and must start with 1"));
        }
        if let Some(order) = value.get("order").and_then(Value::as_u64) {
            if order as usize != values.len() {
                return Err(usage(format!("order {order} does not match {} coefficients", values.len())));
            }
        }
        if values.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(usage("numeric coefficients must be finite"));
        }
        return Ok(InvertInput::Numeric(NormalizedSeries::from_tail(values[1..].to_vec())));
    }
    let json: SeriesJson = serde_json::from_value(value).map_err(|e| usage(format!("bad series JSON: {e}")))?;
    let series = SymbolicSeries::from_json_value(&json).map_err(|e| usage(e.to_string()))?;
    Ok(InvertInput::Symbolic(series))
}

fn check_input_order(order: usize) -> Result<(), CliError> {
    if order > MAX_ORDER {
        return Err(usage(format!("series order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn cmd_invert(cli: &Cli, sink: &mut Sink, args: &InvertArgs) -> CmdResult {
    let sources = [args.input.is_some(), args.generic, args.coeffs.is_some()];
    if sources.iter().filter(|s| **s).count() != 1 {
        return Err(usage("invert needs exactly one of --input, --generic, --coeffs"));
    }
    let input = if let Some(path) = &args.input {
        let parsed = parse_series_file(&read_input(path)?)?;
        let order = match &parsed {
            InvertInput::Symbolic(s) => s.order(),
            InvertInput::Numeric(s) => s.order(),
        };
        check_input_order(order)?;
        match (parsed, cli.order) {
            (parsed, None) => parsed,
            (InvertInput::Symbolic(s), Some(n)) if (1..=s.order()).contains(&n) => InvertInput::Symbolic(s.truncate(n)),
            (InvertInput::Numeric(s), Some(n)) if (1..=s.order()).contains(&n) => InvertInput::Numeric(s.truncate(n)),
            (_, Some(n)) => return Err(usage(format!("--order {n} exceeds the input order {order}"))),
        }
    } else if args.generic {
        InvertInput::Symbolic(SymbolicSeries::generic(resolve_order(cli, DEFAULT_ORDER)?))
    } else {
        let list = args.coeffs.as_deref().unwrap_or_default();
        let mut tail = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let r = parse_rational(item).map_err(|e| usage(format!("--coeffs: {e}")))?;
            tail.push(MPoly::constant(r));
        }
        let order = resolve_order(cli, DEFAULT_ORDER.max(tail.len() + 1))?;
        if tail.len() + 1 > order {
            return Err(usage(format!("{} coefficients do not fit order {order}", tail.len())));
        }
        tail.resize(order - 1, MPoly::default());
        InvertInput::Symbolic(NormalizedSeries::from_tail(tail))
    };

    let format = format_of(cli, Format::Text);
    let text = match input {
        InvertInput::Symbolic(f) => {
            let g = f.revert();
            match format {
                Format::Json => format!("{}\n", g.to_json()),
                Format::Csv => {
                    let mut s = String::from("n,coefficient\n");
                    for n in 2..=g.order() {
                        let _ = writeln!(s, "{n},{}", g.coefficient(n));
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for n in 2..=g.order() {
                        let _ = writeln!(s, "b{n} = {}", g.coefficient(n));
                    }
                    s
                }
            }
        }
        InvertInput::Numeric(f) => {
            let g = f.revert();
            match format {
                Format::Json => {
                    let coeffs: Vec<[f64; 2]> = (1..=g.order()).map(|n| [g.coefficient(n).re, g.coefficient(n).im]).collect();
                    to_json_text(&json!({ "order": g.order(), "coeffs": coeffs }))
                }
                Format::Csv => {
                    let mut s = String::from("n,re,im\n");
                    for n in 2..=g.order() {
                        let c = g.coefficient(n);
                        let _ = writeln!(s, "{n},{},{}", c.re + 0.0, c.im + 0.0);
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for n in 2..=g.order() {
                        let c = g.coefficient(n);
                        let _ = writeln!(s, "b{n} = {} {:+}i", c.re + 0.0, c.im + 0.0);
                    }
                    s
                }
            }
        }
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------

fn single_params(args: &ParamArgs) -> Result<ClassParams, CliError> {
    let grid = params_grid(args, ["1", "1", "0", "0"])?;
    match grid.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(usage("this command takes single parameter values, not grids")),
    }
}

/// Cartesian product of the four parameter grids, `λ` outermost.
fn params_grid(args: &ParamArgs, defaults: [&str; 4]) -> Result<Vec<ClassParams>, CliError> {
    let lambdas = parse_grid("lambda", args.lambda.as_deref().unwrap_or(defaults[0]))?;
    let mus = parse_grid("mu", args.mu.as_deref().unwrap_or(defaults[1]))?;
    let deltas = parse_grid("delta", args.delta.as_deref().unwrap_or(defaults[2]))?;
    let alphas = parse_grid("alpha", args.alpha.as_deref().unwrap_or(defaults[3]))?;
    let size = lambdas.len() * mus.len() * deltas.len() * alphas.len();
    if size > 1_000_000 {
        return Err(usage(format!("parameter grid has {size} points")));
    }
    let mut grid = Vec::with_capacity(size);
    for l in &lambdas {
        for m in &mus {
            for d in &deltas {
                for a in &alphas {
                    let p = ClassParams::new(l.clone(), m.clone(), d.clone(), a.clone())
                        .map_err(|e| usage(e.to_string()))?;
                    grid.push(p);
                }
            }
        }
    }
    Ok(grid)
}

fn cmd_operator(cli: &Cli, sink: &mut Sink, params: &ParamArgs, n: Option<usize>) -> CmdResult {
    let params = single_params(params)?;
    let format = format_of(cli, Format::Text);
    if let Some(n) = n {
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(usage(format!("--n {n} must lie in 2..={MAX_ORDER}")));
        }
        let expansion = operator_expansion(&params, n);
        let f = expansion.coeff(n - 1);
        let leading = leading_an_coefficient(n, &params).map_err(|e| usage(e.to_string()))?;
        let text = match format {
            Format::Json => to_json_text(&json!({
                "params": params,
                "index": n - 1,
                "polynomial": f.to_json_value(),
                "leading": format_rational(&leading),
            })),
            Format::Csv => format!("index,polynomial,leading\n{},{f},{}\n", n - 1, format_rational(&leading)),
            Format::Text => format!("F{} = {f}\nleading a{n} coefficient = {}\n", n - 1, format_rational(&leading)),
        };
        sink.emit(&text)?;
        return Ok(EXIT_OK);
    }

    let order = resolve_order(cli, DEFAULT_ORDER)?;
    if order < 2 {
        return Err(usage("operator needs --order at least 2"));
    }
    let expansion = operator_expansion(&params, order);
    let text = match format {
        Format::Json => {
            let coeffs: Vec<Value> = (1..order)
                .map(|k| json!({ "index": k, "polynomial": expansion.coeff(k).to_json_value() }))
                .collect();
            to_json_text(&json!({ "params": params, "order": order, "coefficients": coeffs }))
        }
        Format::Csv => {
            let mut s = String::from("index,polynomial\n");
            for k in 1..order {
                let _ = writeln!(s, "{k},{}", expansion.coeff(k));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for k in 1..order {
                let _ = writeln!(s, "F{k} = {}", expansion.coeff(k));
            }
            s
        }
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------

fn bound_json(r: &BoundRecord) -> Value {
    json!({
        "params": r.params,
        "target": r.target.to_string(),
        "branch": r.branch.to_string(),
        "bound_kind": r.bound.kind(),
        "bound": r.bound,
        "bound_f64": r.bound.to_f64(),
        "display": r.display,
        "display_matches": r.display_matches(),
    })
}

fn cmd_bounds(cli: &Cli, sink: &mut Sink, args: &BoundsArgs) -> CmdResult {
    let grid = params_grid(&args.params, ["1", "1", "0", "0"])?;
    let class: Option<Specialization> = match &args.class {
        Some(name) => Some(name.parse().map_err(|e: faber::bounds::BoundError| usage(e.to_string()))?),
        None => None,
    };
    if args.target != TargetArg::An && args.n.is_some() {
        return Err(usage("--n only applies to --target an"));
    }
    let mut records = Vec::with_capacity(grid.len());
    for p in grid {
        let p = match class {
            Some(sp) => specialize(&p, sp),
            None => p,
        };
        let record = match args.target {
            TargetArg::An => {
                let n = args.n.ok_or_else(|| usage("--target an needs --n"))?;
                general_an_record(n, &p, args.unchecked).map_err(|e| usage(e.to_string()))?
            }
            TargetArg::A2 => bound_a2(&p),
            TargetArg::A3 => bound_a3(&p),
            TargetArg::Fekete => fekete_record(&p),
        };
        records.push(record);
    }
    let text = match format_of(cli, Format::Csv) {
        Format::Csv => {
            let mut s = format!("{}\n", BoundRecord::CSV_HEADER);
            for r in &records {
                s.push_str(&r.to_csv_row());
                s.push('\n');
            }
            s
        }
        Format::Json => to_json_text(&records.iter().map(bound_json).collect::<Vec<_>>()),
        Format::Text => {
            let mut s = String::new();
            for r in &records {
                let _ = write!(s, "{} target={} branch={} bound={}", r.params, r.target, r.branch, r.bound);
                if let Some(d) = &r.display {
                    let _ = write!(s, " display={d}");
                }
                s.push('\n');
            }
            s
        }
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------

fn cmd_audit(cli: &Cli, sink: &mut Sink, stderr: &mut dyn Write, params: &ParamArgs) -> CmdResult {
    let order = resolve_order(cli, DEFAULT_ORDER)?;
    if order < 4 {
        return Err(usage("audit needs --order at least 4"));
    }
    let given = [&params.lambda, &params.mu, &params.delta, &params.alpha];
    let grid = if given.iter().all(|p| p.is_none()) {
        default_audit_grid()
    } else {
        params_grid(params, ["1", "1", "0", "0"])?
    };
    let reports = full_audit(order, &grid);
    let text = match format_of(cli, Format::Json) {
        Format::Json => to_json_text(&reports),
        Format::Csv => {
            let mut s = String::from("item,status,mandatory,difference\n");
            for r in &reports {
                let status = if r.is_match() { "match" } else { "mismatch" };
                let _ = writeln!(s, "\"{}\",{status},{},\"{}\"", r.item, r.mandatory, r.difference);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.is_match() { "match" } else { "MISMATCH" };
                let kind = if r.mandatory { "mandatory" } else { "info" };
                let _ = write!(s, "{status:<9}{kind:<10}{}", r.item);
                if !r.is_match() {
                    let _ = write!(s, "  difference: {}", r.difference);
                }
                s.push('\n');
            }
            s
        }
    };
    sink.emit(&text)?;
    let mandatory = reports.iter().filter(|r| r.mandatory).count();
    let failed = reports.iter().filter(|r| r.mandatory && !r.is_match()).count();
    let informational = reports.iter().filter(|r| !r.mandatory && !r.is_match()).count();
    let _ = writeln!(
        stderr,
        "audit: entries={} mandatory={mandatory} mandatory_mismatches={failed} informational_mismatches={informational}",
        reports.len()
    );
    Ok(if mandatory_passed(&reports) { EXIT_OK } else { EXIT_FAILURE })
}

// ---------------------------------------------------------------------------

fn cmd_sample(cli: &Cli, sink: &mut Sink, stderr: &mut dyn Write, args: &SampleArgs) -> CmdResult {
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if args.trials > 100_000_000 {
        return Err(usage("--trials is limited to 100000000"));
    }
    let params = single_params(&args.params)?;
    let seed = cli.seed.unwrap_or(0);
    let exec = if args.parallel { Execution::Parallel } else { Execution::Serial };
    let format = format_of(cli, Format::Csv);

    let (body, summary, violations) = match args.theorem {
        TheoremArg::One => {
            if args.boundary {
                return Err(usage("--boundary applies to --theorem 2; theorem 1 runs always include |c| = 2"));
            }
            let report =
                theorem1_falsifier(&params, args.n, args.trials, seed, exec).map_err(|e| usage(e.to_string()))?;
            let body = match format {
                Format::Json => to_json_text(&json!({
                    "summary": report.summary(),
                    "trials": report.trials,
                    "violations": report.violations,
                    "boundary_trials": report.boundary_trials,
                    "max_boundary_gap": report.max_boundary_gap,
                    "bound": report.bound,
                })),
                Format::Csv | Format::Text => report.to_csv(),
            };
            (body, report.summary(), report.violations)
        }
        TheoremArg::Two => {
            let mode = if args.boundary { SampleMode::Boundary } else { SampleMode::Random };
            let report =
                theorem2_falsifier(&params, args.trials, seed, mode, exec).map_err(|e| usage(e.to_string()))?;
            let body = match format {
                Format::Json => to_json_text(&json!({
                    "summary": report.summary(),
                    "trials": report.trials,
                    "accepted": report.accepted,
                    "violations": report.violations,
                    "max_a2": report.max_a2(),
                    "bound_a2": report.a2_bound,
                    "bound_a3": report.a3_bound,
                    "bound_fekete": report.fekete_bound,
                })),
                Format::Csv | Format::Text => report.to_csv(),
            };
            (body, report.summary(), report.violations)
        }
    };
    let to_file = sink.to_file();
    sink.emit(&body)?;
    // keep stdout a clean CSV when it carries the report
    if to_file {
        sink.emit_summary(&summary)?;
    } else {
        let _ = writeln!(stderr, "{summary}");
    }
    Ok(if args.assert && violations > 0 { EXIT_FAILURE } else { EXIT_OK })
}

impl Sink<'_> {
    fn emit_summary(&mut self, line: &str) -> Result<(), CliError> {
        writeln!(self.stdout, "{line}").map_err(|e| CliError::Io(e.to_string()))
    }
}
