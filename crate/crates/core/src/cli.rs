//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 a verification failed or an array was ruled
//! out, 2 usage or malformed input.

use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arrays::{derive_layers, validate, IntersectionArray};
use crate::bounds::{screen, screen_one, srg, ScreenResult, ScreenVerdict};
use crate::catalog::{self, Table};
use crate::error::{Error, Result};
use crate::exact::{fraction_string, render_decimal};
use crate::oracle::{
    cross_check, verify_harmonic_all, ConcreteGraph, Family, Oracle, DEFAULT_MAX_N, DEFAULT_SEED,
};
use crate::potentials::{phi_recursive, resistances};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "drg-resistance",
    version,
    about = "Exact potentials and resistances of distance-regular graphs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    /// Vertex cap for `oracle`.
    #[arg(long, default_value_t = DEFAULT_MAX_N, global = true)]
    pub max_n: usize,
    /// Seed for pair sampling in `oracle`.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the feasibility conditions and layer sizes.
    Validate { input: String },
    /// Print the potentials φ₀, …, φ_{D−1}.
    Phi { input: String },
    /// Print the resistances d₁, …, d_D.
    Resist { input: String },
    /// Run every bound and report the screening verdict.
    Check { input: String },
    /// Screen one array per line; `#` comments and blank lines are skipped.
    Scan { file: String },
    /// Build a graph and compare exact Laplacian resistances with the formula.
    Oracle {
        family: String,
        params: Vec<u64>,
        /// Print the edge list instead of running the checks.
        #[arg(long)]
        edges: bool,
    },
    /// List the fixture tables.
    Catalog {
        #[arg(long)]
        table: Option<String>,
        /// Recompute and compare every entry.
        #[arg(long)]
        verify: bool,
    },
}

/// An array given as `"b;c"` or JSON text, a file containing one, or `-`
/// for stdin.
fn read_array(input: &str, stdin: &mut dyn BufRead) -> Result<IntersectionArray> {
    if input == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::MalformedInput(format!("reading stdin: {e}")))?;
        return IntersectionArray::parse_any(&text);
    }
    match IntersectionArray::parse_any(input) {
        Ok(arr) => Ok(arr),
        Err(parse_err) if Path::new(input).is_file() => {
            let text = fs::read_to_string(input)
                .map_err(|e| Error::MalformedInput(format!("reading {input}: {e}")))?;
            IntersectionArray::parse_any(&text).map_err(|_| parse_err)
        }
        Err(e) => Err(e),
    }
}

fn read_lines(file: &str, stdin: &mut dyn BufRead) -> Result<Vec<String>> {
    let mut text = String::new();
    if file == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::MalformedInput(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(file)
            .map_err(|e| Error::MalformedInput(format!("reading {file}: {e}")))?;
    }
    Ok(text.lines().map(str::to_string).collect())
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::MalformedInput(_) | Error::UnknownFamily(_) | Error::SizeCap { .. } => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn exact_and_decimal(q: &num_rational::BigRational) -> String {
    if q.is_integer() {
        fraction_string(q)
    } else {
        format!("{} ≈ {}", fraction_string(q), render_decimal(q, DIGITS))
    }
}

struct Ctx<'a> {
    format: Format,
    max_n: usize,
    seed: u64,
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json(&mut self, value: &serde_json::Value) -> std::io::Result<()> {
        writeln!(self.out, "{value}")
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        max_n: cli.max_n,
        seed: cli.seed,
        stdin,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            if ctx.format == Format::Json {
                let _ = ctx.emit_json(&json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Result<i32> {
    let io = |e: std::io::Error| Error::MalformedInput(format!("writing output: {e}"));
    match command {
        Command::Validate { input } => {
            let arr = read_array(&input, ctx.stdin)?;
            cmd_validate(ctx, &arr)
        }
        Command::Phi { input } => {
            let arr = read_array(&input, ctx.stdin)?;
            cmd_phi(ctx, &arr)
        }
        Command::Resist { input } => {
            let arr = read_array(&input, ctx.stdin)?;
            cmd_resist(ctx, &arr)
        }
        Command::Check { input } => {
            let arr = read_array(&input, ctx.stdin)?;
            cmd_check(ctx, &arr)
        }
        Command::Scan { file } => cmd_scan(ctx, &file),
        Command::Oracle {
            family,
            params,
            edges,
        } => {
            let fam = if params.is_empty() {
                family.parse::<Family>()?
            } else {
                Family::parse(&family, &params)?
            };
            cmd_oracle(ctx, fam, edges)
        }
        Command::Catalog { table, verify } => {
            let filter = table.as_deref().map(str::parse::<Table>).transpose()?;
            cmd_catalog(ctx, filter, verify)
        }
    }
    .and_then(|r| r.map_err(io))
}

type CmdResult = Result<std::io::Result<i32>>;

fn cmd_validate(ctx: &mut Ctx<'_>, arr: &IntersectionArray) -> CmdResult {
    let report = validate(arr);
    let layers = derive_layers(arr).ok();
    let code = if report.is_feasible() { EXIT_OK } else { EXIT_FAILED };
    Ok((|| {
        match ctx.format {
            Format::Json => ctx.emit_json(&json!({
                "array": arr.to_string(),
                "feasible": report.is_feasible(),
                "report": report,
                "layers": layers,
            }))?,
            Format::Table => {
                writeln!(ctx.out, "array: {arr}")?;
                if let Some(l) = &layers {
                    let sizes: Vec<String> = l.sizes.iter().map(ToString::to_string).collect();
                    writeln!(ctx.out, "layers: {}  (n = {})", sizes.join(" "), l.n)?;
                }
                for v in &report.violations {
                    writeln!(ctx.out, "violation: {v}")?;
                }
                if report.low_valency {
                    writeln!(ctx.out, "note: valency <= 2, outside the hypotheses of the bounds")?;
                }
                writeln!(ctx.out, "{}", if report.is_feasible() { "feasible" } else { "infeasible" })?;
            }
        }
        Ok(code)
    })())
}

fn cmd_phi(ctx: &mut Ctx<'_>, arr: &IntersectionArray) -> CmdResult {
    let phi = phi_recursive(arr)?;
    Ok((|| {
        match ctx.format {
            Format::Json => ctx.emit_json(&json!({
                "array": arr.to_string(),
                "n": phi.n().to_string(),
                "phi": phi.values().iter().map(fraction_string).collect::<Vec<_>>(),
                "phi_decimal": phi.values().iter().map(|q| render_decimal(q, DIGITS)).collect::<Vec<_>>(),
            }))?,
            Format::Table => {
                let exact: Vec<String> = phi.values().iter().map(fraction_string).collect();
                writeln!(ctx.out, "{}", exact.join(" "))?;
                for (i, q) in phi.values().iter().enumerate() {
                    writeln!(ctx.out, "phi{i} = {} ≈ {}", fraction_string(q), render_decimal(q, DIGITS))?;
                }
            }
        }
        Ok(EXIT_OK)
    })())
}

fn cmd_resist(ctx: &mut Ctx<'_>, arr: &IntersectionArray) -> CmdResult {
    let phi = phi_recursive(arr)?;
    let profile = resistances(&phi);
    Ok((|| {
        match ctx.format {
            Format::Json => ctx.emit_json(&json!({
                "array": arr.to_string(),
                "resistances": profile,
            }))?,
            Format::Table => {
                for (j, d) in profile.d.iter().enumerate() {
                    writeln!(ctx.out, "d{} = {}", j + 1, exact_and_decimal(d))?;
                }
                writeln!(ctx.out, "4phi0/(nk) = {}", exact_and_decimal(&profile.potential_bound))?;
                writeln!(ctx.out, "d_D < 4phi0/(nk): {}", profile.below_potential_bound)?;
                writeln!(ctx.out, "d_D < 4/k: {}", profile.below_valency_bound)?;
            }
        }
        Ok(EXIT_OK)
    })())
}

fn srg_lines(arr: &IntersectionArray) -> Option<Vec<String>> {
    let params = srg::SrgParameters::from_array(arr).ok()?;
    let mut lines = vec![format!("strongly regular parameters {params}")];
    match srg::srg_check(&params) {
        Ok(c) => lines.push(c.to_string()),
        Err(e) => lines.push(format!("srg_valency_floor: {e}")),
    }
    if let Ok(c) = srg::srg_ratio_bound(&params) {
        lines.push(c.to_string());
    }
    let eig = srg::srg_eigenvalues(&params);
    lines.push(format!(
        "eigenvalues {} and {} ({}, conference parameters: {})",
        eig.theta1, eig.theta2, eig.kind, eig.conference_parameters
    ));
    Some(lines)
}

fn cmd_check(ctx: &mut Ctx<'_>, arr: &IntersectionArray) -> CmdResult {
    let result = screen_one(arr);
    let code = if result.verdict.is_feasible() { EXIT_OK } else { EXIT_FAILED };
    Ok((|| {
        match ctx.format {
            Format::Json => {
                let mut value = serde_json::to_value(&result).expect("serializable");
                if let Ok(params) = srg::SrgParameters::from_array(arr) {
                    value["srg"] = json!({
                        "parameters": params,
                        "valency_floor": srg::srg_check(&params).ok(),
                        "ratio": srg::srg_ratio_bound(&params).ok(),
                        "eigenvalues": srg::srg_eigenvalues(&params),
                    });
                }
                ctx.emit_json(&value)?
            }
            Format::Table => {
                writeln!(ctx.out, "array: {arr}")?;
                if let Some(report) = &result.report {
                    for c in &report.checks {
                        writeln!(ctx.out, "{c}")?;
                    }
                    writeln!(
                        ctx.out,
                        "uniform tail constant (informational): {}",
                        exact_and_decimal(&report.uniform_tail_constant)
                    )?;
                }
                for line in srg_lines(arr).unwrap_or_default() {
                    writeln!(ctx.out, "{line}")?;
                }
                writeln!(ctx.out, "{}", result.verdict)?;
            }
        }
        Ok(code)
    })())
}

fn scan_line(result: &ScreenResult, raw: &str) -> String {
    let shown = result
        .array
        .as_ref()
        .map_or_else(|| raw.trim().to_string(), ToString::to_string);
    format!("{shown}\t{}", result.verdict)
}

fn cmd_scan(ctx: &mut Ctx<'_>, file: &str) -> CmdResult {
    let lines: Vec<String> = read_lines(file, ctx.stdin)?
        .into_iter()
        .filter(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect();
    let results = screen(lines.iter().map(|l| IntersectionArray::parse_any(l)));
    Ok((|| {
        let mut code = EXIT_OK;
        for (result, raw) in results.zip(&lines) {
            if !matches!(result.verdict, ScreenVerdict::FeasibleSoFar) {
                code = EXIT_FAILED;
            }
            match ctx.format {
                Format::Json => {
                    let mut value = serde_json::to_value(&result).expect("serializable");
                    value["input"] = json!(raw.trim());
                    ctx.emit_json(&value)?
                }
                Format::Table => writeln!(ctx.out, "{}", scan_line(&result, raw))?,
            }
        }
        Ok(code)
    })())
}

fn cmd_oracle(ctx: &mut Ctx<'_>, family: Family, edges: bool) -> CmdResult {
    let graph = ConcreteGraph::build(family, ctx.max_n)?;
    if edges {
        return Ok(write!(ctx.out, "{}", graph.to_edge_list()).map(|_| EXIT_OK));
    }
    let oracle = Oracle::new(&graph)?;
    let report = cross_check(&oracle, ctx.seed)?;
    let harmonic = verify_harmonic_all(&oracle)?;
    Ok((|| {
        match ctx.format {
            Format::Json => ctx.emit_json(&json!({
                "graph": graph.name(),
                "family": family,
                "array": graph.claimed_array().to_string(),
                "n": graph.order(),
                "edges": graph.edge_count(),
                "cross_check": report,
                "harmonic_edges": harmonic.len(),
                "current": harmonic.first().map(|h| fraction_string(&h.current)),
            }))?,
            Format::Table => {
                writeln!(
                    ctx.out,
                    "{}: n = {}, {} edges, array {} (verified by BFS)",
                    graph.name(),
                    graph.order(),
                    graph.edge_count(),
                    graph.claimed_array()
                )?;
                let mode = if report.exhaustive { "all pairs" } else { "sampled" };
                for c in &report.classes {
                    writeln!(
                        ctx.out,
                        "d{} = {}: {}/{} pairs match ({mode})",
                        c.distance,
                        exact_and_decimal(&c.expected),
                        c.pairs_checked,
                        c.pairs_total
                    )?;
                }
                writeln!(ctx.out, "harmonic potential verified on all {} edges", harmonic.len())?;
                writeln!(ctx.out, "ok")?;
            }
        }
        Ok(EXIT_OK)
    })())
}

fn cmd_catalog(ctx: &mut Ctx<'_>, filter: Option<Table>, verify: bool) -> CmdResult {
    if !verify {
        let list = catalog::entries(filter);
        return Ok((|| {
            match ctx.format {
                Format::Json => ctx.emit_json(&serde_json::to_value(&list).expect("serializable"))?,
                Format::Table => {
                    for e in &list {
                        writeln!(
                            ctx.out,
                            "{:<10} {:<34} {:>4}  {:<34} {}",
                            e.table,
                            e.name,
                            e.vertices,
                            e.array,
                            e.published_ratio.unwrap_or("-")
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        })());
    }
    let checks: Vec<_> = catalog::entries(filter)
        .iter()
        .map(catalog::verify_entry)
        .collect::<Result<_>>()?;
    let all_ok = checks.iter().all(|c| c.ok());
    Ok((|| {
        match ctx.format {
            Format::Json => ctx.emit_json(&json!({ "ok": all_ok, "entries": checks }))?,
            Format::Table => {
                for c in &checks {
                    let status = if c.ok() { "ok" } else { "FAIL" };
                    writeln!(
                        ctx.out,
                        "{status:<4} {:<34} n={:<4} ratio {} rendered {} published {} main {}",
                        c.name,
                        c.vertices_computed,
                        fraction_string(&c.ratio),
                        c.rendered.as_deref().unwrap_or("-"),
                        c.published_ratio.unwrap_or("-"),
                        c.main_bound
                    )?;
                    for p in &c.problems {
                        writeln!(ctx.out, "     {p}")?;
                    }
                }
            }
        }
        Ok(if all_ok { EXIT_OK } else { EXIT_FAILED })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = std::io::Cursor::new(stdin.as_bytes().to_vec());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("drg-resistance").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn phi_biggs_smith() {
        let (code, out, _) = run_str(&["phi", "3,2,2,2,1,1,1;1,1,1,1,1,1,3"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().next().unwrap(), "101 49 23 10 7 4 1");
    }

    #[test]
    fn check_ruled_out() {
        let (code, out, _) = run_str(&["check", "3,2,2,1,1,1,1;1,1,1,1,1,1,3"], "");
        assert_eq!(code, 1);
        assert_eq!(
            out.lines().last().unwrap(),
            "ruled-out: main_bound violated, ratio 35/29 ≈ 1.206897"
        );
    }

    #[test]
    fn scan_empty_and_stdin() {
        assert_eq!(run_str(&["scan", "-"], ""), (0, String::new(), String::new()));
        let (code, out, _) = run_str(
            &["--format", "json", "scan", "-"],
            "# comment\n\n3,2;1,1\n3,2,2,1,1,1,1;1,1,1,1,1,1,3\n",
        );
        assert_eq!(code, 1);
        let lines: Vec<serde_json::Value> =
            out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["verdict"]["verdict"], "feasible_so_far");
        assert_eq!(lines[1]["verdict"]["reason"], "main_bound");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["phi", "not an array"], "").0, 2);
        assert_eq!(run_str(&["frobnicate"], "").0, 2);
        assert_eq!(run_str(&["oracle", "moebius"], "").0, 2);
        assert_eq!(run_str(&["oracle", "hypercube", "13"], "").0, 2);
        assert_eq!(run_str(&["--help"], "").0, 0);
    }

    #[test]
    fn oracle_and_catalog() {
        let (code, out, _) = run_str(&["oracle", "petersen"], "");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("d1 = 3/5"));
        let (code, out, _) = run_str(&["oracle", "complete", "3", "--edges"], "");
        assert_eq!((code, out.as_str()), (0, "0 1\n0 2\n1 2\n"));
        let (code, out, _) = run_str(&["catalog", "--verify"], "");
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().count(), 22);
    }

    #[test]
    fn json_is_valid() {
        for args in [
            &["--format", "json", "validate", "3,2;1,1"][..],
            &["--format", "json", "phi", "3,2;1,1"],
            &["--format", "json", "resist", "3,2;1,1"],
            &["--format", "json", "check", "3,2;1,1"],
            &["--format", "json", "catalog", "--table", "k4"],
            &["--format", "json", "oracle", "hamming(2,3)"],
        ] {
            let (code, out, _) = run_str(args, "");
            assert_eq!(code, 0, "{args:?}");
            let _: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        }
    }
}
