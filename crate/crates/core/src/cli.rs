//! Command-line interface. `run` parses arguments, dispatches to the
//! library and renders a deterministic result; `main` only prints it.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coxeter::{all_permutations, bruhat_leq, CoxeterError, Permutation, Word};
use crate::jones::{
    block_embedding_check, cell_of_shape, central_element_check, eigenvalue_multiplicities_hold, jones_cell,
    jones_rep, rescaled_quadratic_holds, verify_sphere_relations, CellRep, JonesError,
};
use crate::kl::KlTable;
use crate::laurent::{LaurentMatrix, Variable};
use crate::quotient::certificate::{certify, describe_parameter, CertificateData, Verdict};
use crate::quotient::pingpong::WitnessVerdict;
use crate::quotient::specialization::ParameterChoice;
use crate::quotient::{b3_bridge, burau, burau_quadratic_residual, free_subgroup_witness, sweep, QuotientError, Scheme};
use crate::tableaux::{canonical_key, cell_of, q_symbol, Cell, TableauError, YoungDiagram};
use crate::wgraph::{build_wgraph, verify_hecke_relations, RelationReport};

/// Largest `n` for which every cell or every KL pair is listed.
const MAX_LISTING_N: usize = 8;
const MAX_KL_PAIRS_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "hecke-jones", version, about = "Hecke algebra cell representations, the Jones representation and root-of-unity certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the output to PATH instead of stdout (`json`, `csv` and `plain`
    /// select the format instead).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cells of S_n (all of them, or the one containing --rep).
    Cells {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        genus: Option<usize>,
        /// Reduced word (`s1s3s5`, `1,3,5`) or one-line permutation (`2 1 4 3`).
        #[arg(long)]
        rep: Option<String>,
    },
    /// Kazhdan-Lusztig polynomials P_{y,w}.
    Klpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// The W-graph of a cell.
    Wgraph {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        rep: Option<String>,
    },
    /// The Jones representation matrices J(H_i) over Z[t^{±1}], q = t^d.
    Jones {
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
    /// Exact relation checks for the Jones representation, or for the cell
    /// representation of --shape.
    Verify {
        #[arg(long, default_value_t = 2)]
        genus: usize,
        /// A partition such as `4,1,1`; rescaled by t^{2r-d} and checked
        /// against the sphere relations.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Infinite-order certificate for (H1H2)^6 H3 (H1H2)^6 H3^-1.
    Certify {
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long)]
        power: u64,
        #[arg(long, value_enum)]
        scheme: Option<SchemeArg>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Certificates over a range of powers, e.g. `--powers 5..40`.
    Sweep {
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long)]
        powers: String,
        #[arg(long, value_enum)]
        scheme: Option<SchemeArg>,
    },
    /// Reduced Burau matrices and their checks.
    Burau {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Ping-pong search in the image of J'(H_1^2), J'(H_2^2).
    Witness {
        #[arg(long)]
        power: u64,
        #[arg(long, value_enum)]
        scheme: Option<SchemeArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Even,
    Odd,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Even => Scheme::Even,
            SchemeArg::Odd => Scheme::Odd,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Coxeter(_) => "coxeter",
            CliError::Tableau(_) => "tableaux",
            CliError::Jones(_) => "jones",
            CliError::Quotient(_) => "quotient",
            CliError::Invalid(_) => "invalid_argument",
        }
    }
}

/// Outcome of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub parameters: Value,
    pub payload: Value,
    pub exit_code: i32,
    /// Rendered output.
    #[serde(skip)]
    pub output: String,
    /// Destination file, if any.
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl CommandResult {
    /// Writes the output to its destination.
    pub fn emit(&self) -> std::io::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, &self.output),
            None => {
                print!("{}", self.output);
                Ok(())
            }
        }
    }
}

struct Outcome {
    payload: Value,
    passed: bool,
    plain: String,
    csv: Option<String>,
}

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandResult {
                command: String::new(),
                parameters: Value::Null,
                payload: Value::Null,
                exit_code: code,
                output: e.render().to_string(),
                out: None,
            };
        }
    };
    let (format, out) = match cli.out.as_deref() {
        Some("json") => (Format::Json, None),
        Some("csv") => (Format::Csv, None),
        Some("plain") => (Format::Plain, None),
        Some(p) => (cli.format, Some(PathBuf::from(p))),
        None => (cli.format, None),
    };
    let (command, parameters) = describe(&cli.command);
    let result = dispatch(&cli.command);
    let (payload, exit_code, output) = match result {
        Ok(o) => {
            let code = if o.passed { 0 } else { 1 };
            let envelope = json!({"command": command, "parameters": parameters, "payload": o.payload, "exit_code": code});
            let text = match format {
                Format::Json => pretty(&envelope),
                Format::Plain => o.plain,
                Format::Csv => match o.csv {
                    Some(c) => c,
                    None => {
                        return usage_error(&command, "csv output is available for cells, klpoly and sweep");
                    }
                },
            };
            (o.payload, code, text)
        }
        Err(e) => {
            let err = json!({"kind": e.kind(), "message": e.to_string()});
            let envelope = json!({"command": command, "parameters": parameters, "error": err, "exit_code": 1});
            (json!({ "error": err }), 1, pretty(&envelope))
        }
    };
    CommandResult { command, parameters, payload, exit_code, output, out }
}

fn usage_error(command: &str, message: &str) -> CommandResult {
    CommandResult {
        command: command.to_string(),
        parameters: Value::Null,
        payload: Value::Null,
        exit_code: 2,
        output: format!("error: {message}\n"),
        out: None,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn describe(c: &Command) -> (String, Value) {
    let scheme = |s: &Option<SchemeArg>| s.map(|s| Scheme::from(s).to_string());
    match c {
        Command::Cells { n, genus, rep } => ("cells".into(), json!({"n": n, "genus": genus, "rep": rep})),
        Command::Klpoly { n, y, w } => ("klpoly".into(), json!({"n": n, "y": y, "w": w})),
        Command::Wgraph { n, genus, rep } => ("wgraph".into(), json!({"n": n, "genus": genus, "rep": rep})),
        Command::Jones { genus } => ("jones".into(), json!({ "genus": genus })),
        Command::Verify { genus, shape } => ("verify".into(), json!({"genus": genus, "shape": shape})),
        Command::Certify { genus, power, scheme: s, k } => {
            ("certify".into(), json!({"genus": genus, "power": power, "scheme": scheme(s), "k": k}))
        }
        Command::Sweep { genus, powers, scheme: s } => {
            ("sweep".into(), json!({"genus": genus, "powers": powers, "scheme": scheme(s)}))
        }
        Command::Burau { n } => ("burau".into(), json!({ "n": n })),
        Command::Witness { power, scheme: s } => ("witness".into(), json!({"power": power, "scheme": scheme(s)})),
    }
}

fn dispatch(c: &Command) -> Result<Outcome, CliError> {
    let table = KlTable::new();
    match c {
        Command::Cells { n, genus, rep } => cells(&table, *n, *genus, rep.as_deref()),
        Command::Klpoly { n, y, w } => klpoly(&table, *n, y.as_deref(), w.as_deref()),
        Command::Wgraph { n, genus, rep } => wgraph(&table, *n, *genus, rep.as_deref()),
        Command::Jones { genus } => jones(&table, *genus),
        Command::Verify { genus, shape: Some(shape) } => verify_shape(&table, *genus, shape),
        Command::Verify { genus, shape: None } => verify(&table, *genus),
        Command::Certify { genus, power, scheme, k } => certify_cmd(&table, *genus, *power, *scheme, *k),
        Command::Sweep { genus, powers, scheme } => sweep_cmd(&table, *genus, powers, *scheme),
        Command::Burau { n } => burau_cmd(&table, *n),
        Command::Witness { power, scheme } => witness_cmd(&table, *power, *scheme),
    }
}

/// A reduced word (`s1s3s5`, `1,3,5`, `e`) or a one-line permutation.
pub fn parse_element(s: &str, n: usize) -> Result<Permutation, CliError> {
    let t = s.trim();
    let w = if t.starts_with('s') || t.contains(',') || t == "e" {
        t.parse::<Word>()?.evaluate(n)?
    } else {
        t.parse::<Permutation>()?
    };
    if w.n() != n {
        return Err(CliError::Invalid(format!("{s:?} is not an element of S_{n}")));
    }
    Ok(w)
}

/// `a..b` or `a..=b` (both inclusive), or a single power.
pub fn parse_powers(s: &str) -> Result<std::ops::RangeInclusive<u64>, CliError> {
    let bad = || CliError::Invalid(format!("cannot parse power range {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn check_n(n: usize, max: usize) -> Result<(), CliError> {
    if !(1..=max).contains(&n) {
        return Err(CliError::Invalid(format!("n = {n} is outside 1..={max}")));
    }
    Ok(())
}

fn resolve_cell(n: Option<usize>, genus: Option<usize>, rep: Option<&str>) -> Result<Option<Cell>, CliError> {
    match (n, genus, rep) {
        (_, Some(g), None) => {
            if !(2..=crate::jones::MAX_GENUS).contains(&g) {
                return Err(JonesError::GenusOutOfRange(g).into());
            }
            Ok(Some(jones_cell(g)))
        }
        (Some(n), None, Some(r)) => {
            check_n(n, 12)?;
            Ok(Some(cell_of(&parse_element(r, n)?)))
        }
        (Some(n), None, None) => {
            check_n(n, MAX_LISTING_N)?;
            Ok(None)
        }
        _ => Err(CliError::Invalid("give --genus, or --n with an optional --rep".into())),
    }
}

fn cell_json(cell: &Cell) -> Value {
    let members: Vec<Value> = cell
        .members
        .iter()
        .enumerate()
        .map(|(i, w)| json!({"index": i + 1, "word": w.reduced_word().to_s_notation(), "one_line": w.to_string()}))
        .collect();
    json!({"shape": cell.shape.to_string(), "size": cell.len(), "members": members})
}

fn all_cells(n: usize) -> Vec<Cell> {
    let mut seen = BTreeMap::new();
    for w in all_permutations(n) {
        let key = q_symbol(&w);
        let entry = seen.entry(key).or_insert_with(|| w.clone());
        if canonical_key(&w) < canonical_key(entry) {
            *entry = w;
        }
    }
    let mut cells: Vec<Cell> = seen.into_values().map(|w| cell_of(&w)).collect();
    cells.sort_by_key(|c| (std::cmp::Reverse(c.shape.rows().to_vec()), canonical_key(&c.members[0])));
    cells
}

fn cells(_table: &KlTable, n: Option<usize>, genus: Option<usize>, rep: Option<&str>) -> Result<Outcome, CliError> {
    let list = match resolve_cell(n, genus, rep)? {
        Some(c) => vec![c],
        None => all_cells(n.unwrap_or_default()),
    };
    let mut plain = String::new();
    let mut csv = String::from("cell,shape,index,word,one_line\n");
    for (k, c) in list.iter().enumerate() {
        let _ = writeln!(plain, "cell {} shape {} size {}", k + 1, c.shape, c.len());
        for (i, w) in c.members.iter().enumerate() {
            let word = w.reduced_word().to_s_notation();
            let _ = writeln!(plain, "  {:>3}  {:<24} {}", i + 1, word, w);
            let _ = writeln!(csv, "{},\"{}\",{},{},{}", k + 1, c.shape, i + 1, word, w);
        }
    }
    let payload = json!({"cells": list.iter().map(cell_json).collect::<Vec<_>>()});
    Ok(Outcome { payload, passed: true, plain, csv: Some(csv) })
}

fn klpoly(table: &KlTable, n: usize, y: Option<&str>, w: Option<&str>) -> Result<Outcome, CliError> {
    let pairs: Vec<(Permutation, Permutation)> = match (y, w) {
        (Some(y), Some(w)) => {
            check_n(n, 12)?;
            vec![(parse_element(y, n)?, parse_element(w, n)?)]
        }
        (None, None) => {
            check_n(n, MAX_KL_PAIRS_N)?;
            let all = all_permutations(n);
            let mut v = Vec::new();
            for w in &all {
                for y in &all {
                    if bruhat_leq(y, w) {
                        v.push((y.clone(), w.clone()));
                    }
                }
            }
            v.sort_by_key(|(y, w)| (canonical_key(w), canonical_key(y)));
            v
        }
        _ => return Err(CliError::Invalid("give both --y and --w, or neither".into())),
    };
    let mut plain = String::new();
    let rows: Vec<Value> = pairs
        .iter()
        .map(|(y, w)| {
            let p = table.p(y, w);
            let (yw, ww) = (y.reduced_word().to_s_notation(), w.reduced_word().to_s_notation());
            let _ = writeln!(plain, "P[{yw}, {ww}] = {p}");
            json!({"y": yw, "w": ww, "mu": table.mu(y, w).to_string(), "poly": p, "display": p.to_string()})
        })
        .collect();
    let csv = crate::kl::dump_csv(table, &pairs);
    Ok(Outcome { payload: json!({ "polynomials": rows }), passed: true, plain, csv: Some(csv) })
}

fn wgraph(table: &KlTable, n: Option<usize>, genus: Option<usize>, rep: Option<&str>) -> Result<Outcome, CliError> {
    let cell = resolve_cell(n, genus, rep)?.ok_or_else(|| CliError::Invalid("wgraph needs --rep or --genus".into()))?;
    let graph = build_wgraph(&cell, table);
    let mut plain = String::new();
    for (i, w) in graph.vertices().iter().enumerate() {
        let _ = writeln!(plain, "vertex {} {} I={:?}", i + 1, w.reduced_word().to_s_notation(), graph.descents(i));
    }
    for ((y, w), m) in graph.edges() {
        let _ = writeln!(plain, "edge {} -> {} mu={}", y + 1, w + 1, m);
    }
    Ok(Outcome { payload: graph.to_json(), passed: true, plain, csv: None })
}

fn matrices_display(ms: &[LaurentMatrix], var: &str) -> Vec<Vec<Vec<String>>> {
    ms.iter()
        .map(|m| (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).display_in(var)).collect()).collect())
        .collect()
}

fn jones(table: &KlTable, genus: usize) -> Result<Outcome, CliError> {
    let rep = jones_rep(genus, table)?;
    let mut plain = format!(
        "genus {} n {} d {} r {} shape {}\nJ(H_i) = t^{} pi(sigma_i), q = t^{}\n",
        rep.g,
        rep.n,
        rep.d,
        rep.r,
        rep.shape,
        rep.prefactor_exponent(),
        rep.d
    );
    for (i, m) in rep.matrices.iter().enumerate() {
        let _ = writeln!(plain, "\nJ(H_{})\n{}", i + 1, m.display_in("t"));
    }
    let payload = json!({
        "g": rep.g,
        "n": rep.n,
        "d": rep.d,
        "r": rep.r,
        "shape": rep.shape.to_string(),
        "variable": "t",
        "q": format!("t^{}", rep.d),
        "prefactor": format!("t^{}", rep.prefactor_exponent()),
        "basis": rep.basis.iter().map(|w| w.reduced_word().to_s_notation()).collect::<Vec<_>>(),
        "matrices_exact": rep.matrices,
        "matrices_display": matrices_display(&rep.matrices, "t"),
    });
    Ok(Outcome { payload, passed: true, plain, csv: None })
}

fn report_plain(title: &str, r: &RelationReport) -> String {
    let mut s = format!("{title}\n");
    for c in &r.checks {
        let _ = write!(s, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.relation);
        if let Some(n) = &c.note {
            let _ = write!(s, " ({n})");
        }
        s.push('\n');
    }
    s
}

fn verify(table: &KlTable, genus: usize) -> Result<Outcome, CliError> {
    let rep = jones_rep(genus, table)?;
    let sphere = rep.verify();
    let hecke = verify_hecke_relations(&rep.unrescaled);
    let unrescaled = verify_sphere_relations(&rep.unrescaled, Variable::Q);
    let central = central_element_check(&rep.unrescaled, rep.r);
    let quadratic = rescaled_quadratic_holds(&rep);
    let multiplicities = eigenvalue_multiplicities_hold(&rep);
    let block = if genus >= 3 { Some(block_embedding_check(genus, table)?) } else { None };
    let passed = sphere.all_passed()
        && hecke.all_passed()
        && central.is_ok()
        && quadratic
        && multiplicities
        && block.as_ref().is_none_or(|b| b.all_match());
    let mut plain = report_plain("sphere relations (rescaled)", &sphere);
    plain.push_str(&report_plain("hecke relations (unrescaled)", &hecke));
    plain.push_str(&report_plain("sphere relations without the prefactor", &unrescaled));
    let _ = writeln!(plain, "central element: {}", match &central {
        Ok(s) => format!("q^{} Id", s.min_exp().unwrap_or_default()),
        Err(e) => e.to_string(),
    });
    let _ = writeln!(plain, "rescaled quadratic: {}", pass(quadratic));
    let _ = writeln!(plain, "eigenvalue multiplicities: {}", pass(multiplicities));
    if let Some(b) = &block {
        let _ = writeln!(plain, "block embedding: {}", pass(b.all_match()));
    }
    let payload = json!({
        "g": genus,
        "sphere_relations": sphere,
        "hecke_relations": hecke,
        "without_prefactor": unrescaled,
        "central_scalar": central.as_ref().map(|s| s.display_in("q")).map_err(|e| e.to_string()),
        "rescaled_quadratic": quadratic,
        "eigenvalue_multiplicities": multiplicities,
        "block_embedding": block,
        "all_passed": passed,
    });
    Ok(Outcome { payload, passed, plain, csv: None })
}

fn verify_shape(table: &KlTable, genus: usize, shape: &str) -> Result<Outcome, CliError> {
    let shape: YoungDiagram = shape.parse()?;
    let rep = CellRep::from_cell(cell_of_shape(&shape)?, table)?;
    let report = verify_sphere_relations(&rep.rescaled(), Variable::T { d: rep.d as u32 });
    let passed = report.all_passed();
    let plain = report_plain(&format!("shape {shape} (d = {}, r = {})", rep.d, rep.r), &report);
    let payload = json!({
        "g": genus,
        "shape": shape.to_string(),
        "rectangular": shape.is_rectangular(),
        "d": rep.d,
        "r": rep.r,
        "sphere_relations": report,
        "all_passed": passed,
    });
    Ok(Outcome { payload, passed, plain, csv: None })
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn scheme_for(m: u64, s: Option<SchemeArg>) -> Scheme {
    s.map_or_else(|| Scheme::of(m), Scheme::from)
}

fn certify_cmd(table: &KlTable, genus: usize, power: u64, scheme: Option<SchemeArg>, k: Option<u64>) -> Result<Outcome, CliError> {
    let rep = jones_rep(genus, table)?;
    let scheme = scheme_for(power, scheme);
    let choice = k.map_or(ParameterChoice::Default, ParameterChoice::K);
    let cert = certify(&CertificateData::new(&rep), &rep, power, scheme, choice)?;
    let passed = cert.verdict == Verdict::InfiniteOrder;
    let plain = format!(
        "element {}\ng {} m {} scheme {} {}\nmodulus {}\nverdict {}\n{}",
        cert.element,
        cert.g,
        cert.m,
        cert.scheme,
        describe_parameter(scheme, power, cert.k),
        cert.modulus_display.as_deref().unwrap_or("none"),
        if passed { "infinite-order" } else { "inconclusive" },
        cert.reason.as_ref().map(|r| format!("reason {r}\n")).unwrap_or_default()
    );
    let payload = serde_json::to_value(&cert).expect("certificate serializes");
    Ok(Outcome { payload, passed, plain, csv: None })
}

fn sweep_cmd(table: &KlTable, genus: usize, powers: &str, scheme: Option<SchemeArg>) -> Result<Outcome, CliError> {
    let range = parse_powers(powers)?;
    let rep = jones_rep(genus, table)?;
    let schemes: Vec<Scheme> = match scheme {
        Some(s) => vec![s.into()],
        None => vec![Scheme::Even, Scheme::Odd],
    };
    let mut rows = Vec::new();
    for s in schemes {
        rows.extend(sweep(&rep, s, range.clone())?.into_iter().map(|(row, _)| (s, row)));
    }
    rows.sort_by_key(|(_, r)| r.m);
    let passed = rows.iter().all(|(_, r)| r.verdict == Verdict::InfiniteOrder);
    let verdict = |v: Verdict| if v == Verdict::InfiniteOrder { "infinite-order" } else { "inconclusive" };
    let mut csv = String::from("m,scheme,k,parameter,modulus,verdict\n");
    let mut plain = String::new();
    for (s, r) in &rows {
        let k = r.k.map(|k| k.to_string()).unwrap_or_default();
        let modulus = r.modulus.clone().unwrap_or_default();
        let _ = writeln!(csv, "{},{},{},{},{},{}", r.m, s, k, r.parameter, modulus, verdict(r.verdict));
        let _ = writeln!(plain, "m={:<4} {:<5} {:<24} {:>12} {}", r.m, s, r.parameter, modulus, verdict(r.verdict));
    }
    let payload = json!({
        "g": genus,
        "rows": rows.iter().map(|(s, r)| json!({
            "m": r.m, "scheme": s, "k": r.k, "parameter": r.parameter, "modulus": r.modulus, "verdict": r.verdict,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome { payload, passed, plain, csv: Some(csv) })
}

fn burau_cmd(table: &KlTable, n: usize) -> Result<Outcome, CliError> {
    if !(3..=64).contains(&n) {
        return Err(CliError::Invalid(format!("n = {n} is outside 3..=64")));
    }
    let mats = burau(n);
    let quadratic: Vec<bool> = mats.iter().map(|m| burau_quadratic_residual(m).is_zero()).collect();
    let bridge = (n == 3).then(|| b3_bridge(table));
    let passed = quadratic.iter().all(|&b| b) && bridge.as_ref().is_none_or(|b| b.holds);
    let mut plain = String::new();
    for (i, m) in mats.iter().enumerate() {
        let _ = writeln!(plain, "beta(sigma_{})\n{}\nquadratic: {}\n", i + 1, m.display_in("t"), pass(quadratic[i]));
    }
    if let Some(b) = &bridge {
        let _ = writeln!(plain, "change of basis\n{}\ndet = {}\nbridge: {}", b.change_of_basis.display_in("q"), b.determinant.display_in("q"), pass(b.holds));
    }
    let payload = json!({
        "n": n,
        "variable": "t",
        "matrices_exact": mats,
        "matrices_display": matrices_display(&mats, "t"),
        "quadratic_residual_zero": quadratic,
        "b3_bridge": bridge.map(|b| json!({
            "change_of_basis": matrices_display(std::slice::from_ref(&b.change_of_basis), "q")[0],
            "determinant": b.determinant.display_in("q"),
            "holds": b.holds,
        })),
    });
    Ok(Outcome { payload, passed, plain, csv: None })
}

fn witness_cmd(table: &KlTable, power: u64, scheme: Option<SchemeArg>) -> Result<Outcome, CliError> {
    let rep = jones_rep(2, table)?;
    let w = free_subgroup_witness(&rep, power, scheme_for(power, scheme))?;
    let passed = w.verdict == WitnessVerdict::FreeSubgroup;
    let mut plain = format!(
        "m {} commutator distance {:.7}\nverdict {}\n",
        power,
        w.commutator_distance,
        if passed { "free-subgroup" } else { "inconclusive" }
    );
    if let Some(p) = &w.pingpong {
        let _ = writeln!(plain, "words {} {} power {}", p.words[0], p.words[1], p.power);
    }
    if let Some(r) = &w.reason {
        let _ = writeln!(plain, "reason {r}");
    }
    let payload = serde_json::to_value(&w).expect("witness serializes");
    Ok(Outcome { payload, passed, plain, csv: None })
}
