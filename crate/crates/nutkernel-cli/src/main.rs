//! `nutkernel`: classify, enumerate and construct nut digraphs.
//!
//! Exit codes: 0 success, 1 malformed input, 2 cap exceeded without
//! `--stress`, 3 theorem violation or failed table check.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nutkernel::constructions::{
    ambi_crossover, coalesce, gadget_from_ambi, multiplier, subdivide_arc, validate_base,
};
use nutkernel::enumerate::{census, Caps, CensusOptions, CensusRow, GenConstraints, NutClass};
use nutkernel::families::{build, FamilySpec};
use nutkernel::io::{emit_digraph6, emit_report, parse_any, parse_edge_list};
use nutkernel::spectral::{as_gadget, classify, NutReport};
use nutkernel::tables::{check_row, is_stress_row, reference_rows};
use nutkernel::{Digraph, Error};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "nutkernel", version, about = "Exact nut digraph classification and enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    #[value(name = "digraph6-stream")]
    Digraph6Stream,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Dextro,
    Laevo,
    Bi,
    Ambi,
    Inter,
    #[value(name = "inter-not-ambi")]
    InterNotAmbi,
}

impl From<ClassArg> for NutClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Dextro => NutClass::Dextro,
            ClassArg::Laevo => NutClass::Laevo,
            ClassArg::Bi => NutClass::Bi,
            ClassArg::Ambi => NutClass::Ambi,
            ClassArg::Inter => NutClass::Inter,
            ClassArg::InterNotAmbi => NutClass::InterNotAmbi,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    M1,
    M2,
    M3,
    D1,
    D2,
    D3,
    Dicycle,
    Circulant,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Subdivide,
    Coalesce,
    Crossover,
    Multiplier,
    #[value(name = "gadget-from-ambi")]
    GadgetFromAmbi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify digraphs given as files or inline strings (stdin if none).
    Classify {
        inputs: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Census of nut classes over a generated digraph space.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Underlying graph k-regular.
        #[arg(long)]
        regular: Option<usize>,
        /// Tournaments instead of general oriented graphs.
        #[arg(long)]
        tournament: bool,
        /// Core underlying graphs only, with in- and out-degrees at least 2.
        #[arg(long)]
        core_filter: bool,
        /// Require in- and out-degrees at least 2.
        #[arg(long)]
        degree_bounds: bool,
        /// Allow pairs of opposite arcs.
        #[arg(long)]
        allow_bidirected: bool,
        /// Class whose members are streamed or archived.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[arg(long)]
        workers: Option<usize>,
        /// Lift the order caps; required by cap overrides.
        #[arg(long)]
        stress: bool,
        /// Limit on classified digraphs (needs --stress).
        #[arg(long)]
        max_digraphs: Option<u64>,
        /// Write one JSON report per class member to this file.
        #[arg(long)]
        certificates: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a family member and report on it.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Order for M and D; n,m for dicycle; n,jump,... for circulant.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a construction and report on the result.
    Construct {
        #[arg(long, value_enum)]
        op: Op,
        /// First operand (or the base digraph of the multiplier).
        #[arg(long)]
        input: String,
        /// Second operand of coalesce and crossover.
        #[arg(long)]
        with: Option<String>,
        /// Arc `u,v` of the first operand.
        #[arg(long, value_delimiter = ',')]
        arc: Vec<usize>,
        /// Arc `s,t` of the second operand.
        #[arg(long, value_delimiter = ',')]
        arc2: Vec<usize>,
        /// Vertex of the first operand to coalesce at.
        #[arg(long)]
        vertex: Option<usize>,
        /// Vertex of the second operand to coalesce at.
        #[arg(long)]
        at: Option<usize>,
        /// Eigenvalue of the base digraph.
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<i64>,
        /// Gadget `SOURCE@ROOT`, one per base vertex or one for all.
        #[arg(long)]
        gadget: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Demand of a rooted digraph, or "not a gadget".
    Gadget {
        #[arg(long)]
        root: usize,
        input: Option<String>,
    },
    /// Recompute the published census tables.
    VerifyTables {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Include the rows that need lifted caps.
        #[arg(long)]
        stress: bool,
    },
}

/// Errors that end the run, with their exit code.
enum Failure {
    Input(String),
    Lib(Error),
    Tables(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Lib(Error::CapExceeded(_)) => 2,
            Failure::Lib(Error::TheoremViolation(_)) => 3,
            Failure::Lib(_) => 1,
            Failure::Tables(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Tables(k) => format!("{k} table cell(s) failed"),
        }
    }
}

type Run<T = ()> = std::result::Result<T, Failure>;

/// Text of a file, or the argument itself when no such file exists.
fn source_text(src: &str) -> Run<String> {
    if Path::new(src).is_file() {
        Ok(fs::read_to_string(src)?)
    } else {
        Ok(src.to_string())
    }
}

/// Digraphs in `text`: one digraph6 or graph6 string per line, or a single
/// edge list.
fn parse_inputs(text: &str) -> Run<Vec<Digraph>> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let Some(first) = lines.first() else {
        return Err(Failure::Input("no digraph in input".into()));
    };
    let line_format = first.starts_with('&')
        || first.starts_with(">>")
        || (!first.contains(char::is_whitespace) && !first.bytes().all(|b| b.is_ascii_digit()));
    if line_format {
        Ok(lines.iter().map(|l| parse_any(l)).collect::<Result<_, _>>()?)
    } else {
        Ok(vec![parse_edge_list(text)?])
    }
}

fn load_one(src: &str) -> Run<Digraph> {
    let mut all = parse_inputs(&source_text(src)?)?;
    if all.len() != 1 {
        return Err(Failure::Input(format!("{src}: expected one digraph, found {}", all.len())));
    }
    Ok(all.remove(0))
}

fn classes(r: &NutReport) -> String {
    let flags = [
        (r.is_dextro_nut, "dextro"),
        (r.is_laevo_nut, "laevo"),
        (r.is_bi_nut, "bi"),
        (r.is_ambi_nut, "ambi"),
        (r.is_inter_nut, "inter"),
    ];
    let named: Vec<&str> = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
    if named.is_empty() {
        "-".into()
    } else {
        named.join(",")
    }
}

fn table_header(out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{:<24} {:>5} {:>6} {:>7}  classes", "digraph6", "order", "arcs", "nullity")
}

fn table_line(out: &mut impl Write, g: &Digraph, r: &NutReport) -> io::Result<()> {
    let d6 = emit_digraph6(g);
    writeln!(
        out,
        "{:<24} {:>5} {:>6} {:>7}  {}",
        d6,
        g.order(),
        g.arc_count(),
        r.nullity,
        classes(r)
    )
}

fn emit_digraphs(out: &mut impl Write, items: &[(Digraph, String)], format: Format) -> Run {
    if format == Format::Table {
        table_header(out)?;
    }
    for (g, prov) in items {
        let r = classify(g);
        match format {
            Format::Json => writeln!(out, "{}", emit_report(g, &r, prov))?,
            Format::Table => table_line(out, g, &r)?,
            Format::Digraph6Stream => writeln!(out, "{}", emit_digraph6(g))?,
        }
    }
    Ok(())
}

fn cmd_classify(inputs: &[String], format: Format) -> Run {
    let mut items = Vec::new();
    if inputs.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        for (i, g) in parse_inputs(&text)?.into_iter().enumerate() {
            items.push((g, format!("stdin:{}", i + 1)));
        }
    }
    for src in inputs {
        let gs = parse_inputs(&source_text(src)?)?;
        let many = gs.len() > 1;
        for (i, g) in gs.into_iter().enumerate() {
            let prov = if many { format!("{src}:{}", i + 1) } else { src.clone() };
            items.push((g, prov));
        }
    }
    emit_digraphs(&mut io::stdout().lock(), &items, format)
}

/// Census row as JSON without the elapsed time, so output is reproducible.
fn row_json(row: &CensusRow) -> Value {
    let mut v = serde_json::to_value(row).expect("census rows serialise");
    if let Some(m) = v.as_object_mut() {
        m.remove("elapsed_seconds");
    }
    v
}

fn row_table(out: &mut impl Write, row: &CensusRow) -> io::Result<()> {
    writeln!(out, "order {}", row.n)?;
    writeln!(out, "underlying graphs {}", row.generated_underlying)?;
    writeln!(out, "digraphs {}", row.generated_oriented)?;
    writeln!(out, "{:<16} {:>14} {:>14} {:>10}", "class", "count", "opposite arcs", "good")?;
    for c in NutClass::ALL {
        let get = |m: &std::collections::BTreeMap<NutClass, u64>| m.get(&c).copied().unwrap_or(0);
        writeln!(
            out,
            "{:<16} {:>14} {:>14} {:>10}",
            c.name(),
            get(&row.counts),
            get(&row.with_digons),
            get(&row.good)
        )?;
    }
    Ok(())
}

fn caps(stress: bool, max_digraphs: Option<u64>) -> Run<Caps> {
    if max_digraphs.is_some() && !stress {
        return Err(Failure::Input("cap overrides require --stress".into()));
    }
    let mut caps = if stress { Caps::stress() } else { Caps::desk() };
    if max_digraphs.is_some() {
        caps.max_oriented = max_digraphs;
    }
    Ok(caps)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    order: usize,
    regular: Option<usize>,
    tournament: bool,
    core_filter: bool,
    degree_bounds: bool,
    allow_bidirected: bool,
    class: Option<ClassArg>,
    workers: Option<usize>,
    stress: bool,
    max_digraphs: Option<u64>,
    certificates: Option<PathBuf>,
    format: Format,
) -> Run {
    if tournament && (regular.is_some() || core_filter || allow_bidirected) {
        return Err(Failure::Input(
            "--tournament excludes --regular, --core-filter and --allow-bidirected".into(),
        ));
    }
    if (format == Format::Digraph6Stream || certificates.is_some()) && class.is_none() {
        return Err(Failure::Input("member output needs --class".into()));
    }
    let mut c = if tournament {
        GenConstraints::tournaments(order)
    } else {
        GenConstraints::oriented(order)
    };
    if let Some(k) = regular {
        c = c.regular(k);
    }
    if core_filter {
        c = c.cores().degree_bounds();
    }
    if degree_bounds {
        c = c.degree_bounds();
    }
    if allow_bidirected {
        c = c.allow_digons();
    }
    let opts = CensusOptions {
        caps: caps(stress, max_digraphs)?,
        workers,
        collect: class.map(NutClass::from),
    };
    let result = census(&c, &opts)?;
    eprintln!("elapsed {:.3} s", result.row.elapsed.as_secs_f64());
    if let Some(path) = certificates {
        let mut f = io::BufWriter::new(fs::File::create(path)?);
        let name = class.map(NutClass::from).map_or("", NutClass::name);
        for g in &result.members {
            writeln!(f, "{}", emit_report(g, &classify(g), &format!("enumerate order {order} {name}")))?;
        }
        f.flush()?;
    }
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", row_json(&result.row))?,
        Format::Table => row_table(&mut out, &result.row)?,
        Format::Digraph6Stream => {
            for g in &result.members {
                writeln!(out, "{}", emit_digraph6(g))?;
            }
        }
    }
    Ok(())
}

fn cmd_family(kind: Kind, params: &[usize], format: Format) -> Run {
    let need = |k: usize| -> Run {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Input(format!("{kind:?} takes {k} parameter(s)")))
        }
    };
    let spec = match kind {
        Kind::M1 | Kind::M2 | Kind::M3 => {
            need(1)?;
            FamilySpec::M(kind as u8 - Kind::M1 as u8 + 1, params[0])
        }
        Kind::D1 | Kind::D2 | Kind::D3 => {
            need(1)?;
            FamilySpec::D(kind as u8 - Kind::D1 as u8 + 1, params[0])
        }
        Kind::Dicycle => {
            need(2)?;
            FamilySpec::DicycleProduct(params[0], params[1])
        }
        Kind::Circulant => {
            if params.len() < 2 {
                return Err(Failure::Input("circulant takes n and at least one jump".into()));
            }
            FamilySpec::Circulant(params[0], params[1..].to_vec())
        }
    };
    let g = build(&spec)?;
    let label = format!("family {kind:?}({})", params.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    emit_result(&g, &label, format)
}

/// The digraph6 line, then the report in the chosen format.
fn emit_result(g: &Digraph, label: &str, format: Format) -> Run {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => {
            writeln!(out, "{}", emit_digraph6(g))?;
            writeln!(out, "{}", emit_report(g, &classify(g), label))?;
        }
        Format::Table => {
            table_header(&mut out)?;
            table_line(&mut out, g, &classify(g))?;
        }
        Format::Digraph6Stream => writeln!(out, "{}", emit_digraph6(g))?,
    }
    Ok(())
}

fn pair(v: &[usize], flag: &str) -> Run<(usize, usize)> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(Failure::Input(format!("--{flag} u,v is required"))),
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Run<T> {
    v.ok_or_else(|| Failure::Input(format!("--{flag} is required")))
}

fn load_gadget(spec: &str) -> Run<nutkernel::spectral::Gadget> {
    let (src, root) = spec
        .rsplit_once('@')
        .ok_or_else(|| Failure::Input(format!("gadget {spec:?} is not SOURCE@ROOT")))?;
    let root: usize = root
        .parse()
        .map_err(|_| Failure::Input(format!("gadget root {root:?} is not an index")))?;
    let g = load_one(src)?;
    as_gadget(&g, root).ok_or_else(|| Failure::Input(format!("{src} with root {root} is not a gadget")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    op: Op,
    input: &str,
    with: Option<&str>,
    arc: &[usize],
    arc2: &[usize],
    vertex: Option<usize>,
    at: Option<usize>,
    lambda: Option<i64>,
    gadgets: &[String],
    format: Format,
) -> Run {
    let g = load_one(input)?;
    let second = || -> Run<Digraph> { load_one(required(with, "with")?) };
    let out = match op {
        Op::Subdivide => {
            let (u, v) = pair(arc, "arc")?;
            subdivide_arc(&g, u, v)?
        }
        Op::Coalesce => coalesce(&g, required(vertex, "vertex")?, &second()?, required(at, "at")?)?,
        Op::Crossover => ambi_crossover(&g, pair(arc, "arc")?, &second()?, pair(arc2, "arc2")?)?,
        Op::GadgetFromAmbi => {
            let (u, v) = pair(arc, "arc")?;
            let x = gadget_from_ambi(&g, u, v)?;
            eprintln!("root {} demand {}", x.root, x.demand);
            x.digraph
        }
        Op::Multiplier => {
            let lambda = required(lambda, "lambda")?;
            let base = validate_base(&g, lambda).ok_or_else(|| {
                Failure::Input(format!("{lambda} is not a simple eigenvalue with a common full eigenvector"))
            })?;
            let loaded: Vec<_> = gadgets.iter().map(|s| load_gadget(s)).collect::<Run<_>>()?;
            let all = if loaded.len() == 1 {
                vec![loaded[0].clone(); g.order()]
            } else {
                loaded
            };
            multiplier(&base, &all)?
        }
    };
    emit_result(&out, &format!("construct {op:?}"), format)
}

fn cmd_gadget(root: usize, input: Option<&str>) -> Run {
    let g = match input {
        Some(src) => load_one(src)?,
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            let mut all = parse_inputs(&text)?;
            if all.len() != 1 {
                return Err(Failure::Input("expected one digraph on stdin".into()));
            }
            all.remove(0)
        }
    };
    if root >= g.order() {
        return Err(Error::IndexOutOfRange { index: root, order: g.order() }.into());
    }
    match as_gadget(&g, root) {
        Some(x) => println!("{}", x.demand),
        None => println!("not a gadget"),
    }
    Ok(())
}

fn cmd_verify_tables(max_order: usize, workers: Option<usize>, stress: bool) -> Run {
    let opts = CensusOptions {
        caps: caps(stress, None)?,
        workers,
        collect: None,
    };
    let mut failed = 0;
    let mut out = io::stdout().lock();
    for r in reference_rows()
        .into_iter()
        .filter(|r| r.n <= max_order && (stress || !is_stress_row(r)))
    {
        let (check, _) = check_row(&r, &opts)?;
        eprintln!("{} n={} elapsed {:.3} s", r.table.name(), r.n, check.elapsed().as_secs_f64());
        for c in &check.cells {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{verdict} {} n={} {}: expected {}, computed {}",
                r.table.name(),
                r.n,
                c.label,
                c.expected,
                c.computed
            )?;
            failed += usize::from(!c.passed());
        }
    }
    if failed > 0 {
        return Err(Failure::Tables(failed));
    }
    Ok(())
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Classify { inputs, format } => cmd_classify(&inputs, format),
        Command::Enumerate {
            order,
            regular,
            tournament,
            core_filter,
            degree_bounds,
            allow_bidirected,
            class,
            workers,
            stress,
            max_digraphs,
            certificates,
            format,
        } => cmd_enumerate(
            order,
            regular,
            tournament,
            core_filter,
            degree_bounds,
            allow_bidirected,
            class,
            workers,
            stress,
            max_digraphs,
            certificates,
            format,
        ),
        Command::Family { kind, params, format } => cmd_family(kind, &params, format),
        Command::Construct {
            op,
            input,
            with,
            arc,
            arc2,
            vertex,
            at,
            lambda,
            gadget,
            format,
        } => cmd_construct(
            op,
            &input,
            with.as_deref(),
            &arc,
            &arc2,
            vertex,
            at,
            lambda,
            &gadget,
            format,
        ),
        Command::Gadget { root, input } => cmd_gadget(root, input.as_deref()),
        Command::VerifyTables {
            max_order,
            workers,
            stress,
        } => cmd_verify_tables(max_order, workers, stress),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
