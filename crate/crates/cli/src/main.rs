use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ramon::catalog::{self, CatalogEntry};
use ramon::corpus::load_corpus_dir;
use ramon::pomonoid::OrderedMonoid;
use ramon::report::{analyze, AnalysisReport, Budgets};
use ramon::verify::{run_verification, VerifyOptions};
use ramon::{odot, parse_ring_description, Error, Exec, Generator};

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "ramon", version, about = "Radical-annihilator monoids of finite commutative rings")]
struct Cli {
    /// Run every loop on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ideals, spectrum, maps and monoid of a ring description.
    Analyze {
        ring: PathBuf,
        /// Generators of the monoid: any nonempty combination of r, a, d.
        #[arg(long, default_value = "ra")]
        maps: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = Budgets::default().ideals as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_ideals: u64,
        #[arg(long, default_value_t = Budgets::default().monoid as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_monoid: u64,
        #[arg(long, default_value_t = Budgets::default().elements, value_parser = clap::value_parser!(u64).range(1..))]
        max_elements: u64,
    },
    /// Product of ordered monoids given as catalog names or JSON files.
    Odot {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the catalog, or dump one entry.
    Catalog { name: Option<String> },
    /// Run the check suite over the built-in corpus.
    Verify {
        /// Extra ring descriptions (*.json) to include.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Include the 32768-element example.
        #[arg(long)]
        slow: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let result = match cli.command {
        Command::Analyze {
            ring,
            maps,
            json,
            dot,
            max_ideals,
            max_monoid,
            max_elements,
        } => {
            let budgets = Budgets {
                elements: max_elements,
                ideals: max_ideals as usize,
                monoid: max_monoid as usize,
            };
            cmd_analyze(&ring, &maps, json.as_deref(), dot.as_deref(), budgets, exec)
        }
        Command::Odot { inputs, json, dot } => cmd_odot(&inputs, json.as_deref(), dot.as_deref()),
        Command::Catalog { name } => cmd_catalog(name.as_deref()),
        Command::Verify { corpus, slow } => cmd_verify(corpus.as_deref(), slow, exec),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { EXIT_BUDGET } else { EXIT_INPUT })
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents)?;
    Ok(())
}

fn cmd_analyze(
    path: &Path,
    maps: &str,
    json: Option<&Path>,
    dot: Option<&Path>,
    budgets: Budgets,
    exec: Exec,
) -> Result<ExitCode, Error> {
    let generators = Generator::parse_set(maps)?;
    let desc = parse_ring_description(&std::fs::read_to_string(path)?)?;
    let report = analyze(&desc, &generators, budgets, exec)?;
    if let Some(p) = json {
        write_file(p, &report.to_json_string())?;
    }
    if let Some(p) = dot {
        write_file(p, &report_dot(&report))?;
    }
    print!("{}", summary(&report));
    Ok(ExitCode::SUCCESS)
}

/// Hasse diagram of the report's monoid, idempotents in bold.
fn report_dot(report: &AnalysisReport) -> String {
    let m = &report.monoid;
    let mut out = String::from("digraph \"monoid\" {\n  rankdir=BT;\n");
    for e in &m.elements {
        let style = if e.flags.idempotent { ", style=bold" } else { "" };
        let _ = writeln!(out, "  n{} [label=\"{}\"{style}];", e.index, e.word);
    }
    for [lo, hi] in &m.hasse {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

fn summary(report: &AnalysisReport) -> String {
    let r = &report.ring;
    let m = &report.monoid;
    let mut out = String::new();
    let _ = writeln!(out, "ring: {} ({} elements, characteristic {})", r.description, r.size, r.characteristic);
    let flags: Vec<&str> = [
        ("local", r.local),
        ("field", r.field),
        ("semiprime", r.semiprime),
        ("dual", r.dual),
    ]
    .iter()
    .filter(|(_, on)| *on)
    .map(|(name, _)| *name)
    .collect();
    let _ = writeln!(out, "properties: {}", if flags.is_empty() { "-".into() } else { flags.join(", ") });
    let _ = writeln!(out, "ideals: {}", report.ideal_count);
    let _ = writeln!(out, "spectrum: {:?}", report.spectrum);
    let _ = writeln!(out, "nilradical: {}", report.nilradical);
    let _ = writeln!(out, "monoid ({}): K={} k={}", m.generators, m.k.big_k, m.k.ring_k);
    let _ = writeln!(out, "ideal k-numbers: {:?}", m.k.ideal_k);
    let words: Vec<&str> = m.elements.iter().map(|e| e.word.as_str()).collect();
    let _ = writeln!(out, "elements: {}", words.join(" "));
    let idempotents: Vec<&str> = m.elements.iter().filter(|e| e.flags.idempotent).map(|e| e.word.as_str()).collect();
    let _ = writeln!(out, "idempotents: {}", idempotents.join(" "));
    out.push_str("relations:\n");
    for rel in &report.relations {
        let _ = writeln!(out, "  {} = {}: {}", rel.lhs, rel.rhs, if rel.holds { "holds" } else { "fails" });
    }
    let c = &report.classification;
    let _ = writeln!(
        out,
        "catalog match: {}",
        if c.isomorphic.is_empty() { "none".into() } else { c.isomorphic.join(", ") }
    );
    if !c.collapse_of.is_empty() {
        let _ = writeln!(out, "collapse of: {}", c.collapse_of.join(", "));
    }
    out
}

/// A catalog name, or a path to a monoid JSON document.
fn load_monoid(input: &str) -> Result<OrderedMonoid, Error> {
    let path = Path::new(input);
    if path.is_file() {
        OrderedMonoid::from_json(&std::fs::read_to_string(path)?)
    } else {
        Ok(catalog::lookup(input)?.monoid)
    }
}

fn cmd_odot(inputs: &[String], json: Option<&Path>, dot: Option<&Path>) -> Result<ExitCode, Error> {
    let monoids = inputs.iter().map(|s| load_monoid(s)).collect::<Result<Vec<_>, _>>()?;
    let product = odot(&monoids)?;
    if let Some(p) = json {
        write_file(p, &(serde_json::to_string_pretty(&product.to_json())? + "\n"))?;
    }
    if let Some(p) = dot {
        write_file(p, &product.to_dot("odot"))?;
    }
    println!("elements: {}", product.len());
    println!("labels: {}", product.labels().join(" "));
    println!("relations:");
    for (l, r) in product.relations() {
        println!("  {l} = {r}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(name: Option<&str>) -> Result<ExitCode, Error> {
    match name {
        None => {
            for e in catalog::catalog() {
                println!("{:<14} {:>3}  {}", e.name, e.monoid.len(), e.title);
            }
        }
        Some(name) => print!("{}", dump(&catalog::lookup(name)?)),
    }
    Ok(ExitCode::SUCCESS)
}

fn dump(entry: &CatalogEntry) -> String {
    let m = &entry.monoid;
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", entry.name);
    let _ = writeln!(out, "title: {}", entry.title);
    let _ = writeln!(out, "relations: {}", entry.relations.join(", "));
    let _ = writeln!(out, "elements: {}", m.len());
    let _ = writeln!(out, "labels: {}", m.labels().join(" "));
    out.push_str("table:\n");
    for row in m.table() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out.push_str("order:\n");
    for row in m.order().to_bit_strings() {
        let _ = writeln!(out, "  {row}");
    }
    out.push_str(&m.to_dot(&entry.name.replace('-', "_")));
    out
}

fn cmd_verify(corpus: Option<&Path>, slow: bool, exec: Exec) -> Result<ExitCode, Error> {
    let extra = match corpus {
        Some(dir) => load_corpus_dir(dir)?,
        None => Vec::new(),
    };
    let results = run_verification(&VerifyOptions { slow, extra, exec });
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        if r.detail.is_empty() {
            println!("{status}  {}", r.name);
        } else {
            println!("{status}  {:<width$}  {}", r.name, r.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {} failed", results.len(), failed);
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}
