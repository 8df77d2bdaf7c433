//! Batch front-end: parse structure descriptions, dispatch verifications and
//! constructions, emit human-readable and machine-readable reports.

pub mod input;
pub mod report;
pub mod tasks;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use input::{InputDocument, Resolver};
use report::ReportDocument;

#[derive(Parser, Debug)]
#[command(
    name = "whopf",
    about = "Exact verification and construction for finite-dimensional weak Hopf algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Parser)]
pub struct CommonArgs {
    /// Input document (JSON)
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Also write the report as JSON to this path
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Candidate bound for exhaustive enumerations
    #[arg(long, default_value_t = 10_000_000)]
    pub max_enum: u64,
    /// Worker threads for the pure enumeration layers
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    /// Run only the task with this name
    #[arg(long)]
    pub task: Option<String>,
    /// Print the catalog of checkable identities and exit
    #[arg(long)]
    pub list_identities: bool,
    /// Append per-task wall-clock times to the text report
    #[arg(long)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify weak Hopf axioms and the projection-identity catalog
    Verify(CommonArgs),
    /// Build and verify groupoid algebras
    Groupoid(CommonArgs),
    /// Verify comodule algebras and compute coinvariants
    Comodule(CommonArgs),
    /// Check integrals, convolution inverses and cleftness
    Cleft(CommonArgs),
    /// Build weak crossed products
    Crossed(CommonArgs),
    /// Run the cleft ↔ crossed round trips
    Roundtrip(CommonArgs),
    /// Search for crossed-system equivalence witnesses
    Equiv(CommonArgs),
    /// Classify center-valued 2-cocycles and verify the class bijection
    H2(CommonArgs),
}

impl Command {
    fn op(&self) -> &'static str {
        match self {
            Command::Verify(_) => "verify",
            Command::Groupoid(_) => "groupoid",
            Command::Comodule(_) => "comodule",
            Command::Cleft(_) => "cleft",
            Command::Crossed(_) => "crossed",
            Command::Roundtrip(_) => "roundtrip",
            Command::Equiv(_) => "equiv",
            Command::H2(_) => "h2",
        }
    }

    fn args(&self) -> &CommonArgs {
        match self {
            Command::Verify(a)
            | Command::Groupoid(a)
            | Command::Comodule(a)
            | Command::Cleft(a)
            | Command::Crossed(a)
            | Command::Roundtrip(a)
            | Command::Equiv(a)
            | Command::H2(a) => a,
        }
    }
}

/// Exit codes: 0 all pass, 1 task failure, 2 parse/validation error,
/// 3 enumeration bound exceeded.
pub fn run(cli: &Cli) -> i32 {
    let args = cli.command.args();
    if args.list_identities {
        for (label, description) in whopf_core::report::identity_catalog() {
            println!("{label:24} {description}");
        }
        return 0;
    }
    let Some(path) = &args.input else {
        eprintln!("error: --input <path> is required");
        return 2;
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let doc: InputDocument = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!(
                "error: {} at line {} column {}",
                e,
                e.line(),
                e.column()
            );
            return 2;
        }
    };
    let field = match doc.field.resolve() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    let op = cli.command.op();
    // tasks of the subcommand's kind, optionally filtered by name; a missing
    // task list for `verify`/`groupoid` falls back to every eligible target
    let mut selected: Vec<(String, input::TaskDecl)> = Vec::new();
    for (k, t) in doc.tasks.iter().enumerate() {
        if t.op != op {
            continue;
        }
        let name = t.name.clone().unwrap_or_else(|| format!("task{k}"));
        if let Some(filter) = &args.task {
            if &name != filter {
                continue;
            }
        }
        selected.push((
            name,
            input::TaskDecl {
                op: t.op.clone(),
                name: t.name.clone(),
                hopf: t.hopf.clone(),
                algebra: t.algebra.clone(),
                groupoid: t.groupoid.clone(),
                lhs: t.lhs.clone(),
                rhs: t.rhs.clone(),
            },
        ));
    }
    if selected.is_empty() && args.task.is_none() {
        match op {
            "verify" => {
                // default to every groupoid and every structure carrying
                // full weak-Hopf data
                let hopf_structures = doc
                    .structures
                    .iter()
                    .filter(|(_, s)| !s.comult.is_empty() && !s.antipode.is_empty())
                    .map(|(n, _)| n);
                for name in doc.groupoids.keys().chain(hopf_structures) {
                    selected.push((
                        format!("verify:{name}"),
                        input::TaskDecl {
                            op: "verify".into(),
                            name: None,
                            hopf: Some(name.clone()),
                            algebra: None,
                            groupoid: None,
                            lhs: None,
                            rhs: None,
                        },
                    ));
                }
            }
            "groupoid" => {
                for name in doc.groupoids.keys() {
                    selected.push((
                        format!("groupoid:{name}"),
                        input::TaskDecl {
                            op: "groupoid".into(),
                            name: None,
                            hopf: None,
                            algebra: None,
                            groupoid: Some(name.clone()),
                            lhs: None,
                            rhs: None,
                        },
                    ));
                }
            }
            _ => {}
        }
    }
    if selected.is_empty() {
        eprintln!("error: no {op:?} tasks in the input document");
        return 2;
    }

    // all referenced names must resolve before anything runs
    for (name, task) in &selected {
        let hopf_like = |n: &String| doc.groupoids.contains_key(n) || doc.structures.contains_key(n);
        let mut dangling: Option<&String> = None;
        if let Some(h) = &task.hopf {
            if !hopf_like(h) {
                dangling = Some(h);
            }
        }
        for a in [&task.algebra, &task.lhs, &task.rhs].into_iter().flatten() {
            if !hopf_like(a) {
                dangling = Some(a);
            }
        }
        if let Some(g) = &task.groupoid {
            if !doc.groupoids.contains_key(g) {
                dangling = Some(g);
            }
        }
        if let Some(d) = dangling {
            eprintln!("error: tasks.{name}: name {d:?} does not resolve");
            return 2;
        }
    }

    let field_name = match field {
        whopf_core::field::FieldSpec::Rationals => "Q".to_string(),
        whopf_core::field::FieldSpec::PrimeField { p } => format!("GF({p})"),
    };
    let resolver = Resolver::new(&doc, field, args.max_enum);
    let mut report = ReportDocument::new(field_name);
    let mut timings = Vec::new();
    let mut too_large = false;
    for (name, task) in &selected {
        let started = Instant::now();
        let outcome = tasks::run_task(&resolver, task, name, args.parallel);
        timings.push(started.elapsed().as_millis());
        too_large |= outcome.search_too_large;
        report.push(outcome.report);
    }

    print!(
        "{}",
        report.to_text(if args.timings { Some(&timings) } else { None })
    );
    if let Some(json_path) = &args.json_out {
        if let Err(e) = std::fs::write(json_path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", json_path.display());
            return 2;
        }
    }
    if too_large {
        3
    } else if report.all_passed() {
        0
    } else {
        1
    }
}
