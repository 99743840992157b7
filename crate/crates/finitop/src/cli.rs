//! Command-line front end. All the work happens in the library; the
//! binary only parses arguments and forwards here.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 capacity guard.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::io::{
    self, ContinuityDoc, FamilyDoc, OrderedSpaceDoc, PreorderDoc, ProductDoc, ProductInputDoc,
    QuotientDoc, RelationCheckDoc, SpaceDoc,
};
use crate::verify::{run_suite, Caps};
use crate::{catalog, dot, ideal, mahavier, topology};

#[derive(Parser)]
#[command(name = "finitop", version, about = "Finite posets, downset spaces, and constraint products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input file (JSON); required by the data commands.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Output format for the data commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the random parts of the verification suite.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Emit only the number of ideals.
    #[arg(long, global = true)]
    pub count_only: bool,

    #[arg(long, global = true, default_value_t = ideal::DEFAULT_MAX_IDEALS)]
    pub max_ideals: u64,

    #[arg(long, global = true, default_value_t = topology::DEFAULT_MAX_OPENS)]
    pub max_opens: usize,

    #[arg(long, global = true, default_value_t = mahavier::DEFAULT_MAX_PRODUCT)]
    pub max_product: u64,
}

#[derive(Subcommand)]
pub enum Command {
    /// Condense a preorder to its canonical partial order.
    Quotient,
    /// Enumerate (or count) the downward subsets of a poset.
    Ideals,
    /// Enumerate a constraint product M(X, f, Q).
    Product,
    /// Build the cone topology of a poset.
    Topology,
    /// Evaluate the three order-continuity conditions on a space.
    CheckPots,
    /// Check the four V-relation axioms of a relation.
    CheckRelation,
    /// Report T1 and Hausdorff separation of a space.
    Separation,
    /// Run the bundled verification suite.
    Verify,
    /// Tabulate ideal counts over a batch of posets (CSV).
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

pub fn run_from_args() -> i32 {
    run(Cli::parse())
}

pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(Outcome { text, verification_failed }) => {
            if let Err(e) = write_output(&cli, &text) {
                eprintln!("error(input): {}", e);
                return 2;
            }
            if verification_failed {
                eprintln!("error(verification): one or more checks failed; see the report");
                1
            } else {
                0
            }
        }
        Err(Error::Input(msg)) => {
            eprintln!("error(input): {}", msg);
            2
        }
        Err(Error::Capacity(msg)) => {
            eprintln!("error(capacity): {}", msg);
            3
        }
    }
}

struct Outcome {
    text: String,
    verification_failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, verification_failed: false }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let caps = Caps {
        max_ideals: cli.max_ideals,
        max_opens: cli.max_opens,
        max_product: cli.max_product,
    };
    match cli.command {
        Command::Quotient => {
            let doc: PreorderDoc = io::parse(&read_input(cli)?)?;
            let result = doc.to_preorder()?.quotient();
            match cli.format {
                Format::Json => Ok(Outcome::ok(io::render(&QuotientDoc::from_result(&result)))),
                Format::Dot => Ok(Outcome::ok(dot::poset_dot(&result.quotient))),
                Format::Csv => unsupported("quotient", "csv"),
            }
        }
        Command::Ideals => {
            let doc: PreorderDoc = io::parse(&read_input(cli)?)?;
            let poset = doc.to_poset()?;
            if cli.count_only {
                let count = ideal::count_ideals(&poset)?;
                return Ok(Outcome::ok(io::render(
                    &serde_json::json!({ "n": poset.n(), "count": count }),
                )));
            }
            let family = ideal::enumerate_ideals(&poset, caps.max_ideals)?;
            match cli.format {
                Format::Json => Ok(Outcome::ok(io::render(&FamilyDoc::from_family(&family)))),
                Format::Dot => Ok(Outcome::ok(dot::ideal_lattice_dot(&family))),
                Format::Csv => unsupported("ideals", "csv"),
            }
        }
        Command::Product => {
            let doc: ProductInputDoc = io::parse(&read_input(cli)?)?;
            let f = doc.f.to_relation()?;
            let q = doc.q.to_preorder()?;
            let product = mahavier::enumerate_product(doc.x, &f, &q, caps.max_product)?;
            match cli.format {
                Format::Json => Ok(Outcome::ok(io::render(&ProductDoc::from_product(&product)))),
                _ => unsupported("product", "dot/csv"),
            }
        }
        Command::Topology => {
            let doc: PreorderDoc = io::parse(&read_input(cli)?)?;
            let poset = doc.to_poset()?;
            let space = topology::pots_topology(&poset, caps.max_opens)?;
            match cli.format {
                Format::Json => Ok(Outcome::ok(io::render(&SpaceDoc::from_space(&space.space)))),
                _ => unsupported("topology", "dot/csv"),
            }
        }
        Command::CheckPots => {
            let doc: OrderedSpaceDoc = io::parse(&read_input(cli)?)?;
            let space = doc.to_ordered_space()?;
            let report = topology::is_continuous_pots(&space);
            Ok(Outcome::ok(io::render(&ContinuityDoc::from_report(&report))))
        }
        Command::CheckRelation => {
            let doc: RelationCheckDoc = io::parse(&read_input(cli)?)?;
            let (f, space) = doc.into_parts()?;
            let report = f.v_report(space.as_ref())?;
            Ok(Outcome::ok(io::render(&io::VReportDoc::from_report(&report))))
        }
        Command::Separation => {
            let doc: SpaceDoc = io::parse(&read_input(cli)?)?;
            let report = doc.to_space()?.separation();
            Ok(Outcome::ok(io::render(&io::SeparationDoc::from_report(&report))))
        }
        Command::Verify => {
            let report = run_suite(cli.seed, &caps);
            Ok(Outcome { text: report.render(), verification_failed: !report.passed() })
        }
        Command::Count => {
            let batch: Vec<(String, crate::order::Poset)> = match &cli.input {
                None => catalog::small_posets(),
                Some(_) => {
                    let docs: Vec<PreorderDoc> = io::parse(&read_input(cli)?)?;
                    docs.iter()
                        .enumerate()
                        .map(|(i, d)| d.to_poset().map(|p| (format!("poset{}", i), p)))
                        .collect::<Result<_>>()?
                }
            };
            let mut out = String::from("name,n,ideals\n");
            for (name, poset) in batch {
                out.push_str(&format!("{},{},{}\n", name, poset.n(), ideal::count_ideals(&poset)?));
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn unsupported(command: &str, format: &str) -> Result<Outcome> {
    Err(Error::Input(format!("format {} is not supported by {}", format, command)))
}

fn read_input(cli: &Cli) -> Result<String> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::Input("this command requires --input FILE".to_string()))?;
    fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {}", path.display(), e)))
}

fn write_output(cli: &Cli, text: &str) -> std::result::Result<(), String> {
    match &cli.output {
        None => {
            print!("{}", text);
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
    }
}
