use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nv_core::cantor::enumerate_delta;
use nv_core::element::ORDER_CAP_DEFAULT;
use nv_core::expr::parse_relation_file;
use nv_core::presentations::{
    rebuild_transposition, reports_to_json, special_elements, summary_table, verify, verify_family, Bounds, Family,
    RelationInstance, SweepLimits, VerificationReport, WitnessPolicy,
};
use nv_core::render::{render_cell_listing, render_partition_svg};
use nv_core::{evaluate_str, Address, Element};

/// Elements of Brin's groups nV: evaluation, comparison and relation sweeps.
#[derive(Parser)]
#[command(name = "nv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Arity {
    /// Dimension n of Cantor^n.
    #[arg(long = "n", value_parser = clap::value_parser!(usize))]
    n: usize,
}

#[derive(Args)]
struct Operands {
    /// Treat operands as paths to element JSON files instead of expressions.
    #[arg(long)]
    from_json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the element JSON of an expression.
    Eval {
        #[command(flatten)]
        arity: Arity,
        #[command(flatten)]
        operands: Operands,
        expr: String,
    },
    /// Print whether two expressions evaluate to the same element.
    Equal {
        #[command(flatten)]
        arity: Arity,
        #[command(flatten)]
        operands: Operands,
        lhs: String,
        rhs: String,
    },
    /// Print the order of an element, or "unknown" past the cap.
    Order {
        #[command(flatten)]
        arity: Arity,
        #[command(flatten)]
        operands: Operands,
        expr: String,
        #[arg(long, default_value_t = ORDER_CAP_DEFAULT)]
        cap: u64,
    },
    /// Verify a relation family; the summary goes to stderr, the JSON report to stdout.
    Verify(VerifyArgs),
    /// List Δ with indices.
    Delta {
        #[command(flatten)]
        arity: Arity,
    },
    /// Write an SVG of the domain and codomain partitions (a cell listing for n > 2).
    Render {
        #[command(flatten)]
        arity: Arity,
        #[command(flatten)]
        operands: Operands,
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild t[α|β] from the finite generators and compare with the direct transposition.
    Rebuild {
        #[command(flatten)]
        arity: Arity,
        alpha: String,
        beta: String,
        /// Print the rebuilt element JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Infinite,
    Hm,
    Finite,
    Lemmas,
    Rebuild,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Infinite => Family::Infinite,
            FamilyArg::Hm => Family::Hm,
            FamilyArg::Finite => Family::Finite,
            FamilyArg::Lemmas => Family::Lemmas,
            FamilyArg::Rebuild => Family::Rebuild,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    arity: Arity,
    #[arg(long, required_unless_present = "file")]
    family: Option<FamilyArg>,
    /// Relation file with a header `n=<arity>` and one `lhs = rhs` per line.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Total address length bound; the coordinate bound for `rebuild`.
    #[arg(long = "L")]
    l: Option<usize>,
    /// HM level bound (default 2).
    #[arg(long)]
    m_max: Option<usize>,
    /// HM bound on the q index (default 3).
    #[arg(long)]
    q_max: Option<usize>,
}

enum Failure {
    Mismatch,
    Usage(String),
}

impl From<nv_core::Error> for Failure {
    fn from(e: nv_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn element(n: usize, operands: &Operands, s: &str) -> Result<Element, Failure> {
    if !operands.from_json {
        return Ok(evaluate_str(s, n)?);
    }
    let g = Element::from_json(&read(Path::new(s))?)?;
    if g.arity() != n {
        return Err(usage(format!("{s}: element has arity {}, expected {n}", g.arity())));
    }
    Ok(g)
}

fn check_arity(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<VerificationReport>, Failure> {
    let n = args.arity.n;
    let Some(path) = &args.file else {
        let family = args.family.expect("clap requires --family without --file");
        let limits = SweepLimits { l: args.l, m_max: args.m_max, q_max: args.q_max };
        return Ok(verify_family(family.into(), n, limits)?);
    };
    let (file_n, rels) = parse_relation_file(&read(path)?)?;
    if file_n != n {
        return Err(usage(format!("{}: header says n={file_n}, expected {n}", path.display())));
    }
    let instances = rels
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs))| RelationInstance::new("FILE", format!("relation {}", i + 1), lhs, rhs));
    Ok(verify(&Bounds { n, ..Default::default() }, instances))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    let mut emit = |s: &str| {
        let _ = writeln!(out, "{s}");
    };
    match cli.command {
        Command::Eval { arity, operands, expr } => {
            check_arity(arity.n)?;
            emit(&element(arity.n, &operands, &expr)?.to_json());
        }
        Command::Equal { arity, operands, lhs, rhs } => {
            check_arity(arity.n)?;
            let same = element(arity.n, &operands, &lhs)?.equals(&element(arity.n, &operands, &rhs)?);
            emit(&same.to_string());
            if !same {
                return Err(Failure::Mismatch);
            }
        }
        Command::Order { arity, operands, expr, cap } => {
            check_arity(arity.n)?;
            match element(arity.n, &operands, &expr)?.order_of(cap) {
                Some(k) => emit(&k.to_string()),
                None => {
                    emit("unknown");
                    return Err(Failure::Mismatch);
                }
            }
        }
        Command::Verify(args) => {
            check_arity(args.arity.n)?;
            let reports = run_verify(&args)?;
            eprint!("{}", summary_table(&reports));
            let json = serde_json::to_string_pretty(&reports_to_json(&reports)).expect("report serializes");
            emit(&json);
            if !reports.iter().all(VerificationReport::passed) {
                return Err(Failure::Mismatch);
            }
        }
        Command::Delta { arity } => {
            check_arity(arity.n)?;
            for (i, a) in enumerate_delta(arity.n).iter().enumerate() {
                emit(&format!("{i}\t{a}"));
            }
        }
        Command::Render { arity, operands, expr, out: path } => {
            check_arity(arity.n)?;
            let g = element(arity.n, &operands, &expr)?;
            let doc = match render_partition_svg(&g) {
                Ok(svg) => svg,
                Err(_) => {
                    eprintln!("n={} has no SVG form; writing a cell listing", arity.n);
                    render_cell_listing(&g)
                }
            };
            match path {
                Some(p) => fs::write(&p, doc).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => emit(doc.trim_end()),
            }
        }
        Command::Rebuild { arity, alpha, beta, json } => {
            check_arity(arity.n)?;
            let (a, b): (Address, Address) = (alpha.parse()?, beta.parse()?);
            for x in [&a, &b] {
                if x.arity() != arity.n {
                    return Err(usage(format!("{x} has arity {}, expected {}", x.arity(), arity.n)));
                }
            }
            let direct = Element::transposition(&a, &b)?;
            let rebuilt = rebuild_transposition(&special_elements(arity.n), &a, &b, WitnessPolicy::First)?;
            let same = rebuilt.equals(&direct);
            if json {
                emit(&rebuilt.to_json());
            }
            emit(&same.to_string());
            if !same {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
