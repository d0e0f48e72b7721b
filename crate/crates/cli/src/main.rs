use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dlcomplex::coeffs::{BaseRing, CoefficientKind, CoefficientSystem};
use dlcomplex::complex::{enumerate_cells, optimize_ordering_detailed, two_cell_bounds};
use dlcomplex::gen::{builtin, parse_structure, serialize_structure, BUILTIN_KEYS};
use dlcomplex::homology::{compute_homology, default_max_dim, HomologyTable};
use dlcomplex::validate::validate_structure;
use dlcomplex::{AtomOrdering, Error, GaussianStructure};

#[derive(Parser, Debug)]
#[command(name = "dlcomplex", version, about = "Order complexes and homology of Gaussian structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cell counts per dimension.
    Cells(Common),
    /// Lower and upper bounds on the number of 2-cells.
    Bounds(Common),
    /// The atom ordering in use, with the conditions chosen by the optimizer.
    Order(Common),
    /// Homology with trivial, sign or Laurent coefficients.
    Homology(Common),
    /// Checks the lcm table of a structure.
    Validate {
        #[command(flatten)]
        common: Common,
        /// Longest words compared in the word-problem check.
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Prints a built-in structure in the interchange format.
    Builtin {
        /// e.g. artin:F4, circ:G12, dual:A3; lists the keys when omitted.
        key: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// `builtin:<key>` or a path to a structure file.
    #[arg(long)]
    structure: String,
    #[arg(long, value_enum, default_value_t = Coeffs::Trivial)]
    coeffs: Coeffs,
    /// Base field; Laurent coefficients default to Q, the others to Z.
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    /// The prime for `--field Fp`.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = OrderMode::Auto)]
    order: OrderMode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Recompute differentials instead of caching them.
    #[arg(long)]
    no_memo: bool,
    /// With `cells`: counts for the identity and the optimized ordering.
    #[arg(long)]
    compare_orderings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coeffs {
    Trivial,
    Sign,
    Laurent,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderMode {
    Auto,
    Declared,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Config(_) => 2,
            Error::Structure(_) | Error::Division(_) => 3,
            Error::Inconsistent(_) | Error::Precondition(_) | Error::Shape(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn config(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Loaded {
    label: String,
    structure: GaussianStructure,
}

fn load(source: &str) -> Result<Loaded, Failure> {
    if let Some(key) = source.strip_prefix("builtin:") {
        let b = builtin(key)?;
        return Ok(Loaded {
            label: b.label,
            structure: b.structure,
        });
    }
    let path = PathBuf::from(source);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| config(format!("cannot read {}: {e}", path.display())))?;
    let structure = parse_structure(&text)?;
    Ok(Loaded {
        label: path.display().to_string(),
        structure,
    })
}

fn system(c: &Common) -> Result<CoefficientSystem, Failure> {
    let kind = match c.coeffs {
        Coeffs::Trivial => CoefficientKind::Trivial,
        Coeffs::Sign => CoefficientKind::Sign,
        Coeffs::Laurent => CoefficientKind::Laurent,
    };
    let base = match (c.field, c.p) {
        (Some(FieldArg::Fp), Some(p)) => BaseRing::Prime(p),
        (Some(FieldArg::Fp), None) => return Err(config("--field Fp needs --p <prime>")),
        (_, Some(_)) => return Err(config("--p is only meaningful with --field Fp")),
        (Some(FieldArg::Q), None) => BaseRing::Rationals,
        (Some(FieldArg::Z), None) => BaseRing::Integers,
        (None, None) if kind == CoefficientKind::Laurent => BaseRing::Rationals,
        (None, None) => BaseRing::Integers,
    };
    Ok(CoefficientSystem::new(kind, base)?)
}

fn ordering(c: &Common, s: &GaussianStructure) -> Result<AtomOrdering, Failure> {
    match c.order {
        OrderMode::Auto => Ok(optimize_ordering_detailed(s)?.ordering),
        OrderMode::Identity => Ok(AtomOrdering::identity(s)),
        OrderMode::Declared => AtomOrdering::declared(s)
            .ok_or_else(|| config("--order declared but the structure has no ORDER line")),
    }
}

/// Cheap consistency check run before every computation.
fn precheck(s: &GaussianStructure) -> Result<(), Failure> {
    let report = validate_structure(s, 2);
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: format!("structure validation failed:\n{report}"),
        })
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn cmd_cells(c: &Common) -> Result<String, Failure> {
    let l = load(&c.structure)?;
    let s = &l.structure;
    precheck(s)?;
    let max_dim = c.max_dim.unwrap_or_else(|| default_max_dim(s));
    let mut out = String::new();
    if c.compare_orderings {
        let id = enumerate_cells(s, &AtomOrdering::identity(s), max_dim)?.counts();
        let opt = enumerate_cells(s, &optimize_ordering_detailed(s)?.ordering, max_dim)?.counts();
        match c.format {
            Format::Text => {
                writeln!(out, "structure: {}", l.label).unwrap();
                writeln!(out, "identity:  {}", join(&id, " ")).unwrap();
                writeln!(out, "optimized: {}", join(&opt, " ")).unwrap();
            }
            Format::Csv => {
                writeln!(out, "dim,identity,optimized").unwrap();
                for n in 0..=max_dim {
                    writeln!(out, "{n},{},{}", id[n], opt[n]).unwrap();
                }
            }
        }
        return Ok(out);
    }
    let ord = ordering(c, s)?;
    let counts = enumerate_cells(s, &ord, max_dim)?.counts();
    match c.format {
        Format::Text => {
            writeln!(out, "structure: {}", l.label).unwrap();
            writeln!(out, "ordering: {}", ord.display(s)).unwrap();
            writeln!(out, "cells: {}", join(&counts, " ")).unwrap();
        }
        Format::Csv => {
            writeln!(out, "dim,count").unwrap();
            for (n, k) in counts.iter().enumerate() {
                writeln!(out, "{n},{k}").unwrap();
            }
        }
    }
    Ok(out)
}

fn cmd_bounds(c: &Common) -> Result<String, Failure> {
    let l = load(&c.structure)?;
    let s = &l.structure;
    precheck(s)?;
    let b = two_cell_bounds(s)?;
    let mut out = String::new();
    match c.format {
        Format::Text => {
            writeln!(out, "structure: {}", l.label).unwrap();
            writeln!(out, "2-cells: lower {} upper {}", b.lower, b.upper).unwrap();
            if s.num_objects() > 1 {
                for (x, lo, hi) in &b.per_object {
                    writeln!(out, "  {}: {lo} {hi}", s.object(*x).name).unwrap();
                }
            }
        }
        Format::Csv => {
            writeln!(out, "object,lower,upper").unwrap();
            for (x, lo, hi) in &b.per_object {
                writeln!(out, "{},{lo},{hi}", s.object(*x).name).unwrap();
            }
            writeln!(out, "total,{},{}", b.lower, b.upper).unwrap();
        }
    }
    Ok(out)
}

fn cmd_order(c: &Common) -> Result<String, Failure> {
    let l = load(&c.structure)?;
    let s = &l.structure;
    precheck(s)?;
    let mut out = String::new();
    if c.order != OrderMode::Auto {
        let ord = ordering(c, s)?;
        match c.format {
            Format::Text => writeln!(out, "ordering: {}", ord.display(s)).unwrap(),
            Format::Csv => {
                writeln!(out, "rank,atom").unwrap();
                for (i, a) in ord.sequence().iter().enumerate() {
                    writeln!(out, "{i},{}", s.atom(*a).name).unwrap();
                }
            }
        }
        return Ok(out);
    }
    let opt = optimize_ordering_detailed(s)?;
    match c.format {
        Format::Text => {
            writeln!(out, "structure: {}", l.label).unwrap();
            writeln!(out, "ordering: {}", opt.ordering.display(s)).unwrap();
            writeln!(out, "2-cell bounds: {} {}", opt.bounds.lower, opt.bounds.upper).unwrap();
            for cond in &opt.chosen {
                writeln!(
                    out,
                    "  {} = min of lcm {} (excess {})",
                    s.atom(cond.witness).name,
                    s.format_word(&cond.lcm),
                    cond.excess
                )
                .unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "rank,atom").unwrap();
            for (i, a) in opt.ordering.sequence().iter().enumerate() {
                writeln!(out, "{i},{}", s.atom(*a).name).unwrap();
            }
        }
    }
    Ok(out)
}

fn homology_csv(h: &HomologyTable) -> String {
    let mut out = String::from("degree,free_rank,torsion,cyclotomic\n");
    for (n, d) in h.degrees.iter().enumerate() {
        let torsion: Vec<&str> = d.torsion.iter().map(|t| t.text.as_str()).collect();
        let cyclo: Vec<String> = h
            .cyclotomic_names(n)
            .into_iter()
            .map(|x| x.unwrap_or_default())
            .collect();
        writeln!(out, "{n},{},{},{}", d.free_rank, torsion.join(";"), cyclo.join(";")).unwrap();
    }
    out
}

fn cmd_homology(c: &Common) -> Result<String, Failure> {
    let l = load(&c.structure)?;
    let s = &l.structure;
    precheck(s)?;
    let sys = system(c)?;
    let ord = ordering(c, s)?;
    let max_dim = c.max_dim.unwrap_or_else(|| default_max_dim(s));
    let h = compute_homology(s, &ord, sys, max_dim, !c.no_memo)?;
    Ok(match c.format {
        Format::Text => format!("structure: {}\ncoefficients: {sys}\n{h}", l.label),
        Format::Csv => homology_csv(&h),
    })
}

fn cmd_validate(c: &Common, depth: usize) -> Result<String, Failure> {
    let l = load(&c.structure)?;
    let report = validate_structure(&l.structure, depth);
    if report.is_ok() {
        Ok(format!("structure: {}\n{report}\n", l.label))
    } else {
        Err(Failure {
            code: 3,
            message: format!("{report}"),
        })
    }
}

fn cmd_builtin(key: Option<&str>) -> Result<String, Failure> {
    match key {
        None => Ok(BUILTIN_KEYS.iter().map(|k| format!("{k}\n")).collect()),
        Some(k) => {
            let k = k.strip_prefix("builtin:").unwrap_or(k);
            Ok(serialize_structure(&builtin(k)?.structure))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cells(c) => cmd_cells(c),
        Command::Bounds(c) => cmd_bounds(c),
        Command::Order(c) => cmd_order(c),
        Command::Homology(c) => cmd_homology(c),
        Command::Validate { common, depth } => cmd_validate(common, *depth),
        Command::Builtin { key } => cmd_builtin(key.as_deref()),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
