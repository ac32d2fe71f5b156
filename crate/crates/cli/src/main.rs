//! `hopfint`: exact verification of finite-dimensional Hopf algebras
//! presented by structure constants. Reports are JSON on stdout with a
//! human summary on stderr; exit code 0 means every check passed, 1
//! means a mathematical check failed or was inconclusive, 2 means the
//! input was rejected (unparseable or failing the axiom gate).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfint_cli::format::HopfFileDocument;
use hopfint_cli::report::ReportDocument;
use hopfint_cli::suite;
use hopfint_core::catalog::{dual_group_algebra, group_algebra, sweedler4, taft, CayleyTable};
use hopfint_core::hopf::HopfAlgebra;
use hopfint_core::integrals::Side;
use hopfint_core::scalar::Field;

#[derive(Parser)]
#[command(
    name = "hopfint",
    version,
    about = "Exact checker for finite-dimensional Hopf algebras: integrals, group-likes, duality isomorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a structure-constant document against the Hopf algebra axioms.
    Verify { file: PathBuf },
    /// Compute a basis of the one-sided integral functionals.
    Integrals {
        file: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Compute and certify the distinguished group-like element.
    Gamma { file: PathBuf },
    /// Antipode bijectivity and multiplicative order.
    Antipode { file: PathBuf },
    /// Emit a built-in algebra as a canonical document.
    Catalog {
        #[command(subcommand)]
        entry: CatalogCmd,
    },
    /// Run one named identity battery.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        iso: IsoArg,
    },
    /// Run the complete certification battery.
    Suite { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoArg {
    /// Trivialization of a tensor product with the regular comodule.
    Doi,
    /// Morphisms into free comodules against plain linear maps.
    FreeHom,
    /// Full rank of the integral-induced pairing into the dual.
    Sweedler,
    /// The hom-space out of the regular comodule as a twisted tensor line.
    Structure,
    /// Hom-dimension equality across the functor pair, plus round trips.
    Adjunction,
    /// Evaluation/coevaluation zig-zags.
    Snake,
    /// Currying isomorphisms through duals.
    Currying,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Fp,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Group algebra of the cyclic group of a given order.
    Group {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Function algebra on the cyclic group (the dual group algebra).
    Dualgroup {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The 4-dimensional algebra on a group-like g and a skew-primitive x.
    Sweedler4 {
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The n^2-dimensional Taft algebra over F_p with parameter q.
    Taft {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    ExitCode::from(run())
}

fn run() -> u8 {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Verify { file } => cmd_verify(&file),
        Cmd::Integrals { file, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            gated_report(&file, "integrals", |h| suite::integrals_checks(h, side))
        }
        Cmd::Gamma { file } => gated_report(&file, "gamma", |h| {
            let mut records = suite::grouplike_checks(h);
            records.extend(suite::gamma_line_checks(h));
            records
        }),
        Cmd::Antipode { file } => gated_report(&file, "antipode", suite::antipode_checks),
        Cmd::Catalog { entry } => cmd_catalog(entry),
        Cmd::Check { file, iso } => {
            let (command, builder): (&str, fn(&HopfAlgebra) -> Vec<_>) = match iso {
                IsoArg::Doi => ("check.doi", suite::doi_checks),
                IsoArg::FreeHom => ("check.free-hom", suite::free_hom_checks),
                IsoArg::Sweedler => ("check.sweedler", suite::sweedler_checks),
                IsoArg::Structure => ("check.structure", suite::structure_checks),
                IsoArg::Adjunction => ("check.adjunction", suite::adjunction_checks),
                IsoArg::Snake => ("check.snake", suite::snake_checks),
                IsoArg::Currying => ("check.currying", suite::currying_checks),
            };
            gated_report(&file, command, builder)
        }
        Cmd::Suite { file } => gated_report(&file, "suite", suite::suite_checks),
    }
}

/// Parse and shape-check a document; reject without touching axioms.
fn load_document(path: &Path) -> Result<(HopfAlgebra, String), String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc = HopfFileDocument::from_json_str(&text).map_err(|e| e.to_string())?;
    let h = doc.to_algebra().map_err(|e| e.to_string())?;
    Ok((h, path.display().to_string()))
}

fn emit(report: &ReportDocument) {
    print!("{}", report.to_json_string());
    eprint!("{}", report.human_summary());
}

/// The `verify` command: the axiom check IS the gate, so failures exit
/// with the input-rejection code.
fn cmd_verify(file: &Path) -> u8 {
    let (h, input) = match load_document(file) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let records = suite::verify_checks(&h);
    let report = ReportDocument::assemble(
        "verify",
        &input,
        h.field().to_string(),
        h.dim(),
        suite::SUITE_SEED,
        records,
    );
    emit(&report);
    if report.exit_code() == 0 {
        0
    } else {
        let failures: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status != hopfint_cli::report::CheckStatus::Pass)
            .map(|c| c.name.as_str())
            .collect();
        eprintln!("error: document rejected at the axiom gate: {}", failures.join(", "));
        2
    }
}

/// Every other algebra command: parse, gate on the axioms (exit 2 with
/// diagnostics on failure), then run the battery and map its verdict
/// to the exit code.
fn gated_report(
    file: &Path,
    command: &str,
    builder: impl Fn(&HopfAlgebra) -> Vec<hopfint_cli::report::CheckRecord>,
) -> u8 {
    let (h, input) = match load_document(file) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let gate = h.verify();
    if !gate.all_ok() {
        eprintln!(
            "error: document rejected at the axiom gate: {}",
            gate.failures().join(", ")
        );
        return 2;
    }
    let report = ReportDocument::assemble(
        command,
        &input,
        h.field().to_string(),
        h.dim(),
        suite::SUITE_SEED,
        builder(&h),
    );
    emit(&report);
    report.exit_code() as u8
}

fn resolve_field(field: FieldArg, p: Option<u64>) -> Result<Field, String> {
    match (field, p) {
        (FieldArg::Q, None) => Ok(Field::Q),
        (FieldArg::Q, Some(_)) => Err("--p only applies with --field fp".to_string()),
        (FieldArg::Fp, Some(p)) => {
            let f = Field::Fp(p);
            f.validate().map_err(|e| e.to_string())?;
            Ok(f)
        }
        (FieldArg::Fp, None) => Err("--field fp requires --p".to_string()),
    }
}

fn cmd_catalog(entry: CatalogCmd) -> u8 {
    let built: Result<(HopfAlgebra, Option<PathBuf>), String> = match entry {
        CatalogCmd::Group { order, field, p, out } => resolve_field(field, p)
            .and_then(|f| {
                CayleyTable::cyclic(order)
                    .and_then(|t| group_algebra(f, &t))
                    .map_err(|e| e.to_string())
            })
            .map(|h| (h, out)),
        CatalogCmd::Dualgroup { order, field, p, out } => resolve_field(field, p)
            .and_then(|f| {
                CayleyTable::cyclic(order)
                    .and_then(|t| dual_group_algebra(f, &t))
                    .map_err(|e| e.to_string())
            })
            .map(|h| (h, out)),
        CatalogCmd::Sweedler4 { field, p, out } => resolve_field(field, p)
            .and_then(|f| sweedler4(f).map_err(|e| e.to_string()))
            .map(|h| (h, out)),
        CatalogCmd::Taft { n, p, q, out } => {
            let f = Field::Fp(p);
            f.validate()
                .map_err(|e| e.to_string())
                .and_then(|_| taft(f, n, &f.from_i64(q)).map_err(|e| e.to_string()))
                .map(|h| (h, out))
        }
    };
    let (h, out) = match built {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let doc = HopfFileDocument::from_algebra(&h);
    let json = doc.to_json_string();
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
            eprintln!("wrote {}-dimensional document to {}", h.dim(), path.display());
        }
        None => print!("{json}"),
    }
    0
}
