//! Command-line front end: convert between alternating words and their
//! trees, enumerate either family, print count and polynomial tables, and
//! run the verification harness.
//!
//! Exit codes: 0 on success, 1 when the input was readable but invalid
//! (a non-alternating word, a malformed tree, a failed verification), 2
//! on usage and parse errors.

use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use entringer::bijection::{phi, phi_inverse};
use entringer::perm::{self, AlternatingPermutation, Permutation, PermError};
use entringer::poly::{self, ENUMERATION_CAP};
use entringer::tree::{self, IncreasingTree, TreeError};
use entringer::verify::{run_verify, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "entringer",
    version,
    about = "Alternating permutations, 0-1-2 increasing trees, and the chain-leaf bijection between them"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map an alternating word to its increasing tree
    Map {
        /// The word, e.g. "2 1 5 3 4" (read from standard input when omitted)
        word: Option<String>,
        /// Print the tree in DOT format instead of as a parent array
        #[arg(long)]
        dot: bool,
        /// Also print the case taken at each level of the descent
        #[arg(long)]
        trace: bool,
    },
    /// Map an increasing tree back to its alternating word
    Unmap {
        /// The tree's parent array, e.g. "0 1 1 3 4" (read from standard input when omitted)
        tree: Option<String>,
    },
    /// List or count one family at a given size
    Enum {
        /// Which family to walk
        family: Family,
        /// Size of the objects
        n: usize,
        /// Restrict to first letter (words) or chain leaf (trees) k
        #[arg(long)]
        k: Option<u32>,
        /// Print how many objects there are instead of listing them
        #[arg(long)]
        count_only: bool,
        /// With perms: append inversion and vincular 31-2 counts, tab-separated
        #[arg(long, conflicts_with = "count_only")]
        stats: bool,
    },
    /// Print the count triangle or the bivariate polynomial triangle
    Table {
        /// Which table to print
        kind: TableKind,
        /// Largest row
        n_max: usize,
        /// One "n k value" line per cell instead of the aligned triangle
        #[arg(long)]
        machine: bool,
    },
    /// Run the exhaustive verification suite and report per section
    Verify {
        /// Round trips in both directions, all objects up to this size
        #[arg(long, default_value_t = VerifyConfig::default().roundtrip_n)]
        roundtrip_n: usize,
        /// First letter vs. chain leaf, all objects up to this size
        #[arg(long, default_value_t = VerifyConfig::default().refinement_n)]
        refinement_n: usize,
        /// Class-by-class size comparison up to this size
        #[arg(long, default_value_t = VerifyConfig::default().equinumerosity_n)]
        equinumerosity_n: usize,
        /// Count-table cross-checks up to this row
        #[arg(long, default_value_t = VerifyConfig::default().counts_n)]
        counts_n: usize,
        /// Bivariate recurrence check up to this row
        #[arg(long, default_value_t = VerifyConfig::default().poly_n)]
        poly_n: usize,
        /// Boustrophedon identity check up to this row
        #[arg(long, default_value_t = VerifyConfig::default().identity_n)]
        identity_n: usize,
    },
    /// Print a tree in DOT format, main-chain edges bold
    Dot {
        /// The tree's parent array (read from standard input when omitted)
        tree: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Family {
    /// Alternating permutations
    Perms,
    /// 0-1-2 increasing trees
    Trees,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum TableKind {
    /// Entringer counts (recurrence-built, any depth)
    Counts,
    /// Class polynomials in q and p (enumeration-built, capped)
    Poly,
}

/// What went wrong, split by exit code: usage problems exit 2, readable
/// but invalid data exits 1.
enum AppError {
    Usage(String),
    Semantic(String),
    Io(io::Error),
}

impl From<PermError> for AppError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::Parse(_) | PermError::Empty => AppError::Usage(e.to_string()),
            _ => AppError::Semantic(e.to_string()),
        }
    }
}

impl From<TreeError> for AppError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::Parse(_) | TreeError::Empty => AppError::Usage(e.to_string()),
            _ => AppError::Semantic(e.to_string()),
        }
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::Io(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(AppError::Semantic(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

/// The given argument, or else everything on standard input.
fn arg_or_stdin(arg: Option<String>) -> Result<String, AppError> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    match cli.cmd {
        Command::Map { word, dot, trace } => {
            let pi: AlternatingPermutation = arg_or_stdin(word)?.parse()?;
            let (t, tr) = phi(&pi);
            if dot {
                write!(out, "{}", t.to_dot())?;
            } else {
                writeln!(out, "{t}")?;
            }
            if trace {
                write!(out, "{tr}")?;
            }
        }
        Command::Unmap { tree } => {
            let t: IncreasingTree = arg_or_stdin(tree)?.parse()?;
            let (pi, _) = phi_inverse(&t);
            writeln!(out, "{pi}")?;
        }
        Command::Enum { family, n, k, count_only, stats } => {
            run_enum(&mut out, family, n, k, count_only, stats)?;
        }
        Command::Table { kind, n_max, machine } => {
            if n_max < 1 {
                return Err(AppError::Usage("tables start at n = 1".to_string()));
            }
            match kind {
                TableKind::Counts => {
                    let table = poly::entringer_table_by_recurrence(n_max);
                    if machine {
                        write!(out, "{}", table.to_machine_text())?;
                    } else {
                        write!(out, "{}", table.to_aligned_text())?;
                    }
                }
                TableKind::Poly => {
                    if n_max > ENUMERATION_CAP {
                        return Err(AppError::Usage(format!(
                            "polynomial tables are built by enumeration and stop at n = {ENUMERATION_CAP}"
                        )));
                    }
                    write!(out, "{}", poly::poly_table(n_max).to_machine_text())?;
                }
            }
        }
        Command::Verify {
            roundtrip_n,
            refinement_n,
            equinumerosity_n,
            counts_n,
            poly_n,
            identity_n,
        } => {
            let cfg = VerifyConfig {
                roundtrip_n,
                refinement_n,
                equinumerosity_n,
                counts_n,
                poly_n,
                identity_n,
            };
            let report = run_verify(&cfg);
            write!(out, "{report}")?;
            if report.all_passed() {
                writeln!(out, "all sections passed ({} checks)", report.total_checks())?;
            } else {
                out.flush()?;
                return Err(AppError::Semantic("verification failed".to_string()));
            }
        }
        Command::Dot { tree } => {
            let t: IncreasingTree = arg_or_stdin(tree)?.parse()?;
            write!(out, "{}", t.to_dot())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run_enum(
    out: &mut impl io::Write,
    family: Family,
    n: usize,
    k: Option<u32>,
    count_only: bool,
    stats: bool,
) -> Result<(), AppError> {
    if n < 1 {
        return Err(AppError::Usage("objects have size at least 1".to_string()));
    }
    if let Some(k) = k {
        if k < 1 || k as usize > n {
            return Err(AppError::Usage(format!(
                "k = {k} is outside 1..={n}"
            )));
        }
    }
    if stats && family == Family::Trees {
        return Err(AppError::Usage(
            "--stats applies to perms only".to_string(),
        ));
    }
    if count_only {
        // Counting needs no enumeration: the recurrence gives any depth.
        let table = poly::entringer_table_by_recurrence(n);
        let total = match k {
            Some(k) => table.get(n, k),
            None => table.row(n).iter().sum(),
        };
        writeln!(out, "{total}")?;
        return Ok(());
    }
    if n > ENUMERATION_CAP {
        return Err(AppError::Usage(format!(
            "listing is enumeration-built and stops at n = {ENUMERATION_CAP}; --count-only works at any depth"
        )));
    }
    let spaced = |w: &[u32]| {
        w.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut failed: Option<io::Error> = None;
    match family {
        Family::Perms => perm::for_each_alternating(n, |w| {
            if failed.is_some() || k.is_some_and(|k| w[0] != k) {
                return;
            }
            let line = if stats {
                let p = Permutation::new(w.to_vec()).expect("enumerated words are permutations");
                writeln!(out, "{}\t{}\t{}", spaced(w), p.inv(), p.occ_31_2())
            } else {
                writeln!(out, "{}", spaced(w))
            };
            if let Err(e) = line {
                failed = Some(e);
            }
        }),
        Family::Trees => tree::for_each_tree(n, |parents, leaf| {
            if failed.is_some() || k.is_some_and(|k| leaf != k) {
                return;
            }
            if let Err(e) = writeln!(out, "{}", spaced(parents)) {
                failed = Some(e);
            }
        }),
    }
    match failed {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}
