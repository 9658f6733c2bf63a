//! Command-line front end. Exit codes: 0 all selected checks pass, 1 a check
//! failed, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::{parse_rat, TPoly};
use crate::harness::{run_checks, unknown_ids, Limits};
use crate::hankel::hankel_det;
use crate::report::{Header, Report};
use crate::sequences::Family;

#[derive(Parser, Debug)]
#[command(name = "midbinom", version, about = "Exact Hankel determinant tables and checks for central binomial and weighted Motzkin-path sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a sequence as `n value` rows.
    Seq {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        n_max: usize,
        /// Evaluate each term at this rational value of t.
        #[arg(long, allow_hyphen_values = true)]
        t_eval: Option<String>,
    },
    /// Print one Hankel determinant D_k(n).
    Det {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print D_k(n) for k <= k-max, n <= n-max.
    Table {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run the verification harness and write a report.
    Verify(VerifyArgs),
    /// Re-render a saved JSON report.
    Report {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct FamilyArg {
    /// mid, a, b, c, catalan, or shift (with --r).
    #[arg(long)]
    family: String,
    /// Shift r of the family b^(r).
    #[arg(long)]
    r: Option<u64>,
}

impl FamilyArg {
    fn resolve(&self) -> Result<Family, String> {
        match (self.family.as_str(), self.r) {
            ("mid" | "shift" | "shifted", Some(r)) => Ok(Family::Shifted(r)),
            (_, Some(_)) => Err(format!("--r applies only to the mid/shift family, not {:?}", self.family)),
            ("shift" | "shifted", None) => Err("--family shift needs --r".into()),
            (f, None) => f.parse().map_err(|e: crate::Error| e.to_string()),
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check id or group prefix (repeatable); all checks when absent.
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    r_max: Option<usize>,
    /// Series truncation order.
    #[arg(long = "N")]
    order: Option<usize>,
    #[arg(long)]
    periods: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Md,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Md,
    Csv,
}

enum Failure {
    Usage(String),
    Checks(String),
}

/// Run the command line `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Checks(out)) => {
            print!("{out}");
            1
        }
    }
}

fn dispatch(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Seq { family, n_max, t_eval } => {
            let family = family.resolve().map_err(Failure::Usage)?;
            let at = t_eval
                .map(|q| parse_rat(&q).map_err(|e| Failure::Usage(e.to_string())))
                .transpose()?;
            let mut out = String::new();
            for (n, term) in family.terms(n_max + 1).iter().enumerate() {
                match &at {
                    Some(q) => writeln!(out, "{n} {}", crate::arith::format_rat(&term.eval(q))),
                    None => writeln!(out, "{n} {term}"),
                }
                .unwrap();
            }
            Ok(out)
        }
        Command::Det { family, k, n } => {
            let family = family.resolve().map_err(Failure::Usage)?;
            let d = hankel_det(family, k, n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(format!("{d}\n"))
        }
        Command::Table { family, k_max, n_max, format } => {
            let family = family.resolve().map_err(Failure::Usage)?;
            Ok(table(family, k_max, n_max, format))
        }
        Command::Verify(args) => verify(args),
        Command::Report { input, format } => {
            let text = std::fs::read_to_string(&input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
            let report = Report::from_json(&text).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
            Ok(render(&report, format))
        }
    }
}

fn table(family: Family, k_max: usize, n_max: usize, format: TableFormat) -> String {
    let grid: Vec<Vec<TPoly>> = (0..=k_max)
        .map(|k| (0..=n_max).map(|n| hankel_det(family, k, n).expect("enough terms")).collect())
        .collect();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let head: Vec<String> = (0..=n_max).map(|n| format!("n={n}")).collect();
            writeln!(out, "k,{}", head.join(",")).unwrap();
            for (k, row) in grid.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
                writeln!(out, "{k},{}", cells.join(",")).unwrap();
            }
        }
        TableFormat::Md => {
            let head: Vec<String> = (0..=n_max).map(|n| format!("n={n}")).collect();
            writeln!(out, "| k | {} |", head.join(" | ")).unwrap();
            writeln!(out, "|---|{}", "---|".repeat(n_max + 1)).unwrap();
            for (k, row) in grid.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
                writeln!(out, "| {k} | {} |", cells.join(" | ")).unwrap();
            }
        }
    }
    out
}

fn verify(args: VerifyArgs) -> Result<String, Failure> {
    let unknown = unknown_ids(&args.ids);
    if !unknown.is_empty() {
        return Err(Failure::Usage(format!("unknown check id(s): {}", unknown.join(", "))));
    }
    let limits = Limits {
        k_max: args.k_max,
        n_max: args.n_max,
        r_max: args.r_max,
        order: args.order,
        periods: args.periods,
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let checks = run_checks(&args.ids, &limits, jobs);
    let generated_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let header = Header {
        generated_at: format!("unix:{generated_at}"),
        config: json!({ "ids": args.ids, "limits": limits, "jobs": jobs }),
    };
    let report = Report::new(header, checks);
    let failing: Vec<String> = report.failing_checks().iter().map(|c| c.id.clone()).collect();
    let rendered = render(&report, args.format);
    let out = match &args.out {
        Some(path) => {
            std::fs::write(path, &rendered).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            String::new()
        }
        None => rendered,
    };
    eprintln!(
        "pass {} / fail {} / inconclusive {}",
        report.summary.pass, report.summary.fail, report.summary.inconclusive
    );
    if failing.is_empty() {
        Ok(out)
    } else {
        eprintln!("failing checks: {}", failing.join(", "));
        Err(Failure::Checks(out))
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Md => report.to_markdown(),
        Format::Csv => report.to_csv(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(f: &str, r: Option<u64>) -> Result<Family, String> {
        FamilyArg { family: f.into(), r }.resolve()
    }

    #[test]
    fn family_resolution() {
        assert_eq!(family("b", None), Ok(Family::B));
        assert_eq!(family("mid", Some(2)), Ok(Family::Shifted(2)));
        assert_eq!(family("shift3", None), Ok(Family::Shifted(3)));
        assert!(family("a", Some(1)).is_err());
        assert!(family("shift", None).is_err());
        assert!(family("zzz", None).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["midbinom", "det", "--family", "mid"]), 2);
        assert_eq!(run(["midbinom", "verify", "--id", "no-such-check"]), 2);
        assert_eq!(run(["midbinom", "seq", "--family", "b", "--n-max", "2", "--t-eval", "x"]), 2);
    }

    #[test]
    fn csv_table() {
        let t = table(Family::Mid, 1, 2, TableFormat::Csv);
        assert_eq!(t, "k,n=0,n=1,n=2\n0,1,1,1\n1,1,1,-1\n");
    }
}
