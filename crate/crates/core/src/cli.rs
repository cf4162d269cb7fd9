//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage, 3 construction
//! failure, 4 I/O or parse error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::asymptotics::{alpha_hat_series, constants, gap_bound_constant};
use crate::constructions::{construct, construct_bn, Family};
use crate::export::{to_svg, to_tikz, PolygonDocument};
use crate::geometry::{self, PolygonChecks, VERIFY_TOL};
use crate::report::{self, GapReport, TABLE_HEADERS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "smallgon", version, about = "Small polygons of large area")]
struct Cli {
    /// Suppress non-data output.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one polygon and write it as a document or figure.
    Construct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolygonFormat::Json)]
        format: PolygonFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the area comparison table for n = 6, 8, ..., n-max.
    Table {
        #[arg(long, default_value_t = 24)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
    /// Re-run the geometric checks on a JSON polygon document.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = VERIFY_TOL)]
        tol: f64,
    },
    /// Compare a scaled gap at finite n with its limit.
    Asymptotics {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Series::UbGap)]
        series: Series,
        /// Perturbation parameter for `--series penalty` (default b + 1).
        #[arg(long)]
        u: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolygonFormat {
    Json,
    Csv,
    Svg,
    Tikz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Series {
    UbGap,
    MnGap,
    Alpha,
    Penalty,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut ctx = Context {
        out,
        err,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Construct {
            family,
            n,
            format,
            out,
        } => ctx.construct(family, n, format, out),
        Command::Table { n_max, format } => ctx.table(n_max, format),
        Command::Verify { file, tol } => ctx.verify(&file, tol),
        Command::Asymptotics { n, series, u } => ctx.asymptotics(n, series, u),
    }
}

struct Context<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    quiet: bool,
}

impl Context<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }

    fn note(&mut self, msg: impl std::fmt::Display) {
        if !self.quiet {
            let _ = writeln!(self.err, "{msg}");
        }
    }

    fn emit(&mut self, text: &str, path: Option<PathBuf>) -> i32 {
        match path {
            Some(path) => match fs::write(&path, text) {
                Ok(()) => {
                    self.note(format_args!("wrote {}", path.display()));
                    EXIT_OK
                }
                Err(e) => self.fail(EXIT_IO, format_args!("cannot write {}: {e}", path.display())),
            },
            None => match self.out.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => self.fail(EXIT_IO, e),
            },
        }
    }

    fn construct(&mut self, family: Family, n: usize, format: PolygonFormat, path: Option<PathBuf>) -> i32 {
        if n % 2 != 0 || n < family.min_n() {
            return self.fail(
                EXIT_USAGE,
                format_args!("--n must be even and at least {} for --family {family}", family.min_n()),
            );
        }
        let result = match construct(family, n) {
            Ok(r) => r,
            Err(e) => return self.fail(EXIT_CONSTRUCTION, format_args!("constructing {family} n={n}: {e}")),
        };
        let rendered = match format {
            PolygonFormat::Json | PolygonFormat::Csv => PolygonDocument::from_construction(&result).map(|doc| {
                if matches!(format, PolygonFormat::Json) {
                    doc.to_json() + "\n"
                } else {
                    doc.to_csv()
                }
            }),
            PolygonFormat::Svg => to_svg(result.polygon.as_ref().expect("even-n polygon")),
            PolygonFormat::Tikz => to_tikz(result.polygon.as_ref().expect("even-n polygon")),
        };
        match rendered {
            Ok(text) => self.emit(&text, path),
            Err(e) => self.fail(EXIT_CONSTRUCTION, format_args!("rendering {family} n={n}: {e}")),
        }
    }

    fn table(&mut self, n_max: usize, format: TableFormat) -> i32 {
        if n_max < 6 || n_max % 2 != 0 {
            return self.fail(EXIT_USAGE, "--n-max must be even and at least 6");
        }
        let rows = match report::table1(n_max) {
            Ok(rows) => rows,
            Err(e) => return self.fail(EXIT_CONSTRUCTION, e),
        };
        let text = match format {
            TableFormat::Csv => render_csv(&rows),
            TableFormat::Markdown => render_markdown(&rows),
        };
        self.emit(&text, None)
    }

    fn verify(&mut self, file: &std::path::Path, tol: f64) -> i32 {
        let text = match fs::read_to_string(file) {
            Ok(t) => t,
            Err(e) => return self.fail(EXIT_IO, format_args!("cannot read {}: {e}", file.display())),
        };
        let doc = match PolygonDocument::from_json(&text) {
            Ok(d) => d,
            Err(e) => return self.fail(EXIT_IO, format_args!("malformed document {}: {e}", file.display())),
        };
        let polygon = doc.polygon();
        let checks = PolygonChecks::run(&polygon, tol);
        let area_matches = geometry::shoelace_area(&polygon)
            .map(|a| (a - doc.area).abs() <= tol)
            .unwrap_or(false);
        // regular polygons of even order have only the long diagonals at unit length
        let structure_required = doc.family != Family::Regular.name();

        let mut all_pass = true;
        let mut lines = Vec::new();
        for (name, ok) in checks.as_pairs().into_iter().chain([("area", area_matches)]) {
            let required = name != "diameter_graph_optimal" || structure_required;
            all_pass &= ok || !required;
            let verdict = if ok { "pass" } else { "fail" };
            let suffix = if required { "" } else { " (not required)" };
            lines.push(format!("{name}: {verdict}{suffix}"));
        }
        let mut text = lines.join("\n");
        text.push('\n');
        if self.emit(&text, None) != EXIT_OK {
            return EXIT_IO;
        }
        if all_pass {
            self.note("all checks passed");
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        }
    }

    fn asymptotics(&mut self, n: usize, series: Series, u: Option<f64>) -> i32 {
        if n < 6 || n % 2 != 0 {
            return self.fail(EXIT_USAGE, "--n must be even and at least 6");
        }
        let line = match series {
            Series::UbGap => report::gap_vs_bound(n).map(|v| compare("ub-gap", n, v, gap_bound_constant())),
            Series::MnGap => report::gap_vs_mossinghoff(n).map(|v| compare("mn-gap", n, v, constants().d(n))),
            Series::Penalty => {
                let u = u.unwrap_or(constants().b + 1.0);
                report::perturbation_penalty(n, u)
                    .map(|v| compare(&format!("penalty(u={u})"), n, v, report::perturbation_limit(u)))
            }
            Series::Alpha => construct_bn(n).map(|bn| {
                let numeric = bn.alpha_star.expect("B_n records its maximizer");
                let series = alpha_hat_series(n);
                format!(
                    "alpha n={n} numeric={numeric:.12} series={series:.12} difference={:.6e}\n",
                    numeric - series
                )
            }),
        };
        match line {
            Ok(line) => self.emit(&line, None),
            Err(e) => self.fail(EXIT_CONSTRUCTION, e),
        }
    }
}

fn compare(name: &str, n: usize, value: f64, limit: f64) -> String {
    format!(
        "{name} n={n} scaled={value:.10} limit={limit:.10} ratio={:.6}\n",
        value / limit
    )
}

fn render_csv(rows: &[GapReport]) -> String {
    let mut out = TABLE_HEADERS.join(",");
    out.push('\n');
    for r in rows {
        let cols: Vec<String> = r.columns().iter().map(|v| format!("{v:.10}")).collect();
        out.push_str(&format!("{},{}\n", r.n, cols.join(",")));
    }
    out
}

fn render_markdown(rows: &[GapReport]) -> String {
    let mut out = format!("| {} |\n", TABLE_HEADERS.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(TABLE_HEADERS.len())));
    for r in rows {
        let cols: Vec<String> = r.columns().iter().map(|v| format!("{v:.10}")).collect();
        out.push_str(&format!("| {} | {} |\n", r.n, cols.join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("smallgon").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(run_args(&["construct", "--family", "square", "--n", "6"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["construct", "--family", "bn", "--n", "7"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["construct", "--family", "mossinghoff-prime", "--n", "6"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["table", "--n-max", "5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn construct_json_area() {
        let (code, out, _) = run_args(&["construct", "--family", "bn", "--n", "6", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let doc = PolygonDocument::from_json(&out).unwrap();
        assert!((doc.area - 0.6749814429).abs() < 5e-11);
    }

    #[test]
    fn table_single_row() {
        let (code, out, _) = run_args(&["table", "--n-max", "6", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("6,0.3509301889,"));
    }

    #[test]
    fn missing_file_is_io_error() {
        let (code, _, err) = run_args(&["verify", "--file", "/nonexistent/doc.json"]);
        assert_eq!(code, EXIT_IO);
        assert!(err.contains("cannot read"));
    }
}
