//! Command-line front end.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engine::{
    closed_form_series, nested_route, product_route, z_nest_series, Integrand, InvariantRecord,
    Localized, RationalRepr, Route, DEFAULT_SEED,
};
use crate::error::Error;
use crate::toric::{EquivariantLineBundle, ToricSurface};
use crate::verify::{self, Suite};
use crate::vertex::Specializer;

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nesthilb", version, about = "Localization invariants of nested Hilbert schemes of points on toric surfaces")]
pub struct Cli {
    /// Seed for the random specializations of the equivariant parameters.
    #[arg(long, global = true, env = "NESTHILB_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Worker threads for fixed-point sums (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum RouteArg {
    Nested,
    Product,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Compare {
    ClosedForm,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Computes one invariant.
    Integrate {
        /// Builtin surface (p2, p1xp1, hirzebruch(a)) or a surface config file.
        #[arg(long)]
        surface: String,
        /// Bundle label or comma-separated divisor coefficients; repeat for a product.
        #[arg(long, default_value = "O")]
        bundle: Vec<String>,
        /// Bundles whose total Chern classes divide the integrand.
        #[arg(long = "divide-by")]
        divide_by: Vec<String>,
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::Nested)]
        route: RouteArg,
    },
    /// Tabulates the generating series up to a total degree.
    Series {
        #[arg(long)]
        surface: String,
        #[arg(long, default_value = "O")]
        bundle: String,
        #[arg(long)]
        cap: u32,
        #[arg(long, value_enum)]
        compare: Option<Compare>,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        cap: Option<u32>,
    },
}

/// Output of `integrate`.
#[derive(Serialize, Debug)]
pub struct IntegrateOutput {
    pub records: Vec<InvariantRecord>,
    /// All routes produced the same value.
    pub agreement: bool,
}

#[derive(Serialize, Debug)]
pub struct SeriesRow {
    pub n1: u32,
    pub n2: u32,
    pub value: RationalRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<RationalRepr>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Serialize, Debug)]
pub struct SeriesOutput {
    pub surface: String,
    pub bundle: String,
    pub cap: u32,
    pub rows: Vec<SeriesRow>,
}

pub fn load_surface(spec: &str) -> crate::Result<ToricSurface> {
    let path = Path::new(spec);
    if spec.ends_with(".toml") || path.is_file() {
        ToricSurface::from_config_file(path)
    } else {
        ToricSurface::builtin(spec)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SpecializationDisagreement { .. }
        | Error::NonConstantLocalization { .. }
        | Error::SubDegreeResidue { .. }
        | Error::RetriesExhausted(_)
        | Error::TrivialWeight => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI, writing results to `out` and diagnostics to `err`;
/// returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let mut sp = Specializer::new(cli.seed);
    match &cli.command {
        Command::Integrate {
            surface,
            bundle,
            divide_by,
            n1,
            n2,
            route,
        } => {
            let s = load_surface(surface)?;
            let ms = bundles(&s, bundle)?;
            let ns = bundles(&s, divide_by)?;
            let integrand = Integrand::ratio(&ms, &ns);
            let label = integrand_label(bundle, divide_by);
            let routes: &[Route] = match route {
                RouteArg::Nested => &[Route::Nested],
                RouteArg::Product => &[Route::Product],
                RouteArg::Both => &[Route::Nested, Route::Product],
            };
            let mut records = Vec::new();
            for &r in routes {
                let v = match r {
                    Route::Nested => nested_route(&s, &integrand, *n1, *n2, &mut sp)?,
                    Route::Product => product_route(&s, &integrand, *n1, *n2, &mut sp)?,
                };
                records.push(record(&s, &label, *n1, *n2, r, &v));
            }
            let agreement = records.windows(2).all(|w| w[0].value == w[1].value);
            let output = IntegrateOutput { records, agreement };
            write_integrate(cli.format, &output, out)?;
            Ok(if agreement { 0 } else { EXIT_INCONSISTENT })
        }
        Command::Series {
            surface,
            bundle,
            cap,
            compare,
        } => {
            let s = load_surface(surface)?;
            let m = s.bundle(bundle)?;
            let z = z_nest_series(&s, &m, *cap, &mut sp)?;
            let closed = match compare {
                Some(Compare::ClosedForm) => Some(closed_form_series(&s.chern_numbers(&m)?, *cap)?),
                None => None,
            };
            let mut rows = Vec::new();
            for total in 0..=*cap {
                for n2 in 0..=total / 2 {
                    let n1 = total - n2;
                    let v = z.coeff(n1, n2);
                    let c = closed.as_ref().map(|c| c.coeff(n1, n2));
                    rows.push(SeriesRow {
                        n1,
                        n2,
                        value: (&v).into(),
                        matches: c.as_ref().map(|c| *c == v),
                        closed_form: c.as_ref().map(Into::into),
                    });
                }
            }
            let all_match = rows.iter().all(|r| r.matches.unwrap_or(true));
            let output = SeriesOutput {
                surface: s.name().to_string(),
                bundle: bundle.clone(),
                cap: *cap,
                rows,
            };
            write_series(cli.format, &output, out)?;
            Ok(if all_match { 0 } else { EXIT_VERIFY_FAILED })
        }
        Command::Verify { suite, cap } => {
            let cap = cap.unwrap_or_else(|| suite.default_cap());
            let checks = verify::run(*suite, cap, cli.seed)?;
            let mut ok = true;
            for c in &checks {
                writeln!(out, "{c}").map_err(io)?;
                ok &= c.pass;
            }
            let passed = checks.iter().filter(|c| c.pass).count();
            writeln!(out, "{passed}/{} checks passed", checks.len()).map_err(io)?;
            Ok(if ok { 0 } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn bundles(s: &ToricSurface, specs: &[String]) -> crate::Result<Vec<EquivariantLineBundle>> {
    specs.iter().map(|b| s.bundle(b)).collect()
}

fn integrand_label(numer: &[String], denom: &[String]) -> String {
    let n = numer.join("*");
    if denom.is_empty() {
        n
    } else {
        format!("{n}/{}", denom.join("*"))
    }
}

fn record(s: &ToricSurface, label: &str, n1: u32, n2: u32, route: Route, v: &Localized) -> InvariantRecord {
    InvariantRecord {
        surface: s.name().to_string(),
        bundle: label.to_string(),
        n1,
        n2,
        route,
        value: (&v.value).into(),
        specializations: v.specializations.iter().map(Into::into).collect(),
        agreement: true,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Config(format!("output: {e}"))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_integrate(format: Format, o: &IntegrateOutput, out: &mut dyn Write) -> crate::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(o).map_err(|e| Error::Config(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)
        }
        Format::Csv => {
            writeln!(out, "surface,bundle,n1,n2,route,num,den,agreement").map_err(io)?;
            for r in &o.records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&r.surface),
                    csv_field(&r.bundle),
                    r.n1,
                    r.n2,
                    r.route,
                    r.value.num,
                    r.value.den,
                    o.agreement && r.agreement
                )
                .map_err(io)?;
            }
            Ok(())
        }
    }
}

fn write_series(format: Format, o: &SeriesOutput, out: &mut dyn Write) -> crate::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(o).map_err(|e| Error::Config(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)
        }
        Format::Csv => {
            let compared = o.rows.iter().any(|r| r.closed_form.is_some());
            if compared {
                writeln!(out, "n1,n2,num,den,closed_num,closed_den,match").map_err(io)?;
            } else {
                writeln!(out, "n1,n2,num,den").map_err(io)?;
            }
            for r in &o.rows {
                match (&r.closed_form, r.matches) {
                    (Some(c), Some(m)) => writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.n1, r.n2, r.value.num, r.value.den, c.num, c.den, m
                    ),
                    _ => writeln!(out, "{},{},{},{}", r.n1, r.n2, r.value.num, r.value.den),
                }
                .map_err(io)?;
            }
            Ok(())
        }
    }
}
