use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use spaceform::report::{self, Format, GroupSpec, Report, RunConfig};
use spaceform::Error;

#[derive(Parser)]
#[command(name = "spaceform", version, about = "Monoids of self-maps of spherical space forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// M(G,n): cosets of realizable degrees per endomorphism
    Monoid(Common),
    /// E(G,n): the group of self-homotopy equivalences
    Equiv(Common),
    /// The monoid of self-maps of RP^{2n}
    Even(Common),
    /// Which integers occur as degrees of self-maps
    Degrees {
        #[command(flatten)]
        common: Common,
        #[arg(allow_negative_numbers = true, required = true)]
        k: Vec<BigInt>,
    },
    /// Run every invariant suite for the group
    Check(Common),
    /// Sweep cyclic groups C_1..C_max
    Census {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 24)]
        max_m: usize,
    },
}

#[derive(Args)]
struct Common {
    /// cyclic:m | quaternion:4k | table:path.json
    #[arg(long)]
    group: Option<GroupSpec>,
    /// The sphere has dimension 2n+1 (odd) or 2n (even)
    #[arg(long, default_value_t = 1)]
    n: u64,
    #[arg(long)]
    d_table: Option<PathBuf>,
    /// json | csv | md
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 10)]
    window: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            group: self.group.clone(),
            n: self.n,
            d_table: self.d_table.clone(),
            format: self.format,
            window: self.window,
            ..RunConfig::default()
        }
    }
}

fn emit(report: &Report, common: &Common) -> Result<(), Error> {
    let text = report.render(common.format);
    match &common.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Monoid(c) => emit(&report::cmd_monoid(&c.config())?, c)?,
        Command::Equiv(c) => emit(&report::cmd_equiv(&c.config())?, c)?,
        Command::Even(c) => emit(&report::cmd_even(&c.config())?, c)?,
        Command::Degrees { common, k } => emit(&report::cmd_degrees(&common.config(), k)?, common)?,
        Command::Census { common, max_m } => {
            let config = RunConfig {
                max_m: *max_m,
                ..common.config()
            };
            emit(&report::cmd_census(&config)?, common)?
        }
        Command::Check(c) => {
            let mut warnings = Vec::new();
            let outcome = report::cmd_check(&c.config(), &mut warnings);
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            let outcome = outcome?;
            emit(&outcome.report, c)?;
            return Ok(if outcome.passed { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is reserved for failed validation
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(w) = e.witness() {
                let doc = json!({ "error": e.to_string(), "witness": w });
                print!("{}", report::render_json(&doc));
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
