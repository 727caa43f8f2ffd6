use clap::{Parser, Subcommand};
use serde_json::Value;
use std::io::{Read, Write};
use std::process::ExitCode;
use tropsec_cli::{run, Command, Family, Options};

#[derive(Parser)]
#[command(name = "tropsec", about = "Exact sections of tropicalisation maps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// linear | grass2 | rank2 | corank1 | hyperdet | hypersurface
    #[arg(long, global = true)]
    family: Option<Family>,
    /// JSON request; `-` reads stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Cmd {
    Membership,
    SectionEval,
    Decompose,
    Rank,
    VerifyHyperdet {
        #[arg(long)]
        orbits_only: bool,
    },
    OracleCompare,
    Remark43Demo,
}

fn read_input(path: &Option<String>) -> Result<Value, String> {
    let text = match path.as_deref() {
        None => return Ok(Value::Null),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            s
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}"))?,
    };
    serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options { family: cli.family, seed: cli.seed, samples: cli.samples, verbose: cli.verbose, orbits_only: false };
    let cmd = match cli.cmd {
        Cmd::Membership => Command::Membership,
        Cmd::SectionEval => Command::SectionEval,
        Cmd::Decompose => Command::Decompose,
        Cmd::Rank => Command::Rank,
        Cmd::VerifyHyperdet { orbits_only } => {
            opts.orbits_only = orbits_only;
            Command::VerifyHyperdet
        }
        Cmd::OracleCompare => Command::OracleCompare,
        Cmd::Remark43Demo => Command::Remark43Demo,
    };
    let input = match read_input(&cli.input) {
        Ok(v) => v,
        Err(e) => {
            println!("{}", serde_json::json!({ "error": e }));
            return ExitCode::from(2);
        }
    };
    let out = run(cmd, &input, &opts);
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&out.output).expect("serialisable"));
    ExitCode::from(out.code as u8)
}
