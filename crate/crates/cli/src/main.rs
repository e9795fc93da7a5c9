mod commands;
mod report;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use commands::{Branch, NeckArgs};
use report::Report;
use scenario::Scenario;

#[derive(Parser, Debug)]
#[command(name = "dfchow", version, about = "Chow rings of glued blown-up twistor spaces")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Scenario file; the positional argument takes precedence.
    #[arg(long, global = true, value_name = "FILE")]
    scenario: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ScenarioArg {
    /// Scenario file.
    #[arg(value_name = "SCENARIO")]
    path: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bases and multiplication table of a branch ring or the quadric.
    RingShow {
        /// `1`, `2` or `q`.
        #[arg(long, default_value = "1")]
        branch: Branch,
        #[command(flatten)]
        scenario: ScenarioArg,
    },
    /// The equalizer ring of the two branches.
    Equalizer {
        /// Pair JSON `{"branch1": {...}, "branch2": {...}}` to test for membership.
        #[arg(long, value_name = "PAIR")]
        member: Option<PathBuf>,
        #[command(flatten)]
        scenario: ScenarioArg,
    },
    /// Which pairs of surfaces glue across the double locus.
    Surfaces {
        #[arg(long, value_name = "N")]
        dmax: Option<i64>,
        #[arg(long, num_args = 4, value_names = ["D1", "IN1", "D2", "IN2"])]
        pair: Option<Vec<String>>,
        #[command(flatten)]
        scenario: ScenarioArg,
    },
    /// Polarized charges of the scenario bundles.
    Charge {
        #[command(flatten)]
        scenario: ScenarioArg,
    },
    /// Circle bundles and phases on the neck.
    Neck {
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["A", "B"])]
        curve: Option<Vec<i64>>,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["A", "B"])]
        character: Option<Vec<i64>>,
        #[arg(long, value_name = "FILE")]
        decorate: Option<PathBuf>,
        #[command(flatten)]
        scenario: ScenarioArg,
    },
    /// The real structure on the quadric.
    Real {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[command(flatten)]
        scenario: ScenarioArg,
    },
}

fn pair_of(v: Option<Vec<i64>>) -> Option<(i64, i64)> {
    v.map(|v| (v[0], v[1]))
}

fn run(cli: Cli, cmd: &str) -> Result<Report> {
    let path_of = |s: &ScenarioArg| s.path.clone().or_else(|| cli.scenario.clone());
    let load = |s: &ScenarioArg| -> Result<Option<Scenario>> {
        path_of(s).map(|p| Scenario::load(&p)).transpose()
    };
    let required = |s: &ScenarioArg| -> Result<Scenario> {
        Ok(load(s)?.unwrap_or_else(Scenario::default_p3))
    };
    match &cli.command {
        Command::RingShow { branch, scenario } => commands::ring_show(&required(scenario)?, *branch, cmd),
        Command::Equalizer { member, scenario } => {
            commands::equalizer(&required(scenario)?, member.as_deref(), cmd)
        }
        Command::Surfaces { dmax, pair, scenario } => {
            let pair = pair.as_deref().map(commands::parse_surface_pair).transpose()?;
            commands::surfaces(load(scenario)?.as_ref(), *dmax, pair, cmd)
        }
        Command::Charge { scenario } => {
            let s = load(scenario)?.ok_or_else(|| anyhow::anyhow!("charge needs a scenario with bundle and polarization blocks"))?;
            commands::charge(&s, cmd)
        }
        Command::Neck { curve, character, decorate, scenario } => {
            let args = NeckArgs {
                curve: pair_of(curve.clone()),
                character: pair_of(character.clone()),
                decorate: decorate.clone(),
            };
            commands::neck(load(scenario)?.as_ref(), &args, cmd)
        }
        Command::Real { samples, scenario } => commands::real(*samples, cmd, load(scenario)?.as_ref()),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cmd = std::iter::once("dfchow".to_string()).chain(args).collect::<Vec<_>>().join(" ");
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli, &cmd) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.all_hold() {
                ExitCode::SUCCESS
            } else {
                for i in report.identities.iter().filter(|i| !i.holds) {
                    eprintln!("identity failed: {}", i.name);
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
