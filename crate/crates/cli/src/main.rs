//! `polyschwarz` command-line tool.
//!
//! Exit status: 0 when every check passed, 1 when any report failed, 2 on
//! usage errors, malformed input, or maps outside the hypotheses of the
//! requested check.

mod config;
mod run;

use std::process::ExitCode;

use clap::Parser;

use config::{Action, Cli, RunConfig};

fn load(cli: Cli) -> Result<RunConfig, String> {
    let cfg = match cli.action {
        Action::Command(command) => RunConfig {
            global: cli.global,
            command,
        },
        Action::Replay { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| format!("{}: {e}", config.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", config.display()))?
        }
    };
    if let Some(path) = &cli.save_config {
        let text = serde_json::to_string_pretty(&cfg).map_err(|e| e.to_string())?;
        std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match load(cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("polyschwarz: {e}");
            return ExitCode::from(2);
        }
    };
    match run::run(&cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polyschwarz {}: {e}", cfg.command.name());
            ExitCode::from(2)
        }
    }
}
