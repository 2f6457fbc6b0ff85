use std::env;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use rfa_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_dir = env::var_os("RFA_OUT_DIR").map(PathBuf::from);
    match run(cli, out_dir.as_deref()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("rfa: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
