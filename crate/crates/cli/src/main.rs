use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use crsg::{app, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reads_stdin = std::env::args().any(|a| a == "-");
    let mut stdin = String::new();
    if reads_stdin && !std::io::stdin().is_terminal() {
        if let Err(e) = std::io::stdin().read_to_string(&mut stdin) {
            eprintln!("error: stdin: {e}");
            return ExitCode::from(app::EXIT_PARSE as u8);
        }
    }
    let out = crsg::run(&cli, reads_stdin.then_some(stdin.as_str()));
    eprint!("{}", out.stderr);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.stdout),
        None => std::io::stdout().write_all(out.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(app::EXIT_PARSE as u8);
    }
    ExitCode::from(out.code as u8)
}
