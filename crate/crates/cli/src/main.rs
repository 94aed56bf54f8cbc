use std::process::ExitCode;

use clap::Parser;

use sacts_cli::{report::INPUT_ERROR, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (text, code) = run(&cli);
    println!("{}", text.trim_end());
    ExitCode::from(code)
}
