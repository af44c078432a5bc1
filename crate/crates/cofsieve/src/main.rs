mod cli;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let parsed = match cli::Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { cli::EXIT_USAGE } else { cli::EXIT_PASS };
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    ExitCode::from(cli::run(parsed, &mut stdout))
}
