use clap::Parser;
use spintor::cli::{execute, Cli};
use spintor::error::EXIT_INPUT;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = execute(
        cli.command,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
