use clap::Parser;
use realdim::cli::{main_with, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; exit code 2 is reserved
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let code = main_with(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
