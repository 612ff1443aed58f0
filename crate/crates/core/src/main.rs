use clap::Parser;

use easterfield::cli::{run, Cli};

fn main() {
    // usage errors exit with status 2 from clap itself
    let cli = Cli::parse();
    let code = run(
        cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
