use clap::Parser;

fn main() {
    let cli = elemorder::Cli::parse();
    let code = elemorder::run(
        cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
