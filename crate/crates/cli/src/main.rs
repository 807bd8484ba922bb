use clap::Parser;

fn main() {
    let cli = precy_cli::Cli::parse();
    std::process::exit(precy_cli::run(cli));
}
