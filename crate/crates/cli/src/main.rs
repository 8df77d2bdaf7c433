use clap::Parser;

fn main() {
    let cli = whopf_cli::Cli::parse();
    std::process::exit(whopf_cli::run(&cli));
}
