use clap::Parser;

fn main() {
    let cli = pspec::cli::Cli::parse();
    std::process::exit(pspec::cli::run(cli));
}
