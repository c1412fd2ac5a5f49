use clap::Parser;

fn main() {
    std::process::exit(mch::cli::run(mch::cli::Cli::parse()));
}
