use clap::Parser;

fn main() {
    let cli = ybe::cli::Cli::parse();
    let out = ybe::cli::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
