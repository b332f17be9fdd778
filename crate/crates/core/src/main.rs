fn main() {
    let outcome = cayley_delta::cli::run_args(std::env::args_os());
    print!("{}", outcome.stdout);
    if let Some(e) = &outcome.error {
        eprintln!("{}", e.trim_end());
    }
    std::process::exit(outcome.exit_code);
}
