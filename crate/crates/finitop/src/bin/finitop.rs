fn main() {
    std::process::exit(finitop::cli::run_from_args());
}
