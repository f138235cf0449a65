fn main() {
    std::process::exit(compcs::cli::run(std::env::args_os()));
}
