fn main() {
    std::process::exit(ionpair::cli::run(std::env::args_os()));
}
