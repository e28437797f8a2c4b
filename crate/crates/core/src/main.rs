fn main() {
    std::process::exit(tanaka::cli::run(std::env::args_os()));
}
