fn main() {
    std::process::exit(polyproof::cli::run(std::env::args_os()));
}
