fn main() {
    std::process::exit(altring::cli::run(std::env::args_os()));
}
