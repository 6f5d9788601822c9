fn main() {
    std::process::exit(hypersum::cli::run(std::env::args_os()));
}
