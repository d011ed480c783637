fn main() {
    std::process::exit(graphpos::cli::run(std::env::args_os()));
}
