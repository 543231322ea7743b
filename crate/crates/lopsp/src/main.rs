fn main() {
    std::process::exit(lopsp::cli::main_from_args(std::env::args_os()));
}
