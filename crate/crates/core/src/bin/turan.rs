fn main() {
    std::process::exit(turan::cli::main_with_args(std::env::args_os()));
}
