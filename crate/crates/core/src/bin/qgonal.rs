fn main() {
    std::process::exit(qgonal::cli::main_with_args(std::env::args_os()));
}
