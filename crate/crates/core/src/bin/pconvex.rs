fn main() {
    std::process::exit(pconvex::cli::main_with_args(std::env::args_os()));
}
