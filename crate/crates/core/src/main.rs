fn main() {
    std::process::exit(nilcomplex::cli::main_with_args(std::env::args_os()));
}
