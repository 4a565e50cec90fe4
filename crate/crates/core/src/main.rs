fn main() {
    std::process::exit(gamma_envelope::cli::main_with_args(std::env::args_os()));
}
