fn main() {
    std::process::exit(seacheck::cli::main_with_args(std::env::args_os()));
}
