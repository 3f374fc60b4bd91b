fn main() {
    std::process::exit(omlab::cli::main_from(std::env::args_os()));
}
