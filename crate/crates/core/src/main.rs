fn main() {
    std::process::exit(hopfkit::cli::main_with(std::env::args_os()));
}
