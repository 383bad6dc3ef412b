fn main() {
    std::process::exit(springer_core::cli::main());
}
