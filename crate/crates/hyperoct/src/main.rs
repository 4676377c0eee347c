fn main() {
    std::process::exit(hyperoct::cli::main());
}
