fn main() {
    std::process::exit(flagsig::cli::main());
}
