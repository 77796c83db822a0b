fn main() {
    std::process::exit(nes::cli::main_with_env());
}
