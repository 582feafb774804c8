fn main() {
    std::process::exit(gridcycles::cli::main_from_env());
}
