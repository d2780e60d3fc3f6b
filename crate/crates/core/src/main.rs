fn main() {
    std::process::exit(cohdiag::cli::main_entry());
}
