fn main() {
    std::process::exit(infofield::cli::main_entry());
}
