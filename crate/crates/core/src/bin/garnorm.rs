fn main() {
    std::process::exit(garnorm::shell::cli::run());
}
