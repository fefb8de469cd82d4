fn main() {
    std::process::exit(tubex::cli::run());
}
