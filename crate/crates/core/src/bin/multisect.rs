fn main() {
    std::process::exit(multisect::cli::run());
}
