fn main() {
    std::process::exit(bellphase::cli::run());
}
