fn main() {
    std::process::exit(lieforge_core::cli::run());
}
