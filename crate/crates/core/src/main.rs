fn main() {
    std::process::exit(quatinv::cli::run());
}
