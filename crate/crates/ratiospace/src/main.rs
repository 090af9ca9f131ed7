fn main() {
    std::process::exit(ratiospace::cli::run());
}
