fn main() {
    std::process::exit(schurcert::cli::run());
}
