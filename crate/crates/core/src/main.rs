fn main() {
    std::process::exit(hyperocc::cli::run(std::env::args()));
}
