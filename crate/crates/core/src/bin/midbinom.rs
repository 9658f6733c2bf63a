fn main() {
    std::process::exit(midbinom::cli::run(std::env::args_os()));
}
