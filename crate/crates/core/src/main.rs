fn main() {
    let code = sharpgm::cli::run(std::env::args_os());
    std::process::exit(code);
}
