fn main() {
    std::process::exit(ordtop_cli::run(std::env::args_os()));
}
