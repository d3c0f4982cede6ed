fn main() {
    std::process::exit(coconvex_cli::run(std::env::args_os()));
}
