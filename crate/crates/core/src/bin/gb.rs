fn main() {
    std::process::exit(tgb::cli::run_cli(std::env::args_os()));
}
