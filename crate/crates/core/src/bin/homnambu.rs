fn main() {
    std::process::exit(homnambu::cli::args::run(std::env::args_os()));
}
