fn main() {
    std::process::exit(blockweights_cli::run(std::env::args_os()));
}
