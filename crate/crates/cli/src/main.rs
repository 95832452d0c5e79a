fn main() {
    std::process::exit(parkseq_cli::run(std::env::args_os()));
}
