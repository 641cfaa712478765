fn main() {
    std::process::exit(tsdecomp::cli::run(std::env::args_os()));
}
