fn main() {
    std::process::exit(sr_cone::cli::run(std::env::args_os()));
}
