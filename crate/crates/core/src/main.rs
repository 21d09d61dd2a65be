fn main() {
    std::process::exit(h3_dunkl::cli::run(std::env::args_os()));
}
