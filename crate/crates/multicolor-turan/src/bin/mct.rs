fn main() {
    std::process::exit(multicolor_turan::cli::run_main());
}
