fn main() {
    std::process::exit(sp_engine::cli::run(std::env::args_os()));
}
