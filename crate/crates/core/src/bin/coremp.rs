fn main() {
    std::process::exit(coremp::cli::run_from_env() as i32);
}
