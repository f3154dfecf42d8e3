fn main() -> std::process::ExitCode {
    surfcyc::cli::run(std::env::args_os())
}
