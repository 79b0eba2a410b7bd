fn main() -> std::process::ExitCode {
    gft_cli::run(std::env::args_os())
}
