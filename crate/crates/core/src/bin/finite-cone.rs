fn main() -> std::process::ExitCode {
    finite_cone::cli::run()
}
