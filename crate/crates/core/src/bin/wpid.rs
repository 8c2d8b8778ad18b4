fn main() -> std::process::ExitCode {
    hyperwp::cli::main()
}
