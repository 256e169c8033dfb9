fn main() -> std::process::ExitCode {
    decograph::cli::main_exit()
}
