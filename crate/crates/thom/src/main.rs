use std::process::ExitCode;

fn main() -> ExitCode {
    thom::cli::main()
}
