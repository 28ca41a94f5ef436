use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cycle_products::cli::run(std::env::args()))
}
