use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(severi_lab::cli::run())
}
