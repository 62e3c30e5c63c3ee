use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    ExitCode::from(rectsub::cli::cli_dispatch(&argv) as u8)
}
