use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    let code = semilab::cli::run_command(std::env::args(), &mut stdout);
    ExitCode::from(code as u8)
}
