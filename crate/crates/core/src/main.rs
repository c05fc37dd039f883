use std::process::ExitCode;

fn main() -> ExitCode {
    let result = hecke_jones::cli::run(std::env::args_os());
    if let Err(e) = result.emit() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(result.exit_code as u8)
}
