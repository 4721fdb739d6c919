use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = embedcheck::run_args(std::env::args_os());
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None if outcome.status == 2 => std::io::stderr().write_all(outcome.output.as_bytes()),
        None => std::io::stdout().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error[io]: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.status as u8)
}
