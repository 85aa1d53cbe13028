use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match steiner_core::cli::cli_dispatch(std::env::args_os()) {
        Ok(out) => {
            print!("{}", out.stdout);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.status as u8)
        }
        Err(msg) => {
            eprint!("{msg}");
            ExitCode::from(2)
        }
    }
}
