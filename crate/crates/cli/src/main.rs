use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, code) = drinfeld_cli::run_args(std::env::args_os());
    if code == 0 {
        print!("{out}");
    } else {
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
