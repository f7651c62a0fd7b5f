use std::io::{self, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = nbrecon::cli::run(std::env::args_os(), &mut || {
        let mut buf = String::new();
        stdin.lock().read_to_string(&mut buf).map(|_| buf)
    }, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
