use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = nilchain::cli::run(args, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
