use std::io::Write;
use std::process::ExitCode;

// Diagonal sentences hold numerals hundreds of octal digits long, and every
// pass over them recurses that deep.
const STACK: usize = 256 << 20;

fn main() -> ExitCode {
    let args: Vec<_> = std::env::args_os().collect();
    let outcome = std::thread::Builder::new()
        .stack_size(STACK)
        .spawn(move || selfref::cli::run(args))
        .expect("spawn worker thread")
        .join()
        .expect("worker thread panicked");
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status as u8)
}
