use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let code = naples::run(std::env::args_os(), &mut out, &mut err);
    ExitCode::from(u8::try_from(code).unwrap_or(2))
}
