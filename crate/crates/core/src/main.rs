use std::io::Write;

fn main() {
    let out = msep::cli::run_args(std::env::args_os());
    // a closed pipe on either stream is not an error for this tool
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
