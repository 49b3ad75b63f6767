use std::collections::BTreeMap;
use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let env: BTreeMap<String, String> = std::env::vars().collect();
    let (code, output) = copol_core::cli::run_cli(&args, &env);
    let mut stream: Box<dyn Write> = if code == copol_core::cli::EXIT_USAGE {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = stream.write_all(output.as_bytes());
    std::process::exit(code);
}
