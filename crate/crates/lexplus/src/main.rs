use std::io::Write;

fn main() {
    let outcome = lexplus::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
