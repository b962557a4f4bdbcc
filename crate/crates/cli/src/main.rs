use std::io::Write;

fn main() {
    let outcome = cgl_cli::run_args(std::env::args_os());
    if let Some(msg) = &outcome.message {
        eprintln!("{msg}");
    }
    if let Some(text) = &outcome.output {
        match &outcome.out_path {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("cannot write {}: {e}", path.display());
                    std::process::exit(1);
                }
            }
            None => {
                let _ = std::io::stdout().write_all(text.as_bytes());
            }
        }
    }
    std::process::exit(outcome.code);
}
