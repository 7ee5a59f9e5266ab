use std::process::ExitCode;

use laumon::cli::{parse_args, run, EXIT_INTERNAL};

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            if e.exit_code == 0 {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message);
            }
            return ExitCode::from(e.exit_code as u8);
        }
    };
    let outcome = run(&config);
    let written = match &config.out_path {
        _ if outcome.output.starts_with("error:") => {
            eprint!("{}", outcome.output);
            Ok(())
        }
        Some(path) => std::fs::write(path, &outcome.output),
        None => {
            print!("{}", outcome.output);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INTERNAL as u8);
    }
    ExitCode::from(outcome.status as u8)
}
