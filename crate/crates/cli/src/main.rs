use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use hopf_sieve_cli::{run_command_styled, Style};

fn main() -> ExitCode {
    let color = std::io::stdout().is_terminal()
        && std::env::var("HOPF_SIEVE_COLOR").map_or(true, |v| v != "0");
    let report = run_command_styled(std::env::args_os().skip(1), Style { color });
    let written = if report.exit_code == 2 {
        std::io::stderr().write_all(report.body.as_bytes())
    } else {
        std::io::stdout().write_all(report.body.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code as u8)
}
