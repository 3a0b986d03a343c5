use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hcseries_cli::goldens::write_goldens;
use hcseries_cli::{records_for, render, Cli, Command, Record};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let records = match &cli.command {
        Command::Goldens { out } => match write_goldens(out) {
            Ok(names) => names
                .into_iter()
                .map(|name| Record::Value { query: "golden".into(), value: out.join(name).display().to_string() })
                .collect(),
            Err(e) => return fail(&format!("cannot write goldens to {}: {e}", out.display())),
        },
        command => match records_for(command) {
            Ok(records) => records,
            Err(e) => return fail(&e.to_string()),
        },
    };
    let text = render(&records, cli.format);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}
