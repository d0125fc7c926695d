//! Run the report pipeline the CLI uses and print every table with checks.
//!
//! cargo run --example reproduce_tables -- csv

use varpert::report::{run, Command, Format, RunConfig};

fn main() -> varpert::Result<()> {
    let format = match std::env::args().nth(1).as_deref() {
        Some("csv") => Format::Csv,
        Some("json") => Format::Json,
        _ => Format::Markdown,
    };
    for command in [Command::Table1, Command::Table2, Command::Table3, Command::Helium] {
        let mut cfg = RunConfig::new(command);
        cfg.check = true;
        let outcome = run(&cfg)?;
        print!("{}", outcome.render(format));
        eprintln!("{command:?}: exit code would be {}", outcome.exit_code());
    }
    Ok(())
}
