use std::io::Write;

fn main() {
    let report = design_switching::cli::run(std::env::args());
    let _ = writeln!(std::io::stdout(), "{}", report.to_json_string());
    std::process::exit(report.exit_code());
}
