//! Edits a builtin presentation, validates it and runs the full report.
//!
//! With a path argument, loads that fixture instead.

use lscat::fixtures::{builtin, validate, SpacePresentation};
use lscat::report::{run, ReportOptions};

fn main() -> lscat::Result<()> {
    let presentation = match std::env::args().nth(1) {
        Some(path) => SpacePresentation::load(path)?,
        None => {
            let mut sp = builtin("toy-trunc-poly")?;
            sp.name = "toy-capped".into();
            sp.degree_cap = 24;
            sp
        }
    };

    let check = validate(&presentation);
    for w in &check.warnings {
        println!("warning: {w}");
    }
    if !check.passed() {
        for f in &check.failures {
            println!("fail: {f}");
        }
        return Ok(());
    }

    let options = ReportOptions { truncate: vec![2], ..ReportOptions::default() };
    print!("{}", run(presentation, &options)?.to_text());
    Ok(())
}
