//! Seeded randomized property runs, as used by `kdecomp verify`.
//!
//! Usage: cargo run --example property_runs -- [seed] [count]

use kdecomp::verify::{self, Property};

fn main() -> kdecomp::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let mut failed = false;
    for property in Property::ALL {
        let report = verify::run(property, seed, count)?;
        println!(
            "{:<10} checked {:>4} of {:>5} drawn  {}",
            report.property,
            report.checked,
            report.drawn,
            if report.passed() { "ok" } else { "FAILED" }
        );
        if let Some(c) = report.counterexample {
            println!("  {c}");
            failed = true;
        }
    }
    if failed {
        std::process::exit(1);
    }
    Ok(())
}
