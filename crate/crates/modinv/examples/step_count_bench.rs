//! Division-step comparison: classical extended Euclid (remainders run
//! to zero) against the trace sum under each sign strategy, on random
//! extended-inverse tasks. Descriptive output only.
//!
//! ```bash
//! cargo run --example step_count_bench [csv-path]
//! ```

use modinv::oracle::{compare_steps, Algorithm};

fn main() {
    let report = compare_steps(1000, 2000, 42).unwrap();

    println!("{} sampled tasks, p <= 1000\n", report.rows.len());
    println!("{:<18} {:>8}  histogram (steps: tasks)", "algorithm", "mean");
    for (name, algorithm) in [
        ("extended euclid", Algorithm::ExtendedEuclid),
        ("trace all-plus", Algorithm::DayanAllPlus),
        ("trace all-minus", Algorithm::DayanAllMinus),
        ("trace least-abs", Algorithm::DayanLeastAbs),
    ] {
        let hist = report.histogram(algorithm);
        let peak: Vec<String> = hist
            .iter()
            .filter(|(_, count)| **count >= report.rows.len() as u64 / 50)
            .map(|(steps, count)| format!("{steps}:{count}"))
            .collect();
        println!(
            "{:<18} {:>8.3}  {}",
            name,
            report.mean(algorithm),
            peak.join(" ")
        );
    }

    if let Some(path) = std::env::args().nth(1) {
        let file = std::fs::File::create(&path).expect("create csv");
        report.write_csv(file).expect("write csv");
        println!("\nwrote {path}");
    }
}
