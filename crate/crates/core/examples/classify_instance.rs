//! Classifies one `(k, n)`: case, closed-form and brute-force counts, and a
//! representative of each orbit.
//!
//!     cargo run --example classify_instance -- 4 24

use spherefib::classify::{cross_validate, representatives_symbolic};
use spherefib::cli::OutputRecord;
use spherefib::Notation;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(12);

    let result = match cross_validate(k, n) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("K({k},{n}): case `{}`, G = {}", result.branch, result.brute_force_g);
    for (rep, text) in result.representatives.iter().zip(representatives_symbolic(&result, Notation::Unicode)) {
        println!("  {:<16} {text}", rep.element.to_string());
    }

    let record = OutputRecord::from_result(&result, Notation::Ascii);
    println!("{}", serde_json::to_string(&record).unwrap());
}
