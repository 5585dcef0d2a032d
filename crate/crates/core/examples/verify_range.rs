//! Cross-validates the closed form against brute force over a range,
//! in parallel.
//!
//!     cargo run --release --example verify_range -- 6 2..150

use spherefib::cli::{verify_range, NRange};

fn main() -> spherefib::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(4);
    let range: NRange = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(NRange { lo: 2, hi: 100 });

    let start = std::time::Instant::now();
    let summary = verify_range(k, range, None)?;
    println!("k={k} n={range}: {} pass / {} fail in {:.2?}", summary.pass, summary.fail, start.elapsed());
    for f in &summary.failures {
        println!("n={}: closed form {}, brute force {}\n{}", f.n, f.closed_form_g, f.brute_force_g, f.partition);
    }
    Ok(())
}
