//! Orbit counts for k = 3, 5 under the parity correction term and under
//! the constant zero. Only twice-odd n tells them apart.

use spherefib::action::EpsilonRule;
use spherefib::classify::{brute_force_classify_with, closed_form_g};

fn main() -> spherefib::Result<()> {
    println!(" k   n   G  parity  zero");
    for k in [3u32, 5] {
        for n in [2u64, 4, 6, 8, 10, 12, 14, 16] {
            let parity = brute_force_classify_with(k, n, EpsilonRule::Parity)?.count();
            let zero = brute_force_classify_with(k, n, EpsilonRule::Zero)?.count();
            println!("{k:>2} {n:>3} {:>3} {parity:>7} {zero:>5}", closed_form_g(k, n)?);
        }
    }
    Ok(())
}
