//! Self-equivalences `(t, eps)` of the Moore space and the automorphisms
//! of `K_k^n` they induce.

use spherefib::action::{equivalence_params, epsilon_k, induced_endo, negation_endo};
use spherefib::kgroups::build_k;

fn main() -> spherefib::Result<()> {
    for (k, n) in [(2u32, 12u64), (3, 2), (5, 4)] {
        let kg = build_k(k, n)?;
        println!("K({k},{n}), theta = {}", kg.theta());
        for g in equivalence_params(k, n)? {
            let phi = induced_endo(&kg, g)?;
            println!("  t = {:>2}, eps = {}: theta -> {}", g.t, g.eps, phi.apply(kg.theta())?);
        }
        println!("  sign:           theta -> {}", negation_endo(&kg).apply(kg.theta())?);
    }

    for t in [1i64, 3, 5, 7, -1] {
        println!("epsilon_3({t}, 2) = {}", epsilon_k(t, 2, 3)?);
    }
    Ok(())
}
