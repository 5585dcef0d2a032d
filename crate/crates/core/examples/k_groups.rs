//! Builds `K_k^n` and prints its cyclic decomposition, theta and the named
//! generators `i∘ξ` in coordinates.

use spherefib::kgroups::{build_k, image_subgroup, sphere_table, Notation};

fn main() -> spherefib::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases: Vec<(u32, u64)> = match args.as_slice() {
        [k, n] => vec![(*k as u32, *n)],
        _ => vec![(2, 12), (3, 2), (4, 24), (5, 6), (6, 3)],
    };
    for (k, n) in cases {
        let table = sphere_table(k)?;
        let kg = build_k(k, n)?;
        println!("K({k},{n}): orders {:?}, |K| = {}", kg.group().orders(), kg.group().order());
        println!("  sphere group order {}", table.group_order());
        println!("  theta = {} of order {}", kg.theta(), kg.theta_order());
        for (g, x) in kg.named() {
            println!("  i∘{:<14} = {x}  (order {})", g.name(Notation::Unicode), x.order());
        }
        println!("  image subgroup has {} elements", image_subgroup(&kg).len());
        for (rel, lhs, rhs) in kg.relations() {
            println!("  {rel}: {}", if lhs == rhs { "holds" } else { "FAILS" });
        }
    }
    Ok(())
}
