//! Factorizations, square roots modulo n and the star condition.

use spherefib::numtheory::{count_sqrt1, factorize, satisfies_star, solution_vectors, solvable_shifted, sqrt_solutions};

fn main() -> spherefib::Result<()> {
    for n in [24u64, 65, 360] {
        let f = factorize(n)?;
        println!("{n} = 2^{} * {:?}", f.r(), f.odd_factors());
    }

    println!("x^2 = 1 mod 8:  {:?}", sqrt_solutions(1, 8));
    println!("x^2 = -1 mod 5: {:?}", sqrt_solutions(-1, 5));
    println!("x^2 = 1 mod 15: {:?} (expected {})", sqrt_solutions(1, 15), count_sqrt1(15)?);

    for n in [2u64, 10, 12, 21, 26, 65] {
        println!("{n:>3} star: {}", satisfies_star(n));
    }
    for n in [2u64, 4, 8, 24] {
        println!("x^2 = 1+{n} mod {} solvable: {}", 2 * n, solvable_shifted(n)?);
    }

    println!("sign vectors of 40 mod (4, 5): {:?}", solution_vectors(40, 2)?);
    Ok(())
}
