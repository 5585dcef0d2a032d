//! Finite abelian groups as sums of cyclic groups, homomorphisms given by
//! generator images, and orbits under a set of automorphisms.

use spherefib::abelian::{hom_from_images, orbits, AbelianGroup, Endo};

fn main() -> spherefib::Result<()> {
    let g = AbelianGroup::new(vec![12, 1, 18])?;
    println!("Z12 + Z1 + Z18: order {}", g.order());
    println!("  primary factors   {:?}", g.primary_factors());
    println!("  invariant factors {:?}", g.invariant_factors());

    let x = g.element(&[5, 0, 7])?;
    let y = g.element(&[9, 0, 14])?;
    println!("{x} + {y} = {}, order of x = {}", x.add(&y)?, x.order());

    // x -> 5x on Z8
    let z8 = AbelianGroup::new(vec![8])?;
    let times5 = hom_from_images(&z8, vec![z8.generator(0).scale(5)])?;
    let odd = [1, 3, 5, 7].map(|c| z8.generator(0).scale(c));
    print!("{}", orbits(odd.clone(), &[times5])?);
    println!("with negation as well:");
    print!("{}", orbits(odd, &[Endo::negation(&z8), hom_from_images(&z8, vec![z8.generator(0).scale(5)])?])?);

    // on Z2 + Z4, sending the order-2 generator to one of order 4 is not well defined
    let h = AbelianGroup::new(vec![2, 4])?;
    println!("{}", hom_from_images(&h, vec![h.generator(1), h.generator(1)]).unwrap_err());
    Ok(())
}
