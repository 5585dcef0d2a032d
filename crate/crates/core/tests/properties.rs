use std::collections::BTreeSet;

use proptest::prelude::*;

use spherefib::abelian::{hom_from_images, orbits, AbelianGroup, Endo, GroupElement};
use spherefib::action::{equivalence_params, induced_endo, negation_endo};
use spherefib::classify::{attaching_set, brute_force_classify, classify, closed_form, Invariants};
use spherefib::kgroups::{build_k, image_subgroup};
use spherefib::numtheory::{sqrt_solutions, units};

fn group_and_elements() -> impl Strategy<Value = (Vec<u64>, Vec<i64>, Vec<i64>, Vec<i64>)> {
    prop::collection::vec(1u64..24, 1..4).prop_flat_map(|orders| {
        let len = orders.len();
        let coeffs = || prop::collection::vec(-50i64..50, len);
        (Just(orders), coeffs(), coeffs(), coeffs())
    })
}

proptest! {
    #[test]
    fn group_axioms((orders, a, b, c) in group_and_elements()) {
        let g = AbelianGroup::new(orders).unwrap();
        let (x, y, z) = (g.element(&a).unwrap(), g.element(&b).unwrap(), g.element(&c).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.add(&g.zero()).unwrap(), x.clone());
        prop_assert!(x.add(&x.neg()).unwrap().is_zero());
        prop_assert!(x.scale(x.order() as i64).is_zero());
        prop_assert_eq!(x.scale(3), x.add(&x).unwrap().add(&x).unwrap());
    }

    #[test]
    fn invariant_factors_divide_in_chain(orders in prop::collection::vec(1u64..40, 1..5)) {
        let g = AbelianGroup::new(orders).unwrap();
        let inv = g.invariant_factors();
        prop_assert_eq!(inv.iter().product::<u64>(), g.order());
        for w in inv.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn induced_maps_are_additive(k in 2u32..=6, n in 2u64..60, seed in any::<u64>()) {
        let kg = build_k(k, n).unwrap();
        let params = equivalence_params(k, n).unwrap();
        let g = params[(seed % params.len() as u64) as usize];
        let phi = induced_endo(&kg, g).unwrap();
        let elems: Vec<GroupElement> = kg.group().elements().take(64).collect();
        let x = &elems[(seed >> 8) as usize % elems.len()];
        let y = &elems[(seed >> 24) as usize % elems.len()];
        prop_assert_eq!(
            phi.apply(&x.add(y).unwrap()).unwrap(),
            phi.apply(x).unwrap().add(&phi.apply(y).unwrap()).unwrap()
        );
    }

    #[test]
    fn sqrt_matches_full_scan(a in -200i64..200, m in 1u64..600) {
        let scan: Vec<u64> = (0..m)
            .filter(|&x| (x * x) as i64 % m as i64 == a.rem_euclid(m as i64))
            .collect();
        prop_assert_eq!(sqrt_solutions(a, m), scan);
    }

    #[test]
    fn unit_orbits_match_union_find(m in 2u64..80, picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let g = AbelianGroup::new(vec![m]).unwrap();
        let us = units(m);
        let mults: Vec<u64> = picks.iter().map(|i| us[i.index(us.len())]).collect();
        let mut gens: Vec<Endo> = mults
            .iter()
            .map(|&u| hom_from_images(&g, vec![g.generator(0).scale(u as i64)]).unwrap())
            .collect();
        gens.push(Endo::negation(&g));
        let p = orbits(g.elements(), &gens).unwrap();

        let mut parent: Vec<usize> = (0..m as usize).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in 0..m {
            for &u in mults.iter().chain(std::iter::once(&(m - 1))) {
                let (a, b) = (find(&mut parent, x as usize), find(&mut parent, (x * u % m) as usize));
                parent[a.max(b)] = a.min(b);
            }
        }
        let roots: BTreeSet<usize> = (0..m as usize).map(|x| find(&mut parent, x)).collect();
        prop_assert_eq!(p.len(), roots.len());
        for x in 0..m {
            for y in 0..m {
                let same_p = p.orbit_of(&g.element(&[x as i64]).unwrap()) == p.orbit_of(&g.element(&[y as i64]).unwrap());
                let same_uf = find(&mut parent, x as usize) == find(&mut parent, y as usize);
                prop_assert_eq!(same_p, same_uf);
            }
        }
    }
}

#[test]
fn closed_form_depends_only_on_invariants() {
    use std::collections::BTreeMap;
    for k in 2..=6u32 {
        let mut seen: BTreeMap<(u32, bool, u64, u64, u64, u64), u64> = BTreeMap::new();
        for n in 2..=3000u64 {
            let v = Invariants::of(n);
            let key = (v.r.min(4), v.star, v.rho3, v.rho5, v.rho7, v.rho9);
            let g = closed_form(k, n).unwrap().g;
            assert!(g >= 1);
            assert_eq!(*seen.entry(key).or_insert(g), g, "k={k} n={n}");
        }
    }
}

#[test]
fn attaching_set_is_stable() {
    for k in 2..=6u32 {
        for n in 2..=40u64 {
            let kg = build_k(k, n).unwrap();
            let t = attaching_set(&kg);
            let mut maps: Vec<Endo> = equivalence_params(k, n)
                .unwrap()
                .into_iter()
                .map(|g| induced_endo(&kg, g).unwrap())
                .collect();
            maps.push(negation_endo(&kg));
            for phi in &maps {
                let image: BTreeSet<_> = t.iter().map(|x| phi.apply(x).unwrap()).collect();
                assert_eq!(image, t, "K({k},{n})");
            }
        }
    }
}

#[test]
fn image_subgroup_contains_named_and_is_closed() {
    for k in 2..=6u32 {
        for n in [2u64, 3, 4, 6, 8, 9, 12, 16, 21, 24, 30] {
            let kg = build_k(k, n).unwrap();
            let image = image_subgroup(&kg);
            for (_, x) in kg.named() {
                assert!(image.contains(x));
            }
            for a in &image {
                for b in &image {
                    assert!(image.contains(&a.add(b).unwrap()));
                }
            }
        }
    }
}

#[test]
fn representatives_are_a_transversal() {
    for k in 2..=6u32 {
        for n in [2u64, 3, 4, 5, 8, 9, 10, 12, 15, 16, 18, 20, 21, 24] {
            let r = classify(k, n).unwrap();
            let t = attaching_set(&build_k(k, n).unwrap());
            let covered: usize = r.partition.orbits.iter().map(|o| o.members.len()).sum();
            assert_eq!(covered, t.len());
            let hit: BTreeSet<_> = r
                .representatives
                .iter()
                .map(|rep| r.partition.orbit_of(&rep.element).unwrap())
                .collect();
            assert_eq!(hit.len() as u64, r.brute_force_g, "K({k},{n})");
        }
    }
}

#[test]
fn brute_force_is_order_independent() {
    for (k, n) in [(2u32, 24u64), (4, 20), (5, 6), (6, 14)] {
        let kg = build_k(k, n).unwrap();
        let mut maps: Vec<Endo> = equivalence_params(k, n)
            .unwrap()
            .into_iter()
            .map(|g| induced_endo(&kg, g).unwrap())
            .collect();
        maps.push(negation_endo(&kg));
        let forward = orbits(attaching_set(&kg), &maps).unwrap();
        maps.reverse();
        let reversed = orbits(attaching_set(&kg).into_iter().rev(), &maps).unwrap();
        assert_eq!(forward.orbits, reversed.orbits);
        assert_eq!(forward.len() as u64, brute_force_classify(k, n).unwrap().count());
    }
}
