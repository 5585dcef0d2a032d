//! Finite abelian groups given as direct sums of cyclic groups.
//!
//! Groups are always stored in the decomposition they were built with;
//! summands of order 1 are kept so that every group for a given `k` has the
//! same number of coordinates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, reduce};

/// `Z_{m_1} + ... + Z_{m_s}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Arc<[u64]>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::TrivialOrder);
        }
        Ok(Self {
            orders: orders.into(),
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic summands, trivial ones included.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coeffs: vec![0; self.rank()],
        }
    }

    /// The element with the given (signed, unreduced) coordinates.
    pub fn element(&self, coeffs: &[i64]) -> Result<GroupElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::Length {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        Ok(GroupElement {
            group: self.clone(),
            coeffs: coeffs
                .iter()
                .zip(self.orders.iter())
                .map(|(&c, &m)| reduce(c, m))
                .collect(),
        })
    }

    /// The `i`-th basis generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coeffs = vec![0; self.rank()];
        coeffs[i] = 1 % self.orders[i];
        GroupElement {
            group: self.clone(),
            coeffs,
        }
    }

    /// Every element, in lexicographic coefficient order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let total = self.order();
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0; self.rank()];
            for (c, &m) in coeffs.iter_mut().zip(self.orders.iter()).rev() {
                *c = idx % m;
                idx /= m;
            }
            GroupElement {
                group: self.clone(),
                coeffs,
            }
        })
    }

    /// Elementary divisors: the prime powers of the primary decomposition,
    /// sorted ascending.
    pub fn primary_factors(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .orders
            .iter()
            .filter(|&&m| m > 1)
            .flat_map(|&m| factorize(m).expect("m >= 1").prime_powers())
            .collect();
        out.sort_unstable();
        out
    }

    /// Invariant factors `d_1 | d_2 | ... | d_t`, all greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for q in self.primary_factors() {
            by_prime.entry(smallest_prime(q)).or_default().push(q);
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, q) in out.iter_mut().rev().zip(powers.iter()) {
                *slot *= q;
            }
        }
        out
    }
}

fn smallest_prime(q: u64) -> u64 {
    (2..=q).find(|d| q % d == 0).unwrap_or(q)
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{:?}", &*self.orders)
    }
}

/// A residue vector of an [`AbelianGroup`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: AbelianGroup,
    coeffs: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .zip(self.group.orders.iter())
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Self {
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// `c * x`; `c` is reduced modulo each cyclic order.
    pub fn scale(&self, c: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(self.group.orders.iter())
            .map(|(&a, &m)| (reduce(c, m) as u128 * a as u128 % m as u128) as u64)
            .collect();
        Self {
            group: self.group.clone(),
            coeffs,
        }
    }

    /// Least `d >= 1` with `d * x = 0`.
    pub fn order(&self) -> u64 {
        self.coeffs
            .iter()
            .zip(self.group.orders.iter())
            .map(|(&a, &m)| m / a.gcd(&m))
            .fold(1, |acc, d| acc.lcm(&d))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on coefficient vectors.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .cmp(&other.coeffs)
            .then_with(|| self.group.orders.cmp(&other.group.orders))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Endomorphism determined by the images of the basis generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endo {
    group: AbelianGroup,
    images: Vec<GroupElement>,
}

/// Builds the homomorphism sending generator `i` to `images[i]`, checking
/// that each image is killed by the order of its generator.
pub fn hom_from_images(group: &AbelianGroup, images: Vec<GroupElement>) -> Result<Endo> {
    if images.len() != group.rank() {
        return Err(Error::Length {
            expected: group.rank(),
            got: images.len(),
        });
    }
    for (index, (img, &order)) in images.iter().zip(group.orders()).enumerate() {
        if img.group != *group {
            return Err(Error::GroupMismatch);
        }
        if !img.scale(order as i64).is_zero() {
            return Err(Error::NotWellDefined { index, order });
        }
    }
    Ok(Endo {
        group: group.clone(),
        images,
    })
}

impl Endo {
    pub fn identity(group: &AbelianGroup) -> Self {
        let images = (0..group.rank()).map(|i| group.generator(i)).collect();
        Self {
            group: group.clone(),
            images,
        }
    }

    pub fn negation(group: &AbelianGroup) -> Self {
        let images = (0..group.rank()).map(|i| group.generator(i).neg()).collect();
        Self {
            group: group.clone(),
            images,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.group != self.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &GroupElement) -> GroupElement {
        let orders = self.group.orders();
        let mut acc = vec![0u64; orders.len()];
        for (&c, img) in x.coeffs.iter().zip(&self.images) {
            if c == 0 {
                continue;
            }
            for ((slot, &v), &m) in acc.iter_mut().zip(&img.coeffs).zip(orders) {
                *slot = (*slot + c * v) % m;
            }
        }
        GroupElement {
            group: self.group.clone(),
            coeffs: acc,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Result<Endo> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(Endo {
            group: self.group.clone(),
            images: other.images.iter().map(|x| self.apply_unchecked(x)).collect(),
        })
    }
}

/// One block of a [`Partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member.
    pub representative: GroupElement,
    /// Members in ascending order.
    pub members: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Partition {
    /// Blocks sorted by representative.
    pub orbits: Vec<Orbit>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &GroupElement> {
        self.orbits.iter().map(|o| &o.representative)
    }

    /// Index of the orbit containing `x`.
    pub fn orbit_of(&self, x: &GroupElement) -> Option<usize> {
        self.orbits
            .iter()
            .position(|o| o.members.binary_search(x).is_ok())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, orbit) in self.orbits.iter().enumerate() {
            write!(f, "orbit {i}:")?;
            for m in &orbit.members {
                write!(f, " {m}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Partitions `carrier` into the classes of the equivalence relation
/// generated by `x ~ g(x)` for every generator `g`.
///
/// Each generator must map the carrier into itself.
pub fn orbits<I>(carrier: I, generators: &[Endo]) -> Result<Partition>
where
    I: IntoIterator<Item = GroupElement>,
{
    let sorted: Vec<GroupElement> = carrier.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let Some(first) = sorted.first() else {
        return Ok(Partition::default());
    };
    let group = first.group.clone();
    if sorted.iter().any(|x| x.group != group) || generators.iter().any(|g| g.group != group) {
        return Err(Error::GroupMismatch);
    }
    let index: HashMap<&[u64], usize> = sorted
        .iter()
        .enumerate()
        .map(|(i, x)| (x.coeffs.as_slice(), i))
        .collect();

    const UNSEEN: usize = usize::MAX;
    let mut block_of = vec![UNSEEN; sorted.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..sorted.len() {
        if block_of[start] != UNSEEN {
            continue;
        }
        let mut current = blocks.len();
        blocks.push(vec![start]);
        block_of[start] = current;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let y = g.apply_unchecked(&sorted[i]);
                let &j = index
                    .get(y.coeffs.as_slice())
                    .ok_or(Error::NotClosed { generator: gi })?;
                match block_of[j] {
                    UNSEEN => {
                        block_of[j] = current;
                        blocks[current].push(j);
                        queue.push_back(j);
                    }
                    b if b != current => {
                        // reached an earlier block through a non-injective step
                        let moved = std::mem::take(&mut blocks[current]);
                        for &m in &moved {
                            block_of[m] = b;
                        }
                        blocks[b].extend(moved);
                        current = b;
                    }
                    _ => {}
                }
            }
        }
    }

    let mut out: Vec<Orbit> = blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|mut b| {
            b.sort_unstable();
            let members: Vec<GroupElement> = b.into_iter().map(|i| sorted[i].clone()).collect();
            Orbit {
                representative: members[0].clone(),
                members,
            }
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(Partition { orbits: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(orders: &[u64]) -> AbelianGroup {
        AbelianGroup::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn add_examples() {
        let g = z(&[2, 3]);
        let x = g.element(&[1, 2]).unwrap();
        let y = g.element(&[1, 1]).unwrap();
        assert!(x.add(&y).unwrap().is_zero());
        assert_eq!(x.add(&g.zero()).unwrap(), x);
        let h = z(&[2, 8]);
        let w = h.element(&[1, 5]).unwrap();
        assert_eq!(w.add(&w).unwrap().coeffs(), &[0, 2]);
        assert_eq!(x.add(&w), Err(Error::GroupMismatch));
    }

    #[test]
    fn scale_examples() {
        let h = z(&[2, 8]);
        assert_eq!(h.element(&[1, 3]).unwrap().scale(-1).coeffs(), &[1, 5]);
        assert!(h.element(&[1, 3]).unwrap().scale(0).is_zero());
        let g = z(&[2, 4]);
        assert_eq!(g.element(&[0, 1]).unwrap().scale(7).coeffs(), &[0, 3]);
    }

    #[test]
    fn order_examples() {
        let g = z(&[2, 3]);
        assert_eq!(g.zero().order(), 1);
        assert_eq!(g.element(&[1, 0]).unwrap().order(), 2);
        assert_eq!(z(&[2, 8]).element(&[1, 2]).unwrap().order(), 4);
    }

    #[test]
    fn order_matches_repeated_addition() {
        let g = z(&[4, 6, 1, 9]);
        for x in g.elements() {
            let mut acc = x.clone();
            let mut d = 1;
            while !acc.is_zero() {
                acc = acc.add(&x).unwrap();
                d += 1;
            }
            assert_eq!(x.order(), d, "{x:?}");
        }
    }

    #[test]
    fn element_rejects_wrong_length() {
        assert!(matches!(z(&[2, 3]).element(&[1]), Err(Error::Length { .. })));
        assert_eq!(AbelianGroup::new(vec![2, 0]), Err(Error::TrivialOrder));
    }

    #[test]
    fn hom_examples() {
        let g = z(&[4]);
        let id = hom_from_images(&g, vec![g.generator(0)]).unwrap();
        assert_eq!(id, Endo::identity(&g));
        let zero = hom_from_images(&g, vec![g.zero()]).unwrap();
        assert!(g.elements().all(|x| zero.apply(&x).unwrap().is_zero()));
        let triple = hom_from_images(&g, vec![g.generator(0).scale(3)]).unwrap();
        for x in g.elements() {
            assert_eq!(triple.apply(&x).unwrap(), x.scale(3));
        }
        let mut images: Vec<_> = triple.images().to_vec();
        images.sort();
        assert_eq!(images.len(), 1);
    }

    #[test]
    fn hom_rejects_ill_defined_images() {
        // Z_2 + Z_4: sending the order-2 generator to a generator of Z_4
        let g = z(&[2, 4]);
        let err = hom_from_images(&g, vec![g.generator(1), g.generator(1)]).unwrap_err();
        assert_eq!(err, Error::NotWellDefined { index: 0, order: 2 });
    }

    #[test]
    fn primary_and_invariant_factors() {
        let g = z(&[12, 1, 18]);
        assert_eq!(g.primary_factors(), vec![2, 3, 4, 9]);
        assert_eq!(g.invariant_factors(), vec![6, 36]);
        assert_eq!(z(&[1, 1]).invariant_factors(), Vec::<u64>::new());
    }

    #[test]
    fn orbit_examples() {
        let g = z(&[8]);
        let p = orbits([g.zero()], &[Endo::negation(&g)]).unwrap();
        assert_eq!(p.len(), 1);

        let x = g.generator(0).scale(3);
        let p = orbits([x.clone(), x.neg()], &[Endo::negation(&g)]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.orbits[0].representative, x);

        let times5 = hom_from_images(&g, vec![g.generator(0).scale(5)]).unwrap();
        let carrier: Vec<_> = [1, 3, 5, 7].iter().map(|&c| g.generator(0).scale(c)).collect();
        let p = orbits(carrier, &[Endo::negation(&g), times5]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.orbits[0].members.len(), 4);
    }

    #[test]
    fn orbits_reject_open_carrier() {
        let g = z(&[8]);
        let carrier = vec![g.generator(0)];
        let err = orbits(carrier, &[Endo::negation(&g)]).unwrap_err();
        assert_eq!(err, Error::NotClosed { generator: 0 });
    }

    #[test]
    fn orbits_merge_non_injective_steps() {
        // doubling on Z_4: 1 -> 2 -> 0, 3 -> 2; everything is one class
        let g = z(&[4]);
        let double = hom_from_images(&g, vec![g.generator(0).scale(2)]).unwrap();
        let p = orbits(g.elements(), &[double]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.orbits[0].members.len(), 4);
    }
}
