//! The kernel groups `K_k^n` of the pinch map on `pi_{4k-2}` of the mod `n`
//! Moore space `P^{2k}(n)`, as explicit cyclic decompositions with the
//! images `i∘ξ` of the sphere generators solved into coordinates.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};

/// Supported range of `k`.
pub const K_RANGE: std::ops::RangeInclusive<u32> = 2..=6;

pub fn check_k(k: u32) -> Result<()> {
    if K_RANGE.contains(&k) {
        Ok(())
    } else {
        Err(Error::KOutOfRange(k))
    }
}

pub fn check_kn(k: u32, n: u64) -> Result<()> {
    check_k(k)?;
    if n < 2 {
        return Err(Error::NOutOfRange(n));
    }
    Ok(())
}

/// How generator names are spelled in rendered output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Notation {
    #[default]
    Ascii,
    Unicode,
}

/// Generators of `pi_{4k-2}(S^{2k-1})`, `2 <= k <= 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SphereGenerator {
    NuPrime,
    Alpha1S3,
    Nu5Eta8Sq,
    SigmaPrime,
    Alpha2S7,
    Alpha1S7,
    Nu9Cubed,
    Mu9,
    Eta9Eps10,
    Sigma9Eta16Sq,
    Zeta11,
    AlphaBar3S11,
    Alpha1S11,
}

impl SphereGenerator {
    pub fn ascii(self) -> &'static str {
        use SphereGenerator::*;
        match self {
            NuPrime => "nu'",
            Alpha1S3 => "alpha1_3",
            Nu5Eta8Sq => "nu5eta8^2",
            SigmaPrime => "sigma'",
            Alpha2S7 => "alpha2_7",
            Alpha1S7 => "alpha1_7",
            Nu9Cubed => "nu9^3",
            Mu9 => "mu9",
            Eta9Eps10 => "eta9eps10",
            Sigma9Eta16Sq => "sigma9eta16^2",
            Zeta11 => "zeta_11",
            AlphaBar3S11 => "alphabar3_11",
            Alpha1S11 => "alpha1_11",
        }
    }

    pub fn unicode(self) -> &'static str {
        use SphereGenerator::*;
        match self {
            NuPrime => "ν′",
            Alpha1S3 => "α₁³",
            Nu5Eta8Sq => "ν₅η₈²",
            SigmaPrime => "σ′",
            Alpha2S7 => "α₂⁷",
            Alpha1S7 => "α₁⁷",
            Nu9Cubed => "ν₉³",
            Mu9 => "μ₉",
            Eta9Eps10 => "η₉ε₁₀",
            Sigma9Eta16Sq => "σ₉η₁₆²",
            Zeta11 => "ζ₁₁",
            AlphaBar3S11 => "ᾱ₃¹¹",
            Alpha1S11 => "α₁¹¹",
        }
    }

    pub fn name(self, notation: Notation) -> &'static str {
        match notation {
            Notation::Ascii => self.ascii(),
            Notation::Unicode => self.unicode(),
        }
    }
}

impl fmt::Display for SphereGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereGenTable {
    pub k: u32,
    /// `(generator, order)` in the conventional listing order.
    pub entries: Vec<(SphereGenerator, u64)>,
}

impl SphereGenTable {
    pub fn group_order(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).product()
    }
}

/// Cyclic decomposition of `pi_{4k-2}(S^{2k-1})`.
pub fn sphere_table(k: u32) -> Result<SphereGenTable> {
    use SphereGenerator::*;
    let entries = match k {
        2 => vec![(NuPrime, 4), (Alpha1S3, 3)],
        3 => vec![(Nu5Eta8Sq, 2)],
        4 => vec![(SigmaPrime, 8), (Alpha2S7, 3), (Alpha1S7, 5)],
        5 => vec![(Nu9Cubed, 2), (Mu9, 2), (Eta9Eps10, 2), (Sigma9Eta16Sq, 2)],
        6 => vec![(Zeta11, 8), (AlphaBar3S11, 9), (Alpha1S11, 7)],
        _ => return Err(Error::KOutOfRange(k)),
    };
    Ok(SphereGenTable { k, entries })
}

/// What a basis generator of the stored decomposition is, in terms of
/// `theta` and the named elements: `theta_multiple * theta + i∘named`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisSlot {
    pub theta_multiple: u64,
    pub named: Option<SphereGenerator>,
}

impl BasisSlot {
    const ZERO: Self = Self {
        theta_multiple: 0,
        named: None,
    };
    const THETA: Self = Self {
        theta_multiple: 1,
        named: None,
    };

    fn named(g: SphereGenerator) -> Self {
        Self {
            theta_multiple: 0,
            named: Some(g),
        }
    }

    fn twisted(theta_multiple: u64, g: SphereGenerator) -> Self {
        Self {
            theta_multiple,
            named: Some(g),
        }
    }
}

/// `K_k^n` together with `theta` and the named elements `i∘ξ`.
#[derive(Clone, Debug)]
pub struct KGroup {
    k: u32,
    n: u64,
    group: AbelianGroup,
    theta: GroupElement,
    theta_order: u64,
    named: Vec<(SphereGenerator, GroupElement)>,
    basis: Vec<BasisSlot>,
}

impl KGroup {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn theta(&self) -> &GroupElement {
        &self.theta
    }

    pub fn theta_order(&self) -> u64 {
        self.theta_order
    }

    /// Named elements in sphere-table order.
    pub fn named(&self) -> &[(SphereGenerator, GroupElement)] {
        &self.named
    }

    pub fn named_element(&self, g: SphereGenerator) -> Option<&GroupElement> {
        self.named.iter().find(|(h, _)| *h == g).map(|(_, x)| x)
    }

    pub fn basis(&self) -> &[BasisSlot] {
        &self.basis
    }

    /// Order of the cyclic quotient `K / image`: `n` for `k = 2, 4` or odd
    /// `n`, otherwise `2n`.
    pub fn quotient_order(&self) -> u64 {
        if matches!(self.k, 2 | 4) || self.n % 2 == 1 {
            self.n
        } else {
            2 * self.n
        }
    }

    /// The element a basis slot stands for, rebuilt from theta and the
    /// named elements.
    pub fn slot_value(&self, slot: &BasisSlot) -> GroupElement {
        let mut x = self.theta.scale(slot.theta_multiple as i64);
        if let Some(g) = slot.named {
            x = x.add_unchecked(self.named_element(g).expect("slot names a table generator"));
        }
        x
    }

    /// The relations the decomposition is required to satisfy, as
    /// `(description, lhs, rhs)`.
    pub fn relations(&self) -> Vec<(String, GroupElement, GroupElement)> {
        use SphereGenerator::*;
        let n = self.n;
        let r = n.trailing_zeros();
        let theta = |c: u64| self.theta.scale(c as i64);
        let named = |g| self.named_element(g).expect("table generator").clone();
        let mut out = Vec::new();
        match (self.k, r) {
            (2, 1) => out.push((format!("i∘ν′ = {n}θ"), named(NuPrime), theta(n))),
            (4, 1) => out.push((format!("i∘σ′ = {n}θ"), named(SigmaPrime), theta(n))),
            (3, 1) => out.push((format!("i∘ν₅η₈² = {}θ", 2 * n), named(Nu5Eta8Sq), theta(2 * n))),
            (5, 1) => {
                let lhs = named(Nu9Cubed)
                    .add_unchecked(&named(Eta9Eps10))
                    .add_unchecked(&named(Sigma9Eta16Sq));
                out.push((format!("i∘ν₉³ + i∘η₉ε₁₀ + i∘σ₉η₁₆² = {}θ", 2 * n), lhs, theta(2 * n)));
            }
            _ => {}
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

// (orders, theta order, basis recipe, named coordinates)
type Layout = (Vec<u64>, u64, Vec<BasisSlot>, Vec<(SphereGenerator, Vec<i64>)>);

/// Builds `K_k^n` in its printed decomposition.
///
/// Coordinates per `k`, trivial slots kept:
/// * `k = 2`: `[ν′ slot, α₁³, θ]`
/// * `k = 3`: `[ν₅η₈², θ]`
/// * `k = 4`: `[σ′ slot, α₂⁷, α₁⁷, θ]`
/// * `k = 5`: `[ν₉³, μ₉, η₉ε₁₀, σ₉η₁₆², θ]`
/// * `k = 6`: `[ζ₁₁, ᾱ₃¹¹, α₁¹¹, θ]`
pub fn build_k(k: u32, n: u64) -> Result<KGroup> {
    use SphereGenerator::*;
    check_kn(k, n)?;
    let r = n.trailing_zeros();
    let odd = r == 0;

    let (orders, theta_order, basis, named): Layout =
        match k {
            2 => {
                let c3 = gcd(3, n);
                if odd || r >= 3 {
                    (
                        vec![gcd(4, n), c3, n],
                        n,
                        vec![BasisSlot::named(NuPrime), BasisSlot::named(Alpha1S3), BasisSlot::THETA],
                        vec![(NuPrime, vec![1, 0, 0]), (Alpha1S3, vec![0, 1, 0])],
                    )
                } else if r == 1 {
                    (
                        vec![1, c3, 2 * n],
                        2 * n,
                        vec![BasisSlot::ZERO, BasisSlot::named(Alpha1S3), BasisSlot::THETA],
                        vec![(NuPrime, vec![0, 0, n as i64]), (Alpha1S3, vec![0, 1, 0])],
                    )
                } else {
                    (
                        vec![2, c3, 2 * n],
                        2 * n,
                        vec![BasisSlot::twisted(n / 2, NuPrime), BasisSlot::named(Alpha1S3), BasisSlot::THETA],
                        vec![(NuPrime, vec![1, 0, -((n / 2) as i64)]), (Alpha1S3, vec![0, 1, 0])],
                    )
                }
            }
            4 => {
                let (c3, c5) = (gcd(3, n), gcd(5, n));
                let tail = [BasisSlot::named(Alpha2S7), BasisSlot::named(Alpha1S7), BasisSlot::THETA];
                let odd_named = |sigma: Vec<i64>| {
                    vec![(SigmaPrime, sigma), (Alpha2S7, vec![0, 1, 0, 0]), (Alpha1S7, vec![0, 0, 1, 0])]
                };
                match r {
                    0 | 4.. => (
                        vec![gcd(8, n), c3, c5, n],
                        n,
                        [&[BasisSlot::named(SigmaPrime)][..], &tail].concat(),
                        odd_named(vec![1, 0, 0, 0]),
                    ),
                    1 => (
                        vec![1, c3, c5, 2 * n],
                        2 * n,
                        [&[BasisSlot::ZERO][..], &tail].concat(),
                        odd_named(vec![0, 0, 0, n as i64]),
                    ),
                    2 => (
                        vec![2, c3, c5, 2 * n],
                        2 * n,
                        [&[BasisSlot::twisted(n / 2, SigmaPrime)][..], &tail].concat(),
                        odd_named(vec![1, 0, 0, -((n / 2) as i64)]),
                    ),
                    _ => (
                        vec![4, c3, c5, 2 * n],
                        2 * n,
                        [&[BasisSlot::twisted(n / 4, SigmaPrime)][..], &tail].concat(),
                        odd_named(vec![1, 0, 0, -((n / 4) as i64)]),
                    ),
                }
            }
            3 => match r {
                0 => (vec![1, n], n, vec![BasisSlot::ZERO, BasisSlot::THETA], vec![(Nu5Eta8Sq, vec![0, 0])]),
                1 => (
                    vec![1, 4 * n],
                    4 * n,
                    vec![BasisSlot::ZERO, BasisSlot::THETA],
                    vec![(Nu5Eta8Sq, vec![0, 2 * n as i64])],
                ),
                _ => (
                    vec![2, 2 * n],
                    2 * n,
                    vec![BasisSlot::named(Nu5Eta8Sq), BasisSlot::THETA],
                    vec![(Nu5Eta8Sq, vec![1, 0])],
                ),
            },
            5 => {
                let s0 = [BasisSlot::named(Nu9Cubed), BasisSlot::named(Mu9), BasisSlot::named(Eta9Eps10)];
                let unit = |i: usize| {
                    let mut v = vec![0; 5];
                    v[i] = 1;
                    v
                };
                match r {
                    0 => (
                        vec![1, 1, 1, 1, n],
                        n,
                        vec![BasisSlot::ZERO; 4].into_iter().chain([BasisSlot::THETA]).collect(),
                        [Nu9Cubed, Mu9, Eta9Eps10, Sigma9Eta16Sq].map(|g| (g, vec![0; 5])).to_vec(),
                    ),
                    1 => (
                        vec![2, 2, 2, 1, 4 * n],
                        4 * n,
                        [&s0[..], &[BasisSlot::ZERO, BasisSlot::THETA]].concat(),
                        // σ₉η₁₆² = 2nθ - ν₉³ - η₉ε₁₀
                        vec![
                            (Nu9Cubed, unit(0)),
                            (Mu9, unit(1)),
                            (Eta9Eps10, unit(2)),
                            (Sigma9Eta16Sq, vec![-1, 0, -1, 0, 2 * n as i64]),
                        ],
                    ),
                    _ => (
                        vec![2, 2, 2, 2, 2 * n],
                        2 * n,
                        [&s0[..], &[BasisSlot::named(Sigma9Eta16Sq), BasisSlot::THETA]].concat(),
                        vec![
                            (Nu9Cubed, unit(0)),
                            (Mu9, unit(1)),
                            (Eta9Eps10, unit(2)),
                            (Sigma9Eta16Sq, unit(3)),
                        ],
                    ),
                }
            }
            6 => {
                let (c9, c7) = (gcd(9, n), gcd(7, n));
                let named = vec![
                    (Zeta11, vec![1, 0, 0, 0]),
                    (AlphaBar3S11, vec![0, 1, 0, 0]),
                    (Alpha1S11, vec![0, 0, 1, 0]),
                ];
                let tail = [BasisSlot::named(AlphaBar3S11), BasisSlot::named(Alpha1S11), BasisSlot::THETA];
                if odd {
                    (
                        vec![1, c9, c7, n],
                        n,
                        [&[BasisSlot::ZERO][..], &tail].concat(),
                        named,
                    )
                } else {
                    (
                        vec![gcd(8, n), c9, c7, 2 * n],
                        2 * n,
                        [&[BasisSlot::named(Zeta11)][..], &tail].concat(),
                        named,
                    )
                }
            }
            _ => unreachable!("k checked"),
        };

    let group = AbelianGroup::new(orders)?;
    let theta = group.generator(group.rank() - 1);
    let named = named
        .into_iter()
        .map(|(g, c)| Ok((g, group.element(&c)?)))
        .collect::<Result<Vec<_>>>()?;
    let kg = KGroup {
        k,
        n,
        group,
        theta,
        theta_order,
        named,
        basis,
    };
    verify(&kg)?;
    Ok(kg)
}

fn verify(kg: &KGroup) -> Result<()> {
    let fail = |relation: String| Error::Relation {
        k: kg.k,
        n: kg.n,
        relation,
    };
    if kg.theta.order() != kg.theta_order {
        return Err(fail(format!("ord θ = {}", kg.theta_order)));
    }
    for (j, slot) in kg.basis.iter().enumerate() {
        if kg.slot_value(slot) != kg.group.generator(j) {
            return Err(fail(format!("basis slot {j} = {slot:?}")));
        }
    }
    let table = sphere_table(kg.k)?;
    let names: Vec<_> = kg.named.iter().map(|(g, _)| *g).collect();
    let expected: Vec<_> = table.entries.iter().map(|(g, _)| *g).collect();
    if names != expected {
        return Err(fail("named generators follow the sphere table".into()));
    }
    for ((g, x), (_, m)) in kg.named.iter().zip(&table.entries) {
        if m % x.order() != 0 {
            return Err(fail(format!("ord i∘{g} divides {m}")));
        }
    }
    for (desc, lhs, rhs) in kg.relations() {
        if lhs != rhs {
            return Err(fail(desc));
        }
    }
    let image = image_subgroup(kg).len() as u64;
    if image * kg.quotient_order() != kg.group.order() {
        return Err(fail(format!(
            "|K| = |image| * {} ({} != {} * {})",
            kg.quotient_order(),
            kg.group.order(),
            image,
            kg.quotient_order()
        )));
    }
    Ok(())
}

/// Subgroup generated by the named elements (the image of `i_{2k-1*}`).
pub fn image_subgroup(kg: &KGroup) -> BTreeSet<GroupElement> {
    span(kg.named.iter().map(|(_, x)| x))
}

/// Subgroup generated by the given elements of a common group.
pub fn span<'a, I>(gens: I) -> BTreeSet<GroupElement>
where
    I: IntoIterator<Item = &'a GroupElement>,
{
    let mut gens = gens.into_iter().peekable();
    let Some(first) = gens.peek() else {
        return BTreeSet::new();
    };
    let mut out = BTreeSet::from([first.group().zero()]);
    for g in gens {
        let mut layer: Vec<GroupElement> = out.iter().cloned().collect();
        loop {
            let next: Vec<GroupElement> = layer
                .iter()
                .map(|x| x.add_unchecked(g))
                .filter(|y| !out.contains(y))
                .collect();
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
    }
    out
}
