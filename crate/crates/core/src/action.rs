//! Self-homotopy equivalences of the Moore space and the automorphisms of
//! `K_k^n` they induce.
//!
//! A self-equivalence is `t·ι + ε·iηp`:
//! * odd `n`: `t` a unit mod `n`, `ε = 0`;
//! * `2 || n`: `t` a unit mod `2n`, `ε = 0` (since `iηp = n·ι`);
//! * `4 | n`: `t` a unit mod `n`, `ε ∈ {0, 1}`.

use crate::abelian::{hom_from_images, Endo, GroupElement};
use crate::error::{Error, Result};
use crate::kgroups::{check_kn, KGroup, SphereGenerator};
use crate::numtheory::units;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfEquivalence {
    pub t: u64,
    pub eps: u8,
}

impl SelfEquivalence {
    pub fn new(t: u64, eps: u8) -> Self {
        Self { t, eps }
    }
}

/// Modulus the unit `t` lives in for a given `n`.
pub fn unit_modulus(n: u64) -> u64 {
    if n.trailing_zeros() == 1 {
        2 * n
    } else {
        n
    }
}

/// Every self-equivalence of `P^{2k}(n)`, ascending in `t` then `eps`.
pub fn equivalence_params(k: u32, n: u64) -> Result<Vec<SelfEquivalence>> {
    check_kn(k, n)?;
    let eps_range: &[u8] = if n % 4 == 0 { &[0, 1] } else { &[0] };
    Ok(units(unit_modulus(n))
        .into_iter()
        .flat_map(|t| eps_range.iter().map(move |&eps| SelfEquivalence { t, eps }))
        .collect())
}

fn check_equivalence(n: u64, g: SelfEquivalence) -> Result<()> {
    let m = unit_modulus(n);
    let valid = g.t < m
        && num_integer::gcd(g.t, m) == 1
        && (g.eps == 0 || (g.eps == 1 && n % 4 == 0));
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidEquivalence {
            t: g.t,
            eps: g.eps,
            n,
        })
    }
}

/// Correction term of the `k = 3, 5` action for even `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EpsilonRule {
    /// `1` iff `t ≡ 3 (mod 4)`, the parity of `t(t-1)/2`.
    #[default]
    Parity,
    /// Constant `0`. Kept only to show that the parity rule is forced.
    Zero,
}

impl EpsilonRule {
    pub fn eval(self, t: u64) -> u8 {
        match self {
            EpsilonRule::Parity => u8::from(t % 4 == 3),
            EpsilonRule::Zero => 0,
        }
    }
}

/// `ε_k(t, n)` for `k = 3, 5`, even `n` and odd `t`.
pub fn epsilon_k(t: i64, n: u64, k: u32) -> Result<u8> {
    if !matches!(k, 3 | 5) {
        return Err(Error::KOutOfRange(k));
    }
    if n % 2 == 1 {
        return Err(Error::OddModulus(n));
    }
    if t.rem_euclid(2) == 0 {
        return Err(Error::EvenUnit(t));
    }
    Ok(EpsilonRule::Parity.eval(t.rem_euclid(4) as u64))
}

/// The automorphism `g_*` of `K_k^n`.
pub fn induced_endo(kg: &KGroup, g: SelfEquivalence) -> Result<Endo> {
    induced_endo_with(kg, g, EpsilonRule::Parity)
}

pub fn induced_endo_with(kg: &KGroup, g: SelfEquivalence, rule: EpsilonRule) -> Result<Endo> {
    use SphereGenerator::*;
    let n = kg.n();
    check_equivalence(n, g)?;
    let t = g.t;
    let t_sq = (t as u128 * t as u128 % kg.theta_order() as u128) as i64;
    let mut theta_image = kg.theta().scale(t_sq);

    let scales_named = matches!(kg.k(), 2 | 4 | 6);
    if !scales_named && n % 2 == 0 {
        let correction = (rule.eval(t) + g.eps) % 2;
        if correction == 1 {
            let xi0: Vec<SphereGenerator> = if kg.k() == 3 {
                vec![Nu5Eta8Sq]
            } else {
                vec![Nu9Cubed, Eta9Eps10, Sigma9Eta16Sq]
            };
            for gen in xi0 {
                theta_image = theta_image.add_unchecked(kg.named_element(gen).expect("table generator"));
            }
        }
    }
    let named_image = |x: &GroupElement| {
        if scales_named {
            x.scale(t as i64)
        } else {
            x.clone()
        }
    };

    let images = kg
        .basis()
        .iter()
        .map(|slot| {
            let mut x = theta_image.scale(slot.theta_multiple as i64);
            if let Some(gen) = slot.named {
                x = x.add_unchecked(&named_image(kg.named_element(gen).expect("table generator")));
            }
            x
        })
        .collect();
    hom_from_images(kg.group(), images)
}

/// `x ↦ -x`, the global sign.
pub fn negation_endo(kg: &KGroup) -> Endo {
    Endo::negation(kg.group())
}
