//! Counting homotopy types: the admissible attaching maps `T_k^n`, their
//! orbits under self-equivalences and sign, and the closed-form count
//! `G_k^n` they are checked against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{orbits, Endo, GroupElement, Partition};
use crate::action::{equivalence_params, induced_endo_with, negation_endo, EpsilonRule};
use crate::error::{Error, Result};
use crate::kgroups::{build_k, check_kn, KGroup, Notation, SphereGenerator};
use crate::numtheory::{inverse_mod, rho, satisfies_star, units};

/// Residues `a` mod `ord θ` with `a ≡ ±τ²` (or `2a ≡ ±τ²` for `k ≠ 2, 4`
/// and odd `n`) modulo `n` for some unit `τ`.
pub fn admissible_coefficients(k: u32, n: u64) -> Result<Vec<u64>> {
    Ok(admissible_for(&build_k(k, n)?))
}

fn admissible_for(kg: &KGroup) -> Vec<u64> {
    let n = kg.n();
    let squares: BTreeSet<u64> = units(n)
        .into_iter()
        .flat_map(|tau| {
            let sq = tau * tau % n;
            [sq, (n - sq) % n]
        })
        .collect();
    let doubled = !matches!(kg.k(), 2 | 4) && n % 2 == 1;
    (0..kg.theta_order())
        .filter(|&a| {
            let lhs = if doubled { 2 * a % n } else { a % n };
            squares.contains(&lhs)
        })
        .collect()
}

/// `T_k^n = { aθ + s : a admissible, s ∈ image }`.
pub fn attaching_set(kg: &KGroup) -> BTreeSet<GroupElement> {
    let image = crate::kgroups::image_subgroup(kg);
    admissible_for(kg)
        .into_iter()
        .flat_map(|a| {
            let base = kg.theta().scale(a as i64);
            image.iter().map(move |s| base.add_unchecked(s)).collect::<Vec<_>>()
        })
        .collect()
}

/// 2-adic valuation, `★`, and the divisibility indicators that the closed
/// form depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub r: u32,
    pub star: bool,
    pub rho3: u64,
    pub rho5: u64,
    pub rho7: u64,
    pub rho9: u64,
}

impl Invariants {
    pub fn of(n: u64) -> Self {
        Self {
            r: n.trailing_zeros(),
            star: satisfies_star(n),
            rho3: rho(3, n),
            rho5: rho(5, n),
            rho7: rho(7, n),
            rho9: rho(9, n),
        }
    }

    fn odd(&self) -> bool {
        self.r == 0
    }

    fn k6_factor(&self) -> u64 {
        (1 + self.rho3 + 3 * self.rho9) * (1 + 3 * self.rho7)
    }
}

/// Case of the closed-form count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    K2Odd,
    K2TwiceOddStar,
    K2TwiceOddNonStar,
    K2TwiceOddThree,
    K2FourDivides,
    K3Odd,
    K3StarOrEight,
    K3NonStarOrFour,
    K4OddPlain,
    K4OddFiveStar,
    K4OddFiveNonStar,
    K4OddThree,
    K4TwiceOddStar,
    K4TwiceOddNonStar,
    K4TwiceOddThree,
    K4Four,
    K4Eight,
    K4Sixteen,
    K5Odd,
    K5StarOrEight,
    K5NonStarOrFour,
    K6OddPlain,
    K6OddThreeOrSeven,
    K6TwiceOddStar,
    K6TwiceOddNonStar,
    K6Four,
    K6Eight,
}

impl Branch {
    pub fn label(self) -> &'static str {
        use Branch::*;
        match self {
            K2Odd | K3Odd | K5Odd => "n odd",
            K2TwiceOddStar => "2||n, 3!|n, star",
            K2TwiceOddNonStar => "2||n, 3!|n, not star",
            K2TwiceOddThree => "2||n, 3|n",
            K2FourDivides => "4|n",
            K3StarOrEight | K5StarOrEight => "2||n and star, or 8|n",
            K3NonStarOrFour | K5NonStarOrFour => "2||n and not star, or 4||n",
            K4OddPlain => "n odd, 3!|n, 5!|n",
            K4OddFiveStar => "n odd, 3!|n, 5|n, star",
            K4OddFiveNonStar => "n odd, 3!|n, 5|n, not star",
            K4OddThree => "n odd, 3|n",
            K4TwiceOddStar => "2||n, 3!|n, star",
            K4TwiceOddNonStar => "2||n, 3!|n, not star",
            K4TwiceOddThree => "2||n, 3|n",
            K4Four | K6Four => "4||n",
            K4Eight => "8||n",
            K4Sixteen => "16|n",
            K6OddPlain => "n odd, 3!|n, 7!|n",
            K6OddThreeOrSeven => "n odd, 3|n or 7|n",
            K6TwiceOddStar => "2||n, star",
            K6TwiceOddNonStar => "2||n, not star",
            K6Eight => "8|n",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

struct Rule {
    k: u32,
    branch: Branch,
    applies: fn(&Invariants) -> bool,
    count: fn(&Invariants) -> u64,
}

/// One row per case; the rows for a given `k` are mutually exclusive and
/// together cover every `n >= 2`.
const RULES: &[Rule] = &[
    Rule { k: 2, branch: Branch::K2Odd, applies: |v| v.odd(), count: |v| 1 + v.rho3 },
    Rule { k: 2, branch: Branch::K2TwiceOddStar, applies: |v| v.r == 1 && v.rho3 == 0 && v.star, count: |_| 1 },
    Rule { k: 2, branch: Branch::K2TwiceOddNonStar, applies: |v| v.r == 1 && v.rho3 == 0 && !v.star, count: |_| 2 },
    Rule { k: 2, branch: Branch::K2TwiceOddThree, applies: |v| v.r == 1 && v.rho3 == 1, count: |_| 4 },
    Rule { k: 2, branch: Branch::K2FourDivides, applies: |v| v.r >= 2, count: |v| 3 * (1 + v.rho3) },
    Rule { k: 3, branch: Branch::K3Odd, applies: |v| v.odd(), count: |_| 1 },
    Rule { k: 3, branch: Branch::K3StarOrEight, applies: |v| (v.r == 1 && v.star) || v.r >= 3, count: |_| 1 },
    Rule { k: 3, branch: Branch::K3NonStarOrFour, applies: |v| (v.r == 1 && !v.star) || v.r == 2, count: |_| 2 },
    Rule { k: 4, branch: Branch::K4OddPlain, applies: |v| v.odd() && v.rho3 == 0 && v.rho5 == 0, count: |_| 1 },
    Rule { k: 4, branch: Branch::K4OddFiveStar, applies: |v| v.odd() && v.rho3 == 0 && v.rho5 == 1 && v.star, count: |_| 2 },
    Rule { k: 4, branch: Branch::K4OddFiveNonStar, applies: |v| v.odd() && v.rho3 == 0 && v.rho5 == 1 && !v.star, count: |_| 3 },
    Rule { k: 4, branch: Branch::K4OddThree, applies: |v| v.odd() && v.rho3 == 1, count: |v| 2 * (1 + 2 * v.rho5) },
    Rule { k: 4, branch: Branch::K4TwiceOddStar, applies: |v| v.r == 1 && v.rho3 == 0 && v.star, count: |v| 1 + 2 * v.rho5 },
    Rule { k: 4, branch: Branch::K4TwiceOddNonStar, applies: |v| v.r == 1 && v.rho3 == 0 && !v.star, count: |v| 2 * (1 + 2 * v.rho5) },
    Rule { k: 4, branch: Branch::K4TwiceOddThree, applies: |v| v.r == 1 && v.rho3 == 1, count: |v| 4 * (1 + 2 * v.rho5) },
    Rule { k: 4, branch: Branch::K4Four, applies: |v| v.r == 2, count: |v| 3 * (1 + v.rho3) * (1 + 2 * v.rho5) },
    Rule { k: 4, branch: Branch::K4Eight, applies: |v| v.r == 3, count: |v| 4 * (1 + v.rho3) * (1 + 2 * v.rho5) },
    Rule { k: 4, branch: Branch::K4Sixteen, applies: |v| v.r >= 4, count: |v| 5 * (1 + v.rho3) * (1 + 2 * v.rho5) },
    Rule { k: 5, branch: Branch::K5Odd, applies: |v| v.odd(), count: |_| 1 },
    Rule { k: 5, branch: Branch::K5StarOrEight, applies: |v| (v.r == 1 && v.star) || v.r >= 3, count: |_| 8 },
    Rule { k: 5, branch: Branch::K5NonStarOrFour, applies: |v| (v.r == 1 && !v.star) || v.r == 2, count: |_| 16 },
    Rule { k: 6, branch: Branch::K6OddPlain, applies: |v| v.odd() && v.rho3 == 0 && v.rho7 == 0, count: |_| 1 },
    Rule { k: 6, branch: Branch::K6OddThreeOrSeven, applies: |v| v.odd() && (v.rho3 == 1 || v.rho7 == 1), count: |v| v.k6_factor() },
    Rule { k: 6, branch: Branch::K6TwiceOddStar, applies: |v| v.r == 1 && v.star, count: |_| 2 },
    Rule { k: 6, branch: Branch::K6TwiceOddNonStar, applies: |v| v.r == 1 && !v.star, count: |v| 4 * v.k6_factor() },
    Rule { k: 6, branch: Branch::K6Four, applies: |v| v.r == 2, count: |v| 6 * v.k6_factor() },
    Rule { k: 6, branch: Branch::K6Eight, applies: |v| v.r >= 3, count: |v| 5 * v.k6_factor() },
];

/// Every case that matches `(k, invariants)`; exactly one in a correct table.
pub fn matching_branches(k: u32, inv: &Invariants) -> Vec<Branch> {
    RULES
        .iter()
        .filter(|rule| rule.k == k && (rule.applies)(inv))
        .map(|rule| rule.branch)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub branch: Branch,
    pub g: u64,
    pub invariants: Invariants,
}

pub fn closed_form(k: u32, n: u64) -> Result<ClosedForm> {
    check_kn(k, n)?;
    let invariants = Invariants::of(n);
    let rule = RULES
        .iter()
        .find(|rule| rule.k == k && (rule.applies)(&invariants))
        .expect("closed-form table covers every n");
    Ok(ClosedForm {
        branch: rule.branch,
        g: (rule.count)(&invariants),
        invariants,
    })
}

pub fn closed_form_g(k: u32, n: u64) -> Result<u64> {
    Ok(closed_form(k, n)?.g)
}

/// Orbits of `T_k^n` under the induced automorphisms and the sign.
#[derive(Clone, Debug)]
pub struct BruteForce {
    pub kgroup: KGroup,
    pub partition: Partition,
}

impl BruteForce {
    pub fn count(&self) -> u64 {
        self.partition.len() as u64
    }
}

pub fn brute_force_classify(k: u32, n: u64) -> Result<BruteForce> {
    brute_force_classify_with(k, n, EpsilonRule::Parity)
}

pub fn brute_force_classify_with(k: u32, n: u64, rule: EpsilonRule) -> Result<BruteForce> {
    let kgroup = build_k(k, n)?;
    let mut generators: Vec<Endo> = equivalence_params(k, n)?
        .into_iter()
        .map(|g| induced_endo_with(&kgroup, g, rule))
        .collect::<Result<_>>()?;
    generators.push(negation_endo(&kgroup));
    let partition = orbits(attaching_set(&kgroup), &generators)?;
    Ok(BruteForce { kgroup, partition })
}

/// An element written as `a·θ + Σ c_i·i∘ξ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub theta_coeff: u64,
    /// Non-zero coefficients, in sphere-table order.
    pub named: Vec<(SphereGenerator, u64)>,
}

/// Renders decompositions in the notation of the closed-form listing:
/// `θ`, `(1/2)θ` for the inverse of 2, `(1+n)θ`, then the `i∘ξ` terms.
#[derive(Clone, Debug)]
struct Renderer {
    n: u64,
    theta_order: u64,
    base: u64,
    half: bool,
}

impl Renderer {
    fn new(kg: &KGroup) -> Self {
        let n = kg.n();
        let half = !matches!(kg.k(), 2 | 4) && n % 2 == 1;
        let base = if half {
            inverse_mod(2, kg.theta_order()).expect("odd theta order")
        } else {
            1
        };
        Self {
            n,
            theta_order: kg.theta_order(),
            base,
            half,
        }
    }

    /// Preferred θ coefficients first: the base, then base + j·n.
    fn rank(&self, a: u64) -> u64 {
        let lifts = self.theta_order / self.n;
        (0..lifts)
            .find(|&j| (self.base + j * self.n) % self.theta_order == a)
            .unwrap_or(lifts + a)
    }

    fn theta_term(&self, a: u64) -> Option<String> {
        if a == 0 {
            return None;
        }
        let base = if self.half { "(1/2)θ".to_string() } else { "θ".to_string() };
        let j = self.rank(a);
        Some(match j {
            0 => base,
            1 if !self.half => format!("(1+{})θ", self.n),
            _ => format!("{a}θ"),
        })
    }

    fn render(&self, d: &Decomposition, notation: Notation) -> String {
        let mut terms: Vec<String> = self.theta_term(d.theta_coeff).into_iter().collect();
        for &(g, c) in &d.named {
            let name = g.name(notation);
            terms.push(if c == 1 {
                format!("i∘{name}")
            } else {
                format!("{c}i∘{name}")
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Order in which named coefficients are minimised when picking a
/// display member: `σ₉η₁₆²` is tried last so that `k = 5` members come out
/// with their image part in `S₀`.
fn display_priority(kg: &KGroup) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..kg.named().len()).collect();
    if kg.k() == 5 {
        idx.rotate_right(1);
    }
    idx
}

struct Decomposer<'a> {
    kg: &'a KGroup,
    renderer: Renderer,
    priority: Vec<usize>,
    // image element -> minimal coefficient vector in priority order
    table: BTreeMap<GroupElement, Vec<u64>>,
    theta_order_by_rank: Vec<u64>,
}

impl<'a> Decomposer<'a> {
    fn new(kg: &'a KGroup) -> Self {
        let renderer = Renderer::new(kg);
        let priority = display_priority(kg);
        let gens: Vec<&GroupElement> = priority.iter().map(|&i| &kg.named()[i].1).collect();
        let bounds: Vec<u64> = gens.iter().map(|g| g.order()).collect();
        let mut table = BTreeMap::new();
        let mut coeffs = vec![0u64; gens.len()];
        loop {
            let x = gens
                .iter()
                .zip(&coeffs)
                .fold(kg.group().zero(), |acc, (g, &c)| acc.add_unchecked(&g.scale(c as i64)));
            table.entry(x).or_insert_with(|| coeffs.clone());
            // odometer, last position fastest so insertion order is lexicographic
            let mut pos = gens.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] < bounds[pos] {
                    break;
                }
                coeffs[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || gens.is_empty() {
                break;
            }
        }
        let mut theta_order_by_rank: Vec<u64> = (0..kg.theta_order()).collect();
        theta_order_by_rank.sort_by_key(|&a| renderer.rank(a));
        Self {
            kg,
            renderer,
            priority,
            table,
            theta_order_by_rank,
        }
    }

    /// First θ coefficient in preference order that leaves a remainder in
    /// the image, with that remainder's minimal coefficients.
    fn decompose_keyed(&self, x: &GroupElement) -> Option<((u64, Vec<u64>), Decomposition)> {
        for &a in &self.theta_order_by_rank {
            let rest = x.add_unchecked(&self.kg.theta().scale(-(a as i64)));
            if let Some(coeffs) = self.table.get(&rest) {
                let mut named: Vec<(usize, u64)> = self
                    .priority
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, &c)| c != 0)
                    .map(|(&i, &c)| (i, c))
                    .collect();
                named.sort_unstable();
                let d = Decomposition {
                    theta_coeff: a,
                    named: named.into_iter().map(|(i, c)| (self.kg.named()[i].0, c)).collect(),
                };
                return Some(((self.renderer.rank(a), coeffs.clone()), d));
            }
        }
        None
    }
}

/// Writes `x` as `a·θ + Σ c_i·i∘ξ_i`, preferring the base θ coefficient.
pub fn decompose(kg: &KGroup, x: &GroupElement) -> Result<Decomposition> {
    Decomposer::new(kg)
        .decompose_keyed(x)
        .map(|(_, d)| d)
        .ok_or(Error::Decomposition)
}

/// One orbit's display member and its decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub element: GroupElement,
    pub decomposition: Decomposition,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub k: u32,
    pub n: u64,
    pub branch: Branch,
    pub invariants: Invariants,
    pub closed_form_g: u64,
    pub brute_force_g: u64,
    pub partition: Partition,
    /// One per orbit, in partition order.
    pub representatives: Vec<Representative>,
    renderer: Renderer,
}

impl ClassificationResult {
    pub fn is_consistent(&self) -> bool {
        self.closed_form_g == self.brute_force_g
    }
}

/// Picks in each orbit the member whose decomposition reads most like the
/// closed-form listing.
fn choose_representatives(kg: &KGroup, partition: &Partition) -> Result<Vec<Representative>> {
    let dec = Decomposer::new(kg);
    partition
        .orbits
        .iter()
        .map(|orbit| {
            let mut best: Option<((u64, Vec<u64>), Representative)> = None;
            for x in &orbit.members {
                let (key, decomposition) = dec.decompose_keyed(x).ok_or(Error::Decomposition)?;
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    let rep = Representative {
                        element: x.clone(),
                        decomposition,
                    };
                    best = Some((key, rep));
                }
            }
            best.map(|(_, rep)| rep).ok_or(Error::Decomposition)
        })
        .collect()
}

/// Runs both counts without failing on a mismatch.
pub fn classify(k: u32, n: u64) -> Result<ClassificationResult> {
    let cf = closed_form(k, n)?;
    let bf = brute_force_classify(k, n)?;
    let representatives = choose_representatives(&bf.kgroup, &bf.partition)?;
    Ok(ClassificationResult {
        k,
        n,
        branch: cf.branch,
        invariants: cf.invariants,
        closed_form_g: cf.g,
        brute_force_g: bf.count(),
        renderer: Renderer::new(&bf.kgroup),
        partition: bf.partition,
        representatives,
    })
}

/// Like [`classify`], but a count mismatch is an error carrying the orbit
/// partition.
pub fn cross_validate(k: u32, n: u64) -> Result<ClassificationResult> {
    let result = classify(k, n)?;
    if !result.is_consistent() {
        return Err(Error::Mismatch {
            k,
            n,
            closed_form: result.closed_form_g,
            brute_force: result.brute_force_g,
            partition: result.partition.to_string(),
        });
    }
    Ok(result)
}

pub fn representatives_symbolic(result: &ClassificationResult, notation: Notation) -> Vec<String> {
    result
        .representatives
        .iter()
        .map(|r| result.renderer.render(&r.decomposition, notation))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_multiples(kg: &KGroup, set: &BTreeSet<GroupElement>) -> Vec<u64> {
        let mut out: Vec<u64> = set
            .iter()
            .map(|x| {
                (0..kg.theta_order())
                    .find(|&a| kg.theta().scale(a as i64) == *x)
                    .expect("cyclic")
            })
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_coefficients(2, 5).unwrap(), vec![1, 4]);
        assert_eq!(admissible_coefficients(3, 5).unwrap(), vec![2, 3]);
        assert_eq!(admissible_coefficients(3, 2).unwrap(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn attaching_examples() {
        let kg = build_k(3, 2).unwrap();
        assert_eq!(theta_multiples(&kg, &attaching_set(&kg)), vec![1, 3, 5, 7]);
        let kg = build_k(2, 5).unwrap();
        assert_eq!(theta_multiples(&kg, &attaching_set(&kg)), vec![1, 4]);
        let kg = build_k(2, 3).unwrap();
        let t = attaching_set(&kg);
        assert_eq!(t.len(), 6);
        let alpha = kg.named_element(SphereGenerator::Alpha1S3).unwrap();
        for a in [1, 2] {
            for c in 0..3 {
                let x = kg.theta().scale(a).add(&alpha.scale(c)).unwrap();
                assert!(t.contains(&x));
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_classify(3, 2).unwrap().count(), 1);
        assert_eq!(brute_force_classify(2, 3).unwrap().count(), 2);
        assert_eq!(brute_force_classify(5, 2).unwrap().count(), 8);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_g(4, 16).unwrap(), 5);
        assert_eq!(closed_form_g(6, 2).unwrap(), 2);
        assert_eq!(closed_form_g(2, 12).unwrap(), 6);
        assert_eq!(closed_form(4, 16).unwrap().branch.label(), "16|n");
        assert_eq!(closed_form(4, 24).unwrap().branch.label(), "8||n");
        // 63 = 9 * 7, so both the 9 and 7 terms contribute
        assert_eq!(closed_form_g(6, 63).unwrap(), 20);
        assert_eq!(closed_form_g(6, 21).unwrap(), 8);
        assert_eq!(closed_form_g(7, 4), Err(Error::KOutOfRange(7)));
    }

    #[test]
    fn cross_validate_examples() {
        assert_eq!(cross_validate(4, 24).unwrap().brute_force_g, 8);
        assert_eq!(cross_validate(6, 9).unwrap().brute_force_g, 5);
        assert_eq!(cross_validate(2, 2).unwrap().brute_force_g, 1);
    }

    #[test]
    fn branch_table_is_exhaustive_and_exclusive() {
        for k in 2..=6 {
            for n in 2..=2000 {
                let hits = matching_branches(k, &Invariants::of(n));
                assert_eq!(hits.len(), 1, "k = {k}, n = {n}: {hits:?}");
            }
        }
    }

    #[test]
    fn k4_odd_five_branches_differ() {
        // 5 is ★, 35 is not
        assert_eq!(closed_form(4, 5).unwrap().branch, Branch::K4OddFiveStar);
        assert_eq!(closed_form_g(4, 5).unwrap(), 2);
        assert_eq!(closed_form(4, 35).unwrap().branch, Branch::K4OddFiveNonStar);
        assert_eq!(closed_form_g(4, 35).unwrap(), 3);
    }

    #[test]
    fn symbolic_examples() {
        let r = cross_validate(2, 3).unwrap();
        assert_eq!(representatives_symbolic(&r, Notation::Unicode), vec!["θ", "θ + i∘α₁³"]);
        let r = cross_validate(3, 5).unwrap();
        assert_eq!(representatives_symbolic(&r, Notation::Ascii), vec!["(1/2)θ"]);
        assert_eq!(r.representatives[0].element.coeffs(), &[0, 3]);
        let r = cross_validate(5, 4).unwrap();
        let reps = representatives_symbolic(&r, Notation::Ascii);
        assert_eq!(reps.len(), 16);
        assert!(reps.iter().all(|s| !s.contains("sigma9")), "{reps:?}");
        assert!(reps.contains(&"θ".to_string()));
        assert!(reps.contains(&"(1+4)θ + i∘nu9^3 + i∘mu9 + i∘eta9eps10".to_string()));
    }

    #[test]
    fn representatives_form_a_transversal() {
        for (k, n) in [(2, 12), (4, 40), (6, 18), (5, 6), (3, 12)] {
            let r = cross_validate(k, n).unwrap();
            assert_eq!(r.representatives.len() as u64, r.brute_force_g);
            for (i, rep) in r.representatives.iter().enumerate() {
                assert_eq!(r.partition.orbit_of(&rep.element), Some(i));
            }
        }
    }

    #[test]
    fn decompose_reassembles() {
        let kg = build_k(4, 24).unwrap();
        for x in attaching_set(&kg) {
            let d = decompose(&kg, &x).unwrap();
            let back = d.named.iter().fold(kg.theta().scale(d.theta_coeff as i64), |acc, &(g, c)| {
                acc.add(&kg.named_element(g).unwrap().scale(c as i64)).unwrap()
            });
            assert_eq!(back, x);
        }
    }
}
