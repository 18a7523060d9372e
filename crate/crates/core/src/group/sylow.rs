//! Sylow decomposition of nilpotent groups via p-element sets.

use std::fmt;

use serde::Serialize;

use super::{Elem, FiniteGroup};
use crate::arith::{crt_idempotent, factorize, is_prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorClass {
    Cyclic,
    GeneralizedQuaternion,
    Neither,
}

/// The Sylow p-subgroup of a nilpotent group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowFactor {
    pub prime: u64,
    pub exponent: u32,
    /// All p-elements, ascending. Empty for synthetic profiles.
    #[serde(skip)]
    pub elements: Vec<Elem>,
    pub class: FactorClass,
    /// Number of subgroups of order `prime`.
    pub r: u64,
    /// Quaternion parameter (order `2^k`), present iff the factor is
    /// generalized quaternion.
    pub k: Option<u32>,
}

impl SylowFactor {
    pub fn order(&self) -> u64 {
        self.prime.pow(self.exponent)
    }

    /// A factor described only by its invariants, for reasoning about
    /// profiles without a concrete group.
    pub fn synthetic(prime: u64, exponent: u32, class: FactorClass, r: u64) -> Self {
        SylowFactor {
            prime,
            exponent,
            elements: Vec::new(),
            class,
            r,
            k: (class == FactorClass::GeneralizedQuaternion).then_some(exponent),
        }
    }
}

/// Classified Sylow factors of a nilpotent group, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotentProfile {
    factors: Vec<SylowFactor>,
    /// Number of factors that are neither cyclic nor generalized quaternion.
    m: usize,
    /// Product of the orders of the cyclic factors.
    n_cyclic: u64,
    has_quaternion: bool,
    /// `r` of the "neither" factors, nondecreasing.
    r_sorted: Vec<u64>,
}

impl NilpotentProfile {
    /// Assembles and validates a profile from factors in any order.
    pub fn from_factors(mut factors: Vec<SylowFactor>) -> Result<Self> {
        factors.sort_by_key(|f| f.prime);
        for w in factors.windows(2) {
            if w[0].prime == w[1].prime {
                return Err(Error::ProfileInvalid(format!("prime {} repeated", w[0].prime)));
            }
        }
        for f in &factors {
            let bad = |why: &str| Err(Error::ProfileInvalid(format!("factor p={}: {why}", f.prime)));
            if !is_prime(f.prime) {
                return bad("not a prime");
            }
            if f.exponent == 0 {
                return bad("exponent must be positive");
            }
            if !f.elements.is_empty() && f.elements.len() as u64 != f.order() {
                return bad("element count differs from p^t");
            }
            match f.class {
                FactorClass::Cyclic if f.r != 1 || f.k.is_some() => {
                    return bad("cyclic factor must have r = 1 and no k")
                }
                FactorClass::GeneralizedQuaternion
                    if f.prime != 2 || f.exponent < 3 || f.r != 1 || f.k != Some(f.exponent) =>
                {
                    return bad("quaternion factor must be a 2-group of order >= 8 with r = 1, k = t")
                }
                FactorClass::Neither if f.r < 2 || f.k.is_some() => {
                    return bad("non-cyclic non-quaternion factor must have r >= 2 and no k")
                }
                _ => {}
            }
        }
        let mut r_sorted: Vec<u64> = factors
            .iter()
            .filter(|f| f.class == FactorClass::Neither)
            .map(|f| f.r)
            .collect();
        r_sorted.sort_unstable();
        Ok(NilpotentProfile {
            m: r_sorted.len(),
            n_cyclic: factors
                .iter()
                .filter(|f| f.class == FactorClass::Cyclic)
                .map(SylowFactor::order)
                .product(),
            has_quaternion: factors
                .iter()
                .any(|f| f.class == FactorClass::GeneralizedQuaternion),
            r_sorted,
            factors,
        })
    }

    pub fn factors(&self) -> &[SylowFactor] {
        &self.factors
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_cyclic(&self) -> u64 {
        self.n_cyclic
    }

    pub fn has_quaternion(&self) -> bool {
        self.has_quaternion
    }

    pub fn has_cyclic_part(&self) -> bool {
        self.n_cyclic > 1
    }

    pub fn r_sorted(&self) -> &[u64] {
        &self.r_sorted
    }

    pub fn min_r(&self) -> Option<u64> {
        self.r_sorted.first().copied()
    }

    pub fn quaternion_k(&self) -> Option<u32> {
        self.factors.iter().find_map(|f| f.k)
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(SylowFactor::order).product()
    }

    pub fn factor(&self, p: u64) -> Option<&SylowFactor> {
        self.factors.iter().find(|f| f.prime == p)
    }

    /// True for groups of prime-power order (including order 1 is false).
    pub fn is_p_group(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for NilpotentProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("trivial");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match fac.class {
                FactorClass::Cyclic => write!(f, "{}^{}:cyclic", fac.prime, fac.exponent)?,
                FactorClass::GeneralizedQuaternion => {
                    write!(f, "{}^{}:quaternion(k={})", fac.prime, fac.exponent, fac.exponent)?
                }
                FactorClass::Neither => {
                    write!(f, "{}^{}:neither(r={})", fac.prime, fac.exponent, fac.r)?
                }
            }
        }
        Ok(())
    }
}

/// Number of subgroups of order `p` among `elements`: the count of elements
/// of order `p`, divided by `p - 1`.
pub fn count_order_p_subgroups(g: &FiniteGroup, elements: &[Elem], p: u64) -> u64 {
    let n = elements.iter().filter(|&&x| g.elem_order(x) == p).count() as u64;
    n / (p - 1)
}

/// Splits a nilpotent group into its Sylow factors. Fails with the first
/// prime whose p-elements are not closed under multiplication.
pub fn nilpotent_profile(g: &FiniteGroup) -> Result<NilpotentProfile> {
    let mut factors = Vec::new();
    for (p, t) in factorize(g.order() as u64) {
        let elements: Vec<Elem> = g
            .elements()
            .filter(|&x| is_power_of(g.elem_order(x), p))
            .collect();
        let mut member = vec![false; g.order()];
        for &x in &elements {
            member[x] = true;
        }
        let closed = elements
            .iter()
            .all(|&a| elements.iter().all(|&b| member[g.mul(a, b)]));
        if !closed || elements.len() as u64 != p.pow(t) {
            return Err(Error::NotNilpotent { prime: p });
        }
        let full = p.pow(t);
        let involutions_or_p = elements.iter().filter(|&&x| g.elem_order(x) == p).count();
        let class = if elements.iter().any(|&x| g.elem_order(x) == full) {
            FactorClass::Cyclic
        } else if p == 2 && involutions_or_p == 1 {
            FactorClass::GeneralizedQuaternion
        } else {
            FactorClass::Neither
        };
        let r = count_order_p_subgroups(g, &elements, p);
        factors.push(SylowFactor {
            prime: p,
            exponent: t,
            elements,
            class,
            r,
            k: (class == FactorClass::GeneralizedQuaternion).then_some(t),
        });
    }
    NilpotentProfile::from_factors(factors)
}

/// The commuting prime-power parts `g = ∏ g_p`, one per prime dividing `o(g)`,
/// computed as `g_p = g^e` with `e ≡ 1 mod p^a`, `e ≡ 0 mod o(g)/p^a`.
pub fn p_parts(g: &FiniteGroup, x: Elem) -> Vec<(u64, Elem)> {
    let o = g.elem_order(x);
    factorize(o)
        .into_iter()
        .map(|(p, a)| {
            let pa = p.pow(a);
            (p, g.pow(x, crt_idempotent(pa, o / pa)))
        })
        .collect()
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_group, from_cayley_table, parse_group_spec};

    fn profile(s: &str) -> Result<NilpotentProfile> {
        nilpotent_profile(&construct_group(&parse_group_spec(s).unwrap()).unwrap())
    }

    #[test]
    fn z12_is_two_cyclic_factors() {
        let p = profile("Z12").unwrap();
        let shape: Vec<_> = p.factors().iter().map(|f| (f.prime, f.class)).collect();
        assert_eq!(shape, vec![(2, FactorClass::Cyclic), (3, FactorClass::Cyclic)]);
        assert_eq!(p.n_cyclic(), 12);
        assert_eq!(p.m(), 0);
    }

    #[test]
    fn s3_is_not_nilpotent() {
        let g = from_cayley_table(crate::group::S3_TABLE).unwrap();
        assert!(matches!(nilpotent_profile(&g), Err(Error::NotNilpotent { prime: 2 })));
    }

    #[test]
    fn e32_q8_profile() {
        let p = profile("E3^2xQ8").unwrap();
        let f2 = p.factor(2).unwrap();
        assert_eq!((f2.class, f2.k), (FactorClass::GeneralizedQuaternion, Some(3)));
        let f3 = p.factor(3).unwrap();
        assert_eq!((f3.class, f3.r), (FactorClass::Neither, 4));
        assert_eq!(p.r_sorted(), &[4]);
        assert!(p.has_quaternion());
        assert_eq!(p.order(), 72);
    }

    #[test]
    fn r_counts() {
        assert_eq!(profile("E3^2").unwrap().factor(3).unwrap().r, 4);
        assert_eq!(profile("Q8").unwrap().factor(2).unwrap().r, 1);
        assert_eq!(profile("Z8").unwrap().factor(2).unwrap().r, 1);
        assert_eq!(profile("H3").unwrap().factor(3).unwrap().r, 13);
        assert_eq!(profile("D8").unwrap().factor(2).unwrap().r, 5);
    }

    #[test]
    fn two_group_dichotomy() {
        for s in ["Q8", "Q16", "Q32", "Q64"] {
            assert_eq!(profile(s).unwrap().factors()[0].class, FactorClass::GeneralizedQuaternion, "{s}");
        }
        for s in ["D8", "D16", "E2^2", "E2^3", "Z4xZ2", "Z2xQ8"] {
            assert_eq!(profile(s).unwrap().factors()[0].class, FactorClass::Neither, "{s}");
        }
    }

    #[test]
    fn trivial_group_profile() {
        let p = profile("Z1").unwrap();
        assert!(p.factors().is_empty());
        assert_eq!(p.n_cyclic(), 1);
        assert_eq!(p.to_string(), "trivial");
    }

    #[test]
    fn p_parts_recompose() {
        let g = construct_group(&parse_group_spec("Z15xQ8").unwrap()).unwrap();
        for x in g.elements() {
            let parts = p_parts(&g, x);
            let prod = parts.iter().fold(0, |acc, &(_, y)| g.mul(acc, y));
            assert_eq!(prod, x);
            for &(p, y) in &parts {
                assert!(is_power_of(g.elem_order(y), p));
            }
        }
    }

    #[test]
    fn invalid_synthetic_profiles() {
        use FactorClass::*;
        let q = |p, t, c, r| SylowFactor::synthetic(p, t, c, r);
        assert!(NilpotentProfile::from_factors(vec![q(3, 3, GeneralizedQuaternion, 1)]).is_err());
        assert!(NilpotentProfile::from_factors(vec![q(3, 2, Neither, 4), q(3, 1, Cyclic, 1)]).is_err());
        assert!(NilpotentProfile::from_factors(vec![q(4, 1, Cyclic, 1)]).is_err());
        assert!(NilpotentProfile::from_factors(vec![q(2, 2, Neither, 1)]).is_err());
        let ok = NilpotentProfile::from_factors(vec![q(5, 1, Cyclic, 1), q(2, 3, GeneralizedQuaternion, 1)]).unwrap();
        assert_eq!(ok.factors()[0].prime, 2);
        assert_eq!(ok.quaternion_k(), Some(3));
    }
}
