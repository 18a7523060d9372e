//! Finite groups as dense multiplication tables.

mod cayley;
mod construct;
mod spec;
mod sylow;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, NotAGroupReason, Result};

pub use cayley::{from_cayley_table, from_cayley_table_with, render_cayley_table};
pub use construct::{construct_group, construct_group_with};
pub use spec::{parse_group_spec, GroupSpec};
pub use sylow::{
    count_order_p_subgroups, nilpotent_profile, p_parts, FactorClass, NilpotentProfile,
    SylowFactor,
};

/// Element index inside a [`FiniteGroup`]. The identity is always 0.
pub type Elem = usize;

/// Cayley table of the symmetric group S_3, the smallest non-nilpotent group.
pub const S3_TABLE: &str = "\
# S_3: 0 = e, 1 = (123), 2 = (132), 3..5 = transpositions
6
0 1 2 3 4 5
1 2 0 4 5 3
2 0 1 5 3 4
3 5 4 0 2 1
4 3 5 1 0 2
5 4 3 2 1 0
";

pub const DEFAULT_ORDER_CAP: usize = 4096;
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 512;

#[derive(Debug, Clone)]
pub struct GroupOptions {
    pub order_cap: usize,
    /// Largest order whose associativity is checked over all triples.
    pub exhaustive_limit: usize,
    /// Triples sampled above `exhaustive_limit`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for GroupOptions {
    fn default() -> Self {
        GroupOptions {
            order_cap: DEFAULT_ORDER_CAP,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            samples: 100_000,
            seed: 0x5eed,
        }
    }
}

/// How associativity of the table was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum AssociativityCheck {
    Exhaustive,
    /// Random triples plus the middle-generator test over a generating set.
    /// Recorded as `unverified` in reports: only the exhaustive path is the
    /// reference check.
    Sampled {
        samples: usize,
        seed: u64,
        generators: Vec<Elem>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Spec(GroupSpec),
    Imported,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Spec(s) => write!(f, "{s}"),
            Provenance::Imported => f.write_str("imported"),
        }
    }
}

/// A validated finite group.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u64>,
    provenance: Provenance,
    associativity: AssociativityCheck,
}

/// The powers of one element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSubgroup {
    pub generator: Elem,
    /// Sorted ascending.
    pub elements: Vec<Elem>,
}

impl CyclicSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

impl FiniteGroup {
    /// Validates `mul` (row-major, `order * order`) as a group table. The
    /// identity is moved to index 0 by swapping labels.
    pub fn from_table(
        order: usize,
        mut mul: Vec<u32>,
        provenance: Provenance,
        opts: &GroupOptions,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("group order must be positive".into()));
        }
        if order > opts.order_cap {
            return Err(Error::OrderTooLarge {
                order: order as u64,
                cap: opts.order_cap,
            });
        }
        if mul.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "expected {} entries, found {}",
                order * order,
                mul.len()
            )));
        }
        if let Some(bad) = mul.iter().find(|&&v| v as usize >= order) {
            return Err(Error::MalformedTable(format!("entry {bad} out of range")));
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] as usize == x && mul[x * order + e] as usize == x))
            .ok_or(Error::NotAGroup(NotAGroupReason::NoIdentity))?;
        if identity != 0 {
            mul = relabel_swap(order, &mul, 0, identity);
        }

        let mut inv = vec![0u32; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| mul[a * order + b] == 0 && mul[b * order + a] == 0)
                .ok_or(Error::NotAGroup(NotAGroupReason::MissingInverse { element: a }))?;
            inv[a] = b as u32;
        }

        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let associativity = if order <= opts.exhaustive_limit {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAGroup(NotAGroupReason::NonAssociative { a, b, c }));
                        }
                    }
                }
            }
            AssociativityCheck::Exhaustive
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.samples {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::NotAGroup(NotAGroupReason::NonAssociative { a, b, c }));
                }
            }
            let generators = greedy_generators(order, &mul);
            for &g in &generators {
                for a in 0..order {
                    let ag = at(a, g);
                    for c in 0..order {
                        if at(ag, c) != at(a, at(g, c)) {
                            return Err(Error::NotAGroup(NotAGroupReason::NonAssociative { a, b: g, c }));
                        }
                    }
                }
            }
            AssociativityCheck::Sampled {
                samples: opts.samples,
                seed: opts.seed,
                generators,
            }
        };

        let mut elem_order = vec![0u64; order];
        for (g, slot) in elem_order.iter_mut().enumerate() {
            let mut x = g;
            let mut m = 1;
            while x != 0 {
                x = at(x, g);
                m += 1;
            }
            *slot = m;
        }

        Ok(FiniteGroup {
            order,
            mul,
            inv,
            elem_order,
            provenance,
            associativity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    pub fn elem_order(&self, g: Elem) -> u64 {
        self.elem_order[g]
    }

    pub fn elem_orders(&self) -> &[u64] {
        &self.elem_order
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn associativity(&self) -> &AssociativityCheck {
        &self.associativity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn pow(&self, g: Elem, e: u64) -> Elem {
        let e = e % self.elem_order[g];
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    /// The powers of `g`, sorted ascending.
    pub fn powers(&self, g: Elem) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.elem_order[g] as usize);
        let mut x = 0;
        loop {
            out.push(x);
            x = self.mul(x, g);
            if x == 0 {
                break;
            }
        }
        out.sort_unstable();
        out
    }

    pub fn cyclic_subgroup(&self, g: Elem) -> CyclicSubgroup {
        CyclicSubgroup {
            generator: g,
            elements: self.powers(g),
        }
    }

    /// One representative per distinct cyclic subgroup, ordered by
    /// (order, element list). The representative generator is the smallest
    /// generating element.
    pub fn distinct_cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            let elements = self.powers(g);
            if seen.insert(elements.clone()) {
                out.push(CyclicSubgroup { generator: g, elements });
            }
        }
        out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        out
    }

    /// Cyclic subgroups not properly contained in another cyclic subgroup,
    /// in the same canonical order.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let all = self.distinct_cyclic_subgroups();
        // ⟨g⟩ ⊊ ⟨h⟩ iff g is a power of h with o(g) < o(h).
        let mut covered = vec![false; all.len()];
        let index_of: std::collections::HashMap<&[Elem], usize> = all
            .iter()
            .enumerate()
            .map(|(i, c)| (c.elements.as_slice(), i))
            .collect();
        for c in &all {
            for &x in &c.elements {
                if (self.elem_order[x] as usize) < c.order() {
                    let sub = self.powers(x);
                    covered[index_of[sub.as_slice()]] = true;
                }
            }
        }
        all.into_iter()
            .zip(covered)
            .filter_map(|(c, cov)| (!cov).then_some(c))
            .collect()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.commute(z, g)))
            .collect()
    }
}

fn relabel_swap(order: usize, mul: &[u32], a: usize, b: usize) -> Vec<u32> {
    let sw = |x: usize| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let mut out = vec![0u32; order * order];
    for x in 0..order {
        for y in 0..order {
            out[sw(x) * order + sw(y)] = sw(mul[x * order + y] as usize) as u32;
        }
    }
    out
}

/// Adds the least element outside the multiplicative closure until the
/// closure is everything.
fn greedy_generators(order: usize, mul: &[u32]) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut closure = vec![false; order];
    closure[0] = true;
    let mut members = vec![0usize];
    while let Some(next) = (0..order).find(|&g| !closure[g]) {
        gens.push(next);
        let mut frontier = vec![next];
        closure[next] = true;
        members.push(next);
        while let Some(x) = frontier.pop() {
            for i in 0..members.len() {
                let y = members[i];
                for z in [mul[x * order + y] as usize, mul[y * order + x] as usize] {
                    if !closure[z] {
                        closure[z] = true;
                        members.push(z);
                        frontier.push(z);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteGroup {
        construct_group(&GroupSpec::Cyclic(n)).unwrap()
    }

    fn q8() -> FiniteGroup {
        construct_group(&GroupSpec::Quaternion(3)).unwrap()
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let g = z(6);
        assert_eq!(g.cyclic_subgroup(1).elements, (0..6).collect::<Vec<_>>());
        assert_eq!(g.cyclic_subgroup(0).elements, vec![0]);
        let q = q8();
        let inv = (0..8).find(|&x| q.elem_order(x) == 2).unwrap();
        let h = q.cyclic_subgroup(inv);
        assert_eq!(h.elements, vec![0, inv]);
        assert_eq!(h.order() as u64, q.elem_order(inv));
    }

    #[test]
    fn distinct_cyclic_subgroup_counts() {
        assert_eq!(z(6).distinct_cyclic_subgroups().len(), 4);
        let q = q8().distinct_cyclic_subgroups();
        assert_eq!(q.iter().map(|c| c.order()).collect::<Vec<_>>(), vec![1, 2, 4, 4, 4]);
        let e32 = construct_group(&parse_group_spec("E3^2").unwrap()).unwrap();
        assert_eq!(e32.distinct_cyclic_subgroups().len(), 5);
        assert_eq!(e32.maximal_cyclic_subgroups().len(), 4);
        assert_eq!(q8().maximal_cyclic_subgroups().len(), 3);
        assert_eq!(z(12).maximal_cyclic_subgroups().len(), 1);
    }

    #[test]
    fn centers() {
        assert_eq!(z(5).center().len(), 5);
        let q = q8();
        let c = q.center();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|&x| q.elem_order(x) <= 2));
        let h3 = construct_group(&GroupSpec::Heisenberg(3)).unwrap();
        assert_eq!(h3.center().len(), 3);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z_3 written with identity at label 2: a*b = (a + b + 1) mod 3.
        let mul: Vec<u32> = (0..3)
            .flat_map(|a| (0..3).map(move |b| ((a + b + 1) % 3) as u32))
            .collect();
        let g = FiniteGroup::from_table(3, mul, Provenance::Imported, &GroupOptions::default()).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.elem_orders(), &[1, 3, 3]);
        assert_eq!(g.mul(0, 1), 1);
    }

    #[test]
    fn sampled_check_above_limit() {
        let opts = GroupOptions {
            exhaustive_limit: 10,
            samples: 500,
            ..GroupOptions::default()
        };
        let g = construct_group_with(&parse_group_spec("Z4xQ8").unwrap(), &opts).unwrap();
        match g.associativity() {
            AssociativityCheck::Sampled { generators, .. } => assert!(!generators.is_empty()),
            other => panic!("expected sampled check, got {other:?}"),
        }
    }

    #[test]
    fn middle_generator_test_catches_non_associative_table() {
        // A loop of order 12 with identity and inverses but no associativity:
        // perturb Z_12 by swapping two products.
        let n = 12usize;
        let mut mul: Vec<u32> = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        mul[3 * n + 4] = 8;
        mul[3 * n + 5] = 7;
        mul[5 * n + 3] = 7;
        mul[4 * n + 3] = 8;
        let opts = GroupOptions {
            exhaustive_limit: 4,
            samples: 0,
            ..GroupOptions::default()
        };
        let err = FiniteGroup::from_table(n, mul, Provenance::Imported, &opts).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(NotAGroupReason::NonAssociative { .. })), "{err}");
    }
}
