//! Element-order spectra: the multiset {order of x : x ∈ G} as a map
//! d ↦ #{x : ord(x) = d}.
//!
//! Spectra drive every cycle count here: elements of order d coprime to the
//! exponent a sit on cycles of length ord_d(a), everything else feeds the
//! trees. Counts are big integers because symmetric groups up to S_40 are in
//! scope; orders themselves fit comfortably in u64 (the largest element order
//! in S_40 is far below the crude bound ∏ parts ≤ 3^14).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{euler_phi, factorize, lcm};
use crate::groups::{element_order, FiniteGroup, GroupError, GroupSpec};

/// Order spectrum of one finite group; immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    group_order: BigUint,
    counts: BTreeMap<u64, BigUint>,
}

impl OrderSpectrum {
    /// Walks every element of a realized group.
    pub fn bruteforce(g: &FiniteGroup) -> OrderSpectrum {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for x in 0..g.order() {
            *counts.entry(element_order(g, x)).or_insert(0) += 1;
        }
        OrderSpectrum {
            group_order: g.order().into(),
            counts: counts.into_iter().map(|(d, c)| (d, c.into())).collect(),
        }
    }

    /// Spectrum of a subset of a realized group, with orders taken in g.
    /// Meaningful when the subset is a subgroup.
    pub fn of_subset(g: &FiniteGroup, elems: &[usize]) -> OrderSpectrum {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for &x in elems {
            *counts.entry(element_order(g, x)).or_insert(0) += 1;
        }
        OrderSpectrum {
            group_order: elems.len().into(),
            counts: counts.into_iter().map(|(d, c)| (d, c.into())).collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn from_raw(group_order: u64, pairs: &[(u64, u64)]) -> OrderSpectrum {
        OrderSpectrum {
            group_order: group_order.into(),
            counts: pairs.iter().map(|&(d, c)| (d, c.into())).collect(),
        }
    }

    /// Cyclic group of order n: exactly φ(d) elements of order d per d | n.
    pub fn cyclic(n: u64) -> OrderSpectrum {
        assert!(n >= 1);
        let counts = factorize(n)
            .unwrap()
            .divisors()
            .into_iter()
            .map(|d| (d, euler_phi(d).into()))
            .collect();
        OrderSpectrum {
            group_order: n.into(),
            counts,
        }
    }

    /// Dihedral group of order 2n: the rotations form C_n, the n reflections
    /// all have order 2.
    pub fn dihedral(n: u64) -> OrderSpectrum {
        assert!(n >= 3);
        let mut s = OrderSpectrum::cyclic(n);
        s.group_order = (2 * n).into();
        *s.counts.entry(2).or_insert_with(BigUint::zero) += BigUint::from(n);
        s
    }

    /// Symmetric group S_n for n ≤ 40, by integer partitions: a permutation
    /// of cycle type 1^c₁ 2^c₂ … has order lcm of its part sizes, and there
    /// are n! / ∏ᵢ (cᵢ! · i^cᵢ) of each type.
    pub fn symmetric(n: u32) -> OrderSpectrum {
        assert!((1..=40).contains(&n));
        let mut factorial = vec![BigUint::one()];
        for k in 1..=n as u64 {
            let next = factorial.last().unwrap() * k;
            factorial.push(next);
        }
        let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
        for_each_partition(n as u64, |parts| {
            let mut key = 1u64;
            let mut denom = BigUint::one();
            let mut i = 0;
            while i < parts.len() {
                let part = parts[i];
                let mut mult = 0u32;
                while i < parts.len() && parts[i] == part {
                    mult += 1;
                    i += 1;
                }
                key = lcm(key, part);
                denom *= BigUint::from(part).pow(mult) * &factorial[mult as usize];
            }
            let (count, rem) = factorial[n as usize].div_rem(&denom);
            debug_assert!(rem.is_zero());
            *counts.entry(key).or_insert_with(BigUint::zero) += count;
        });
        OrderSpectrum {
            group_order: factorial.pop().unwrap(),
            counts,
        }
    }

    /// SL₂(F_q) for an odd prime power q = p^e, from the element census:
    /// ±I, split semisimple classes along q−1, nonsplit along q+1, and the
    /// unipotent ±(parabolic) elements of orders p and 2p.
    pub fn sl2(q: u64) -> Result<OrderSpectrum, GroupError> {
        let fact = factorize(q.max(1)).unwrap();
        let p = match fact.prime_powers() {
            [(p, _)] if *p != 2 && q >= 3 => *p,
            _ => {
                return Err(GroupError::UnsupportedParameter(format!(
                    "sl2 spectrum needs an odd prime power, got {q}"
                )))
            }
        };
        let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
        let mut bump = |d: u64, c: u64| {
            *counts.entry(d).or_insert_with(BigUint::zero) += BigUint::from(c);
        };
        bump(1, 1);
        bump(2, 1);
        for d in factorize(q - 1).unwrap().divisors() {
            if d > 2 {
                // φ(d)/2 diagonalizable classes, each of size q(q+1).
                bump(d, euler_phi(d) / 2 * q * (q + 1));
            }
        }
        for d in factorize(q + 1).unwrap().divisors() {
            if d > 2 {
                bump(d, euler_phi(d) / 2 * q * (q - 1));
            }
        }
        bump(p, q * q - 1);
        bump(2 * p, q * q - 1);
        let spectrum = OrderSpectrum {
            group_order: (q * (q * q - 1)).into(),
            counts,
        };
        debug_assert_eq!(spectrum.total(), spectrum.group_order);
        Ok(spectrum)
    }

    /// Direct product: an element pair (x, y) has order lcm(ord x, ord y).
    pub fn product(a: &OrderSpectrum, b: &OrderSpectrum) -> OrderSpectrum {
        let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (&da, ca) in &a.counts {
            for (&db, cb) in &b.counts {
                *counts
                    .entry(lcm(da, db))
                    .or_insert_with(BigUint::zero) += ca * cb;
            }
        }
        OrderSpectrum {
            group_order: &a.group_order * &b.group_order,
            counts,
        }
    }

    /// Spectrum of a described group: closed form where the family has one
    /// (cyclic, dihedral, symmetric, SL₂, products of these), element walk
    /// otherwise.
    pub fn of_spec(spec: &GroupSpec) -> Result<OrderSpectrum, GroupError> {
        let unsupported = |msg: String| Err(GroupError::UnsupportedParameter(msg));
        match spec {
            &GroupSpec::Cyclic(n) => {
                if n < 1 {
                    return unsupported("cyclic n = 0, need n ≥ 1".to_string());
                }
                Ok(OrderSpectrum::cyclic(n))
            }
            &GroupSpec::Dihedral(n) => {
                if n < 3 {
                    return unsupported(format!("dihedral n = {n}, need n ≥ 3"));
                }
                Ok(OrderSpectrum::dihedral(n))
            }
            &GroupSpec::Symmetric(n) => {
                if !(1..=40).contains(&n) {
                    return unsupported(format!("symmetric n = {n}, need 1 ≤ n ≤ 40"));
                }
                Ok(OrderSpectrum::symmetric(n))
            }
            &GroupSpec::Sl2(q) => OrderSpectrum::sl2(q),
            GroupSpec::Product(parts) => {
                let mut acc = OrderSpectrum::of_spec(&parts[0])?;
                for part in &parts[1..] {
                    acc = OrderSpectrum::product(&acc, &OrderSpectrum::of_spec(part)?);
                }
                Ok(acc)
            }
            GroupSpec::Heisenberg(_) | GroupSpec::Permutation { .. } => {
                Ok(OrderSpectrum::bruteforce(&spec.realize()?))
            }
        }
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// Nonzero counts, keyed by element order.
    pub fn counts(&self) -> &BTreeMap<u64, BigUint> {
        &self.counts
    }

    /// Number of elements of order exactly d.
    pub fn count_of(&self, d: u64) -> BigUint {
        self.counts.get(&d).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Number of elements of order at least m.
    pub fn count_order_at_least(&self, m: u64) -> BigUint {
        self.counts
            .range(m..)
            .map(|(_, c)| c)
            .sum()
    }

    fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

/// Visits every partition of n as a descending part list, in descending
/// lexicographic order.
fn for_each_partition(n: u64, mut f: impl FnMut(&[u64])) {
    assert!(n >= 1);
    let mut parts: Vec<u64> = vec![n];
    loop {
        f(&parts);
        let Some(i) = parts.iter().rposition(|&p| p > 1) else {
            return;
        };
        let mut rem: u64 = parts[i..].iter().sum();
        let cap = parts[i] - 1;
        parts.truncate(i);
        while rem > 0 {
            let take = cap.min(rem);
            parts.push(take);
            rem -= take;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    fn realize(s: &str) -> FiniteGroup {
        GroupSpec::parse(s).unwrap().realize().unwrap()
    }

    fn from_pairs(order: u64, pairs: &[(u64, u64)]) -> OrderSpectrum {
        OrderSpectrum {
            group_order: order.into(),
            counts: pairs.iter().map(|&(d, c)| (d, c.into())).collect(),
        }
    }

    fn assert_well_formed(s: &OrderSpectrum) {
        assert_eq!(s.total(), *s.group_order());
        assert_eq!(s.count_of(1), BigUint::one());
        for (&d, c) in s.counts() {
            // φ(d) divides the count of order-d elements in any group.
            assert!(c.is_multiple_of(&euler_phi(d).into()), "order {d}");
        }
    }

    #[test]
    fn cyclic_spectra() {
        assert_eq!(
            OrderSpectrum::cyclic(10),
            from_pairs(10, &[(1, 1), (2, 1), (5, 4), (10, 4)])
        );
        assert_eq!(OrderSpectrum::cyclic(1), from_pairs(1, &[(1, 1)]));
        for n in [1u64, 2, 3, 12, 30, 100] {
            let s = OrderSpectrum::cyclic(n);
            assert_well_formed(&s);
            assert_eq!(s, OrderSpectrum::bruteforce(&realize(&format!("cyclic:{n}"))));
        }
    }

    #[test]
    fn dihedral_spectra() {
        assert_eq!(
            OrderSpectrum::dihedral(3),
            from_pairs(6, &[(1, 1), (2, 3), (3, 2)])
        );
        assert_eq!(
            OrderSpectrum::dihedral(4),
            from_pairs(8, &[(1, 1), (2, 5), (4, 2)])
        );
        assert_eq!(
            OrderSpectrum::dihedral(5),
            from_pairs(10, &[(1, 1), (2, 5), (5, 4)])
        );
        for n in [3u64, 4, 5, 6, 12, 15, 64] {
            let s = OrderSpectrum::dihedral(n);
            assert_well_formed(&s);
            assert_eq!(
                s,
                OrderSpectrum::bruteforce(&realize(&format!("dihedral:{n}")))
            );
        }
    }

    #[test]
    fn symmetric_spectra() {
        assert_eq!(OrderSpectrum::symmetric(1), from_pairs(1, &[(1, 1)]));
        assert_eq!(
            OrderSpectrum::symmetric(3),
            from_pairs(6, &[(1, 1), (2, 3), (3, 2)])
        );
        assert_eq!(
            OrderSpectrum::symmetric(4),
            from_pairs(24, &[(1, 1), (2, 9), (3, 8), (4, 6)])
        );
        for n in 1..=7u32 {
            let s = OrderSpectrum::symmetric(n);
            assert_well_formed(&s);
            assert_eq!(
                s,
                OrderSpectrum::bruteforce(&realize(&format!("symmetric:{n}")))
            );
        }
    }

    #[test]
    fn symmetric_spectrum_reaches_forty() {
        let s = OrderSpectrum::symmetric(40);
        assert_well_formed(&s);
        // Max element order in S_40 stays far below u64 (∏ parts ≤ 3^14).
        let max = *s.counts().keys().max().unwrap();
        assert!(max <= 3u64.pow(14));
        assert!(s.counts().contains_key(&(9 * 8 * 7 * 5 * 11)));
    }

    #[test]
    fn sl2_spectra() {
        assert_eq!(
            OrderSpectrum::sl2(3).unwrap(),
            from_pairs(24, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)])
        );
        assert_eq!(
            OrderSpectrum::sl2(5).unwrap(),
            from_pairs(
                120,
                &[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]
            )
        );
        for q in [3u64, 5, 7, 9, 11, 13] {
            let s = OrderSpectrum::sl2(q).unwrap();
            assert_well_formed(&s);
            assert_eq!(s, OrderSpectrum::bruteforce(&realize(&format!("sl2:{q}"))));
        }
        assert!(OrderSpectrum::sl2(4).is_err());
        assert!(OrderSpectrum::sl2(15).is_err());
        assert!(OrderSpectrum::sl2(2).is_err());
        // Beyond the realization cap the census still works.
        let s = OrderSpectrum::sl2(27).unwrap();
        assert_well_formed(&s);
        assert_eq!(s.group_order(), &BigUint::from(27u64 * (27 * 27 - 1)));
    }

    #[test]
    fn product_spectra() {
        let c3 = OrderSpectrum::cyclic(3);
        let c9 = OrderSpectrum::cyclic(9);
        let prod = OrderSpectrum::product(&c3, &c9);
        assert_eq!(prod, from_pairs(27, &[(1, 1), (3, 8), (9, 18)]));
        assert_eq!(
            prod,
            OrderSpectrum::bruteforce(&realize("product:cyclic:3+cyclic:9"))
        );

        let klein = OrderSpectrum::product(&OrderSpectrum::cyclic(2), &OrderSpectrum::cyclic(2));
        assert_eq!(klein, from_pairs(4, &[(1, 1), (2, 3)]));

        // Identity: multiplying by the trivial spectrum changes nothing.
        let triv = OrderSpectrum::cyclic(1);
        assert_eq!(OrderSpectrum::product(&c9, &triv), c9);

        let d4s4 = OrderSpectrum::product(
            &OrderSpectrum::dihedral(4),
            &OrderSpectrum::symmetric(4),
        );
        assert_well_formed(&d4s4);
        assert_eq!(
            d4s4,
            OrderSpectrum::bruteforce(&realize("product:dihedral:4+symmetric:4"))
        );
    }

    #[test]
    fn heisenberg_spectrum_by_brute_force() {
        let s = OrderSpectrum::bruteforce(&realize("heisenberg:3"));
        assert_eq!(s, from_pairs(27, &[(1, 1), (3, 26)]));
        let s5 = OrderSpectrum::bruteforce(&realize("heisenberg:5"));
        assert_eq!(s5, from_pairs(125, &[(1, 1), (5, 124)]));
    }

    #[test]
    fn count_order_at_least_examples() {
        let c8 = OrderSpectrum::cyclic(8);
        assert_eq!(c8.count_order_at_least(4), BigUint::from(6u32));
        assert_eq!(c8.count_order_at_least(1), BigUint::from(8u32));
        assert_eq!(c8.count_order_at_least(9), BigUint::zero());
        let q8 = from_pairs(8, &[(1, 1), (2, 1), (4, 6)]);
        assert_eq!(q8.count_order_at_least(4), BigUint::from(6u32));
        assert_eq!(q8.count_order_at_least(3), BigUint::from(6u32));
    }

    #[test]
    fn spec_dispatch() {
        let of = |s: &str| OrderSpectrum::of_spec(&GroupSpec::parse(s).unwrap());
        assert_eq!(of("cyclic:12").unwrap(), OrderSpectrum::cyclic(12));
        assert_eq!(of("dihedral:5").unwrap(), OrderSpectrum::dihedral(5));
        assert_eq!(of("symmetric:9").unwrap(), OrderSpectrum::symmetric(9));
        assert_eq!(of("sl2:9").unwrap(), OrderSpectrum::sl2(9).unwrap());
        assert_eq!(
            of("product:cyclic:4+cyclic:6").unwrap(),
            OrderSpectrum::product(&OrderSpectrum::cyclic(4), &OrderSpectrum::cyclic(6))
        );
        assert_eq!(
            of("heisenberg:3").unwrap(),
            OrderSpectrum::bruteforce(&realize("heisenberg:3"))
        );
        // Closed forms reach past the realization budgets.
        assert_eq!(
            *of("symmetric:40").unwrap().group_order(),
            (1..=40u64).map(BigUint::from).product()
        );
        for bad in ["cyclic:0", "dihedral:2", "symmetric:41", "sl2:4"] {
            assert!(matches!(
                of(bad),
                Err(GroupError::UnsupportedParameter(_))
            ));
        }
    }

    #[test]
    fn partition_enumeration() {
        let mut seen = Vec::new();
        for_each_partition(4, |p| seen.push(p.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        let mut count = 0u64;
        for_each_partition(10, |_| count += 1);
        assert_eq!(count, 42);
        count = 0;
        for_each_partition(40, |p| {
            debug_assert!(p.windows(2).all(|w| w[0] >= w[1]));
            count += 1;
        });
        assert_eq!(count, 37338);
    }
}
