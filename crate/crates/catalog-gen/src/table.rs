//! Cayley tables for groups of order ≤ 64: axiom checking, isomorphism
//! invariants, generating sequences, and regular representations.

use std::collections::{BTreeMap, HashMap};

/// Largest group order handled; element indices fit in a u8 and membership
/// sets in a u64.
pub const MAX_ORDER: usize = 64;

/// A finite group as its full multiplication table; element 0 is the
/// identity. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    n: usize,
    mul: Vec<u8>,
}

impl Table {
    /// Wraps a table whose element 0 is the identity; [`Table::is_group`]
    /// checks the axioms where it matters.
    pub fn new(n: usize, mul: Vec<u8>) -> Table {
        assert!((1..=MAX_ORDER).contains(&n) && mul.len() == n * n);
        Table { n, mul }
    }

    pub fn trivial() -> Table {
        Table::new(1, vec![0])
    }

    /// Cyclic group as addition mod n.
    pub fn cyclic(n: usize) -> Table {
        let mut mul = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = ((i + j) % n) as u8;
            }
        }
        Table::new(n, mul)
    }

    /// Closure of permutation generators under composition
    /// (p·q)(x) = p(q(x)); element 0 is the identity permutation.
    pub fn from_permutations(degree: usize, gens: &[Vec<u8>]) -> Table {
        for g in gens {
            assert_eq!(g.len(), degree);
            let mut seen = vec![false; degree];
            for &img in g {
                assert!(!seen[img as usize], "generator is not a permutation");
                seen[img as usize] = true;
            }
        }
        let compose = |p: &[u8], q: &[u8]| -> Vec<u8> {
            (0..degree).map(|x| p[q[x] as usize]).collect()
        };
        let mut elems: Vec<Vec<u8>> = vec![(0..degree as u8).collect()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut pos = 0;
        while pos < elems.len() {
            for g in gens {
                let prod = compose(g, &elems[pos]);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
            pos += 1;
        }
        let n = elems.len();
        assert!(n <= MAX_ORDER, "closure has {n} elements");
        let mut mul = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&compose(&elems[i], &elems[j])] as u8;
            }
        }
        Table::new(n, mul)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.n)
            .find(|&y| self.mul(x, y) == 0)
            .expect("row contains the identity")
    }

    /// Full axiom check: entries in range, identity at 0, Latin rows and
    /// columns, associativity. Latin + identity + associativity imply
    /// inverses.
    pub fn is_group(&self) -> bool {
        let n = self.n;
        if self.mul.iter().any(|&v| v as usize >= n) {
            return false;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return false;
            }
            let (mut row, mut col) = (0u64, 0u64);
            for y in 0..n {
                row |= 1 << self.mul(x, y);
                col |= 1 << self.mul(y, x);
            }
            if row != full || col != full {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut p = x;
        let mut k = 1;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// Conjugacy class id per element plus the size of each class.
    pub fn conjugacy(&self) -> (Vec<u8>, Vec<u32>) {
        let n = self.n;
        let inv: Vec<usize> = (0..n).map(|x| self.inverse(x)).collect();
        let mut class = vec![u8::MAX; n];
        let mut sizes: Vec<u32> = Vec::new();
        for x in 0..n {
            if class[x] != u8::MAX {
                continue;
            }
            let id = sizes.len() as u8;
            let mut members = 0u32;
            for g in 0..n {
                let y = self.mul(self.mul(g, x), inv[g]);
                if class[y] == u8::MAX {
                    class[y] = id;
                    members += 1;
                }
            }
            sizes.push(members);
        }
        (class, sizes)
    }

    /// Elements of the derived subgroup: the closure of all commutators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.n;
        let inv: Vec<usize> = (0..n).map(|x| self.inverse(x)).collect();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut list = vec![0usize];
        for x in 0..n {
            for y in 0..n {
                let c = self.mul(self.mul(inv[x], inv[y]), self.mul(x, y));
                if !seen[c] {
                    seen[c] = true;
                    list.push(c);
                }
            }
        }
        let mut pos = 0;
        while pos < list.len() {
            let x = list[pos];
            let mut q = 0;
            while q < list.len() {
                for prod in [self.mul(x, list[q]), self.mul(list[q], x)] {
                    if !seen[prod] {
                        seen[prod] = true;
                        list.push(prod);
                    }
                }
                q += 1;
            }
            pos += 1;
        }
        list
    }

    /// Greedy generating sequence: repeatedly adjoin the highest-order
    /// element outside the closure so far, ties to the smallest index.
    /// Empty for the trivial group.
    pub fn minimal_gens(&self) -> Vec<usize> {
        let n = self.n;
        let orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let mut gens = Vec::new();
        let mut in_sub = vec![false; n];
        in_sub[0] = true;
        let mut elems = vec![0usize];
        while elems.len() < n {
            let g = (0..n)
                .filter(|&x| !in_sub[x])
                .max_by_key(|&x| (orders[x], std::cmp::Reverse(x)))
                .unwrap();
            gens.push(g);
            let mut pos = 0;
            while pos < elems.len() {
                for &h in &gens {
                    let y = self.mul(elems[pos], h);
                    if !in_sub[y] {
                        in_sub[y] = true;
                        elems.push(y);
                    }
                }
                pos += 1;
            }
        }
        gens
    }

    /// Left-regular permutation of g: x ↦ g·x. Rows compose the same way as
    /// the group: row(g)∘row(h) = row(g·h) under (p·q)(x) = p(q(x)).
    pub fn regular_row(&self, g: usize) -> Vec<u8> {
        (0..self.n).map(|x| self.mul(g, x) as u8).collect()
    }
}

/// Isomorphism-invariant data: a canonical fingerprint for bucketing and a
/// per-element key for pruning backtracking searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub fingerprint: Vec<u32>,
    pub keys: Vec<u32>,
}

/// Per-element key (order, conjugacy class size, order of the square) and a
/// fingerprint built from the key histogram over the whole group and over
/// the derived subgroup, plus class count, center size, and derived size.
pub fn invariants(t: &Table) -> Invariants {
    let n = t.order();
    let orders: Vec<usize> = (0..n).map(|x| t.element_order(x)).collect();
    let (class, sizes) = t.conjugacy();
    let keys: Vec<u32> = (0..n)
        .map(|x| {
            let sq = t.mul(x, x);
            orders[x] as u32 | (sizes[class[x] as usize] << 8) | ((orders[sq] as u32) << 16)
        })
        .collect();
    let derived = t.derived_subgroup();
    let center = sizes.iter().filter(|&&s| s == 1).count();
    let mut fingerprint = vec![
        n as u32,
        sizes.len() as u32,
        center as u32,
        derived.len() as u32,
    ];
    let mut hist: BTreeMap<u32, u32> = BTreeMap::new();
    for &k in &keys {
        *hist.entry(k).or_insert(0) += 1;
    }
    fingerprint.push(hist.len() as u32);
    for (k, c) in &hist {
        fingerprint.extend([*k, *c]);
    }
    hist.clear();
    for &x in &derived {
        *hist.entry(keys[x]).or_insert(0) += 1;
    }
    fingerprint.push(hist.len() as u32);
    for (k, c) in &hist {
        fingerprint.extend([*k, *c]);
    }
    Invariants { fingerprint, keys }
}
