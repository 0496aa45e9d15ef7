//! Finite groups realized as indexed element sets with a product operation.
//!
//! Every realized group exposes elements as indices 0..order with a
//! deterministic, documented encoding per family, so graphs, spectra, and
//! catalogs built from the same descriptor are identical across runs.
//!
//! Families and encodings:
//! - cyclic n: element i is the residue i; product is addition mod n.
//! - dihedral n (order 2n): index ε·n + i encodes r^i s^ε;
//!   (r^i s^ε)(r^j s^δ) = r^(i + (−1)^ε j) s^(ε+δ).
//! - symmetric n: permutations of {0,…,n−1} in lexicographic order; index 0
//!   is the identity; (p·q)(x) = p(q(x)).
//! - sl2 q: 2×2 determinant-1 matrices over F_q, row-major [a,b,c,d], listed
//!   in lexicographic order of that tuple; field elements are base-p digit
//!   strings (see [`FieldContext`]).
//! - heisenberg p (order p³): upper unitriangular triples (x, y, z) with
//!   index x·p² + y·p + z; (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y').
//! - product: mixed-radix index over the parts, leftmost slowest.
//! - permutation closures (catalogs): breadth-first discovery order from the
//!   identity, right-multiplying by the generators in listed order.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{factorize, Factorization};

mod catalog;
mod field;

pub use catalog::{load_catalog, load_catalog_file, CatalogError};
pub use field::FieldContext;

/// Elements a permutation closure may hold before realization fails.
pub const CLOSURE_BUDGET: usize = 100_000;
/// Elements any explicit realization may hold.
pub const ORDER_BUDGET: u64 = 1_000_000;

/// Errors from descriptor parsing and group realization.
#[derive(Debug)]
pub enum GroupError {
    /// Family parameter outside the supported range.
    UnsupportedParameter(String),
    /// Unparseable group descriptor.
    BadDescriptor(String),
    /// Permutation closure grew past [`CLOSURE_BUDGET`].
    ClosureBudgetExceeded { degree: usize },
    /// Realization would hold more than [`ORDER_BUDGET`] elements.
    OrderBudgetExceeded { order: u64 },
    Catalog(CatalogError),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::UnsupportedParameter(s) => write!(f, "unsupported parameter: {s}"),
            GroupError::BadDescriptor(s) => write!(f, "bad group descriptor: {s}"),
            GroupError::ClosureBudgetExceeded { degree } => write!(
                f,
                "closure on {degree} points exceeds {CLOSURE_BUDGET} elements"
            ),
            GroupError::OrderBudgetExceeded { order } => {
                write!(f, "group order {order} exceeds budget {ORDER_BUDGET}")
            }
            GroupError::Catalog(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GroupError {}

impl From<CatalogError> for GroupError {
    fn from(e: CatalogError) -> GroupError {
        GroupError::Catalog(e)
    }
}

/// A parsed, not-yet-realized group description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Symmetric(u32),
    Sl2(u64),
    Heisenberg(u64),
    Product(Vec<GroupSpec>),
    Permutation {
        degree: u16,
        generators: Vec<Vec<u16>>,
        name: String,
    },
}

impl GroupSpec {
    /// Parses a descriptor: `cyclic:N`, `dihedral:N`, `symmetric:N`, `sl2:Q`,
    /// `heisenberg:P`, `product:SPEC+SPEC[+SPEC…]` (parts must not themselves
    /// be products), or `catalog:FILE#NAME` (loads FILE and picks NAME).
    pub fn parse(s: &str) -> Result<GroupSpec, GroupError> {
        let bad = || GroupError::BadDescriptor(s.to_string());
        if let Some(rest) = s.strip_prefix("product:") {
            let parts = rest
                .split('+')
                .map(|part| {
                    if part.starts_with("product:") {
                        Err(bad())
                    } else {
                        GroupSpec::parse(part)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            if parts.len() < 2 {
                return Err(bad());
            }
            return Ok(GroupSpec::Product(parts));
        }
        if let Some(rest) = s.strip_prefix("catalog:") {
            let (path, name) = rest.rsplit_once('#').ok_or_else(bad)?;
            let entries = load_catalog_file(path.as_ref())?;
            return entries
                .into_iter()
                .find(|(n, _)| n == name)
                .map(|(_, spec)| spec)
                .ok_or_else(|| {
                    GroupError::BadDescriptor(format!("no group named {name} in {path}"))
                });
        }
        let (family, param) = s.split_once(':').ok_or_else(bad)?;
        let n: u64 = param.parse().map_err(|_| bad())?;
        match family {
            "cyclic" => Ok(GroupSpec::Cyclic(n)),
            "dihedral" => Ok(GroupSpec::Dihedral(n)),
            "symmetric" => Ok(GroupSpec::Symmetric(u32::try_from(n).map_err(|_| bad())?)),
            "sl2" => Ok(GroupSpec::Sl2(n)),
            "heisenberg" => Ok(GroupSpec::Heisenberg(n)),
            _ => Err(bad()),
        }
    }

    /// Builds the explicit group. Validates parameters and enforces the
    /// realization budgets.
    pub fn realize(&self) -> Result<FiniteGroup, GroupError> {
        let unsupported = |msg: String| Err(GroupError::UnsupportedParameter(msg));
        match self {
            &GroupSpec::Cyclic(n) => {
                if n < 1 || n > 5000 {
                    return unsupported(format!("cyclic n = {n}, need 1 ≤ n ≤ 5000"));
                }
                FiniteGroup::build(format!("C{n}"), n, Repr::Cyclic { n })
            }
            &GroupSpec::Dihedral(n) => {
                if n < 3 || n > 5000 {
                    return unsupported(format!("dihedral n = {n}, need 3 ≤ n ≤ 5000"));
                }
                FiniteGroup::build(format!("D{n}"), 2 * n, Repr::Dihedral { n })
            }
            &GroupSpec::Symmetric(n) => {
                if n < 1 || n > 8 {
                    return unsupported(format!("symmetric n = {n}, need 1 ≤ n ≤ 8"));
                }
                let mut perms = Vec::new();
                let mut cur: Vec<u8> = (0..n as u8).collect();
                loop {
                    perms.push(cur.clone());
                    if !next_permutation(&mut cur) {
                        break;
                    }
                }
                let index = perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i as u32))
                    .collect();
                let order = perms.len() as u64;
                FiniteGroup::build(format!("S{n}"), order, Repr::Symmetric { perms, index })
            }
            &GroupSpec::Sl2(q) => {
                if q < 3 || q > 13 {
                    return unsupported(format!("sl2 q = {q}, need 3 ≤ q ≤ 13"));
                }
                let field = FieldContext::new(q)?;
                let mut mats = Vec::new();
                for a in 0..q {
                    for b in 0..q {
                        for c in 0..q {
                            for d in 0..q {
                                let det = field.sub(field.mul(a, d), field.mul(b, c));
                                if det == 1 {
                                    mats.push([a as u16, b as u16, c as u16, d as u16]);
                                }
                            }
                        }
                    }
                }
                let index = mats
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (*m, i as u32))
                    .collect();
                let order = q * (q * q - 1);
                assert_eq!(mats.len() as u64, order);
                FiniteGroup::build(format!("SL2({q})"), order, Repr::Sl2 { field, mats, index })
            }
            &GroupSpec::Heisenberg(p) => {
                if !crate::arith::is_prime(p) || p == 2 || p > 97 {
                    return unsupported(format!("heisenberg p = {p}, need an odd prime ≤ 97"));
                }
                FiniteGroup::build(format!("Heis({p})"), p * p * p, Repr::Heisenberg { p })
            }
            GroupSpec::Product(specs) => {
                let parts = specs
                    .iter()
                    .map(GroupSpec::realize)
                    .collect::<Result<Vec<_>, _>>()?;
                let mut order = 1u64;
                for g in &parts {
                    order = order
                        .checked_mul(g.order() as u64)
                        .ok_or(GroupError::OrderBudgetExceeded { order: u64::MAX })?;
                }
                let name = parts
                    .iter()
                    .map(FiniteGroup::name)
                    .collect::<Vec<_>>()
                    .join("x");
                FiniteGroup::build(name, order, Repr::Product { parts })
            }
            GroupSpec::Permutation {
                degree,
                generators,
                name,
            } => {
                let (elems, index) = close_generators(*degree, generators)?;
                let order = elems.len() as u64;
                // Composition table pays off for repeated products; only
                // build it when the quadratic cost stays small.
                let table = (elems.len() <= 4096 && *degree <= 256).then(|| {
                    let n = elems.len();
                    let mut table = vec![0u32; n * n];
                    for i in 0..n {
                        for j in 0..n {
                            let composed = compose(&elems[i], &elems[j]);
                            table[i * n + j] = index[&composed];
                        }
                    }
                    table
                });
                FiniteGroup::build(
                    name.clone(),
                    order,
                    Repr::Permutation {
                        elems,
                        index,
                        table,
                    },
                )
            }
        }
    }
}

/// (p·q)(x) = p(q(x)).
fn compose(p: &[u16], q: &[u16]) -> Vec<u16> {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Breadth-first closure of generators under right multiplication.
fn close_generators(
    degree: u16,
    gens: &[Vec<u16>],
) -> Result<(Vec<Vec<u16>>, HashMap<Vec<u16>, u32>), GroupError> {
    debug_assert!(gens.iter().all(|g| g.len() == degree as usize));
    let identity: Vec<u16> = (0..degree).collect();
    let mut elems = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0u32)]);
    let mut k = 0;
    while k < elems.len() {
        for g in gens {
            let next = compose(&elems[k], g);
            if !index.contains_key(&next) {
                if elems.len() >= CLOSURE_BUDGET {
                    return Err(GroupError::ClosureBudgetExceeded {
                        degree: degree as usize,
                    });
                }
                index.insert(next.clone(), elems.len() as u32);
                elems.push(next);
            }
        }
        k += 1;
    }
    Ok((elems, index))
}

enum Repr {
    Cyclic {
        n: u64,
    },
    Dihedral {
        n: u64,
    },
    Symmetric {
        perms: Vec<Vec<u8>>,
        index: HashMap<Vec<u8>, u32>,
    },
    Sl2 {
        field: FieldContext,
        mats: Vec<[u16; 4]>,
        index: HashMap<[u16; 4], u32>,
    },
    Heisenberg {
        p: u64,
    },
    Product {
        parts: Vec<FiniteGroup>,
    },
    Permutation {
        elems: Vec<Vec<u16>>,
        index: HashMap<Vec<u16>, u32>,
        table: Option<Vec<u32>>,
    },
}

/// An explicitly realized finite group: elements are 0..order().
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    order_factorization: Factorization,
    repr: Repr,
}

impl FiniteGroup {
    fn build(name: String, order: u64, repr: Repr) -> Result<FiniteGroup, GroupError> {
        if order > ORDER_BUDGET {
            return Err(GroupError::OrderBudgetExceeded { order });
        }
        let identity = match &repr {
            Repr::Sl2 { index, .. } => index[&[1, 0, 0, 1]] as usize,
            _ => 0,
        };
        Ok(FiniteGroup {
            name,
            order: order as usize,
            identity,
            order_factorization: factorize(order).unwrap(),
            repr,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order_factorization(&self) -> &Factorization {
        &self.order_factorization
    }

    /// Index of the product of elements x and y.
    pub fn product(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.order && y < self.order);
        match &self.repr {
            Repr::Cyclic { n } => ((x as u64 + y as u64) % n) as usize,
            Repr::Dihedral { n } => {
                let n = *n as usize;
                let (i, e) = (x % n, x / n);
                let (j, d) = (y % n, y / n);
                let rot = if e == 0 { (i + j) % n } else { (i + n - j) % n };
                rot + ((e + d) % 2) * n
            }
            Repr::Symmetric { perms, index } => {
                index[&compose_u8(&perms[x], &perms[y])] as usize
            }
            Repr::Sl2 { field, mats, index } => {
                let a = mats[x].map(u64::from);
                let b = mats[y].map(u64::from);
                let f = field;
                let m = [
                    f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
                    f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
                    f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
                    f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
                ];
                index[&m.map(|v| v as u16)] as usize
            }
            Repr::Heisenberg { p } => {
                let p = *p as usize;
                let (x1, y1, z1) = (x / (p * p), x / p % p, x % p);
                let (x2, y2, z2) = (y / (p * p), y / p % p, y % p);
                ((x1 + x2) % p) * p * p + ((y1 + y2) % p) * p + (z1 + z2 + x1 * y2) % p
            }
            Repr::Product { parts } => {
                // Mixed radix, leftmost slowest: peel from the right.
                let (mut xr, mut yr) = (x, y);
                let mut radix = 1;
                let mut acc = 0;
                for g in parts.iter().rev() {
                    let n = g.order();
                    acc += g.product(xr % n, yr % n) * radix;
                    radix *= n;
                    xr /= n;
                    yr /= n;
                }
                acc
            }
            Repr::Permutation {
                elems,
                index,
                table,
            } => match table {
                Some(t) => t[x * elems.len() + y] as usize,
                None => index[&compose(&elems[x], &elems[y])] as usize,
            },
        }
    }
}

fn compose_u8(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// x^a by binary exponentiation; a = 0 gives the identity.
pub fn element_power(g: &FiniteGroup, x: usize, a: u64) -> usize {
    let mut base = x;
    let mut acc = g.identity();
    let mut a = a;
    while a > 0 {
        if a & 1 == 1 {
            acc = g.product(acc, base);
        }
        base = g.product(base, base);
        a >>= 1;
    }
    acc
}

/// Order of element x: the least k ≥ 1 with x^k = identity.
/// Starts from |G| (Lagrange) and strips primes.
pub fn element_order(g: &FiniteGroup, x: usize) -> u64 {
    let mut k = g.order() as u64;
    for &(p, _) in g.order_factorization().prime_powers() {
        while k % p == 0 && element_power(g, x, k / p) == g.identity() {
            k /= p;
        }
    }
    debug_assert_eq!(element_power(g, x, k), g.identity());
    k
}
