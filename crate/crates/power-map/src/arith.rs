//! Multiplicative number theory over u64: factorization, Euler φ, Carmichael
//! λ, multiplicative orders, and exact rational arithmetic.
//!
//! Everything here is exact. Factorization combines trial division,
//! deterministic Miller–Rabin, and Brent's variant of Pollard rho with a
//! deterministic parameter sequence, so results are reproducible and correct
//! for the full u64 range.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Errors from arithmetic routines with nontrivial domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// 0 has no prime factorization.
    ZeroFactorization,
    /// The base shares a factor with the modulus, so no power of it is 1.
    NotCoprime { a: u64, n: u64 },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::ZeroFactorization => write!(f, "0 cannot be factorized"),
            ArithError::NotCoprime { a, n } => write!(f, "{a} is not coprime to {n}"),
        }
    }
}

impl std::error::Error for ArithError {}

/// Greatest common divisor; gcd(0, n) = n.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; panics on u64 overflow. lcm(0, n) = 0.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflows u64")
}

/// (a * b) mod m without overflow.
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// (base ^ exp) mod m by binary exponentiation; mod_pow(_, 0, m) = 1 mod m.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This witness set decides primality for every n < 2^64 (Sinclair).
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Brent-cycle Pollard rho: a nontrivial factor of odd composite n.
/// Parameters come from a splitmix64 stream seeded by n, so the factor found
/// is the same on every run.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n & 1 == 1 && n > 3 && !is_prime(n));
    let mut seed = n ^ 0x5851f42d4c957f2d;
    loop {
        let c = splitmix64(&mut seed) % (n - 2) + 1;
        let step = |x: u64| (mod_mul(x, x, n) + c) % n;
        let mut y = splitmix64(&mut seed) % n;
        let (mut q, mut g) = (1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        let mut r = 1usize;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = step(y);
                    q = mod_mul(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r <<= 1;
        }
        if g == n {
            // Batch overshot; redo the last block one gcd at a time.
            g = 1;
            while g == 1 {
                ys = step(ys);
                g = gcd(x.abs_diff(ys), n);
            }
        }
        if g != n {
            return g;
        }
    }
}

/// A positive integer as its sorted list of (prime, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored integer itself.
    pub fn value(&self) -> u64 {
        self.n
    }

    /// (prime, exponent) pairs in increasing prime order; empty for n = 1.
    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let prev = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..prev {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// φ(n) = n ∏ (1 − 1/p).
    pub fn euler_phi(&self) -> u64 {
        let mut phi = self.n;
        for &(p, _) in &self.pairs {
            phi = phi / p * (p - 1);
        }
        phi
    }

    /// λ(n): the exponent of the unit group mod n.
    pub fn carmichael_lambda(&self) -> u64 {
        let mut l = 1u64;
        for &(p, e) in &self.pairs {
            let le = if p == 2 {
                match e {
                    1 => 1,
                    2 => 2,
                    _ => 1u64 << (e - 2),
                }
            } else {
                // λ(p^e) = φ(p^e) for odd p.
                p.pow(e - 1) * (p - 1)
            };
            l = lcm(l, le);
        }
        l
    }
}

/// Full prime factorization of n ≥ 1.
pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroFactorization);
    }
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    for p in 2..1000u64 {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
    }
    // m now has no prime factor below 1000; split the rest with rho.
    let mut stack = Vec::new();
    if m > 1 {
        stack.push(m);
    }
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            match pairs.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => pairs.push((m, 1)),
            }
        } else if let Some(r) = perfect_root(m) {
            stack.push(r.0);
            for _ in 1..r.1 {
                stack.push(r.0);
            }
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    pairs.sort_unstable();
    Ok(Factorization { n, pairs })
}

/// Largest k with n = r^k for some r, returned as (r, k); None when k = 1.
fn perfect_root(n: u64) -> Option<(u64, u32)> {
    for k in [2u32, 3, 5, 7] {
        let r = (n as f64).powf(1.0 / k as f64).round() as u64;
        for r in r.saturating_sub(1)..=r + 1 {
            if r > 1 && r.checked_pow(k).is_some_and(|v| v == n) {
                return Some((r, k));
            }
        }
    }
    None
}

/// φ(n) for n ≥ 1.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n).expect("phi needs n >= 1").euler_phi()
}

/// λ(n) for n ≥ 1.
pub fn carmichael_lambda(n: u64) -> u64 {
    factorize(n).expect("lambda needs n >= 1").carmichael_lambda()
}

/// Least t ≥ 1 with a^t ≡ 1 (mod n); requires gcd(a, n) = 1.
/// Computed by stripping primes from λ(n), so it stays fast for n near 10^12.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64, ArithError> {
    if n == 1 {
        return Ok(1);
    }
    let a = a % n;
    if gcd(a, n) != 1 {
        return Err(ArithError::NotCoprime { a, n });
    }
    let lambda = carmichael_lambda(n);
    let mut t = lambda;
    for &(p, _) in factorize(lambda).unwrap().prime_powers() {
        while t % p == 0 && mod_pow(a, t / p, n) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// Largest divisor of n coprime to a; coprime_part(n, 1) = n.
pub fn coprime_part(n: u64, a: u64) -> u64 {
    assert!(n >= 1 && a >= 1);
    let mut m = n;
    loop {
        let g = gcd(m, a);
        if g == 1 {
            return m;
        }
        m /= g;
    }
}

/// Verdict and both sides of the order lower bound
/// ord_n(a) ≥ (λ(n)/n) ∏_{p | n} ord_p(a), for gcd(a, n) = 1.
#[derive(Debug, Clone)]
pub struct OrderBound {
    pub holds: bool,
    pub order: ExactRational,
    pub bound: ExactRational,
}

/// Evaluates the order lower bound exactly; requires gcd(a, n) = 1, n ≥ 1.
pub fn check_order_lower_bound(a: u64, n: u64) -> Result<OrderBound, ArithError> {
    if n > 1 && gcd(a % n, n) != 1 {
        return Err(ArithError::NotCoprime { a: a % n, n });
    }
    let fact = factorize(n)?;
    let order = ExactRational::from_u64(multiplicative_order(a, n)?);
    let mut bound = ExactRational::new(fact.carmichael_lambda().into(), n.into());
    for &(p, _) in fact.prime_powers() {
        bound = &bound * &ExactRational::from_u64(multiplicative_order(a, p)?);
    }
    Ok(OrderBound {
        holds: order >= bound,
        order,
        bound,
    })
}

/// Smallest-prime-factor sieve for bulk factorization below a fixed limit.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Sieve of smallest prime factors for 2..=limit.
    pub fn new(limit: usize) -> SpfSieve {
        let mut spf = vec![0u32; limit + 1];
        let mut i = 2usize;
        while i <= limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Factorization of 1 ≤ n ≤ limit by repeated spf division.
    pub fn factorize(&self, n: u64) -> Factorization {
        assert!(n >= 1 && n <= self.limit());
        let mut pairs = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m];
            let mut e = 0;
            while m as u32 % p == 0 {
                m /= p as usize;
                e += 1;
            }
            pairs.push((p as u64, e));
        }
        pairs.sort_unstable();
        Factorization { n, pairs }
    }
}

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// num/den reduced; panics if den = 0.
    pub fn new(num: BigInt, den: BigInt) -> ExactRational {
        assert!(!den.is_zero(), "zero denominator");
        let r = ExactRational(BigRational::new(num, den));
        debug_assert!(r.0.denom().is_positive());
        r
    }

    pub fn zero() -> ExactRational {
        ExactRational(BigRational::zero())
    }

    pub fn from_u64(n: u64) -> ExactRational {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> ExactRational {
        ExactRational(BigRational::from_integer(n))
    }

    pub fn from_biguint(n: BigUint) -> ExactRational {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: u64, den: u64) -> ExactRational {
        ExactRational::new(num.into(), den.into())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as a BigInt when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for ExactRational {
    /// Renders as `p/q`, or just `p` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &ExactRational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &ExactRational) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 + &rhs.0)
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 - &rhs.0)
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(a: u64, n: u64) -> u64 {
        let mut x = a % n;
        let mut t = 1;
        while x != 1 % n {
            x = mod_mul(x, a, n);
            t += 1;
        }
        t
    }

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    fn brute_lambda(n: u64) -> u64 {
        (1..=n)
            .filter(|&a| gcd(a, n) == 1)
            .fold(1, |l, a| lcm(l, brute_order(a, n)))
    }

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(0, 3), 0);
        assert_eq!(lcm(7, 7), 7);
    }

    #[test]
    fn prime_tests() {
        let sieve = SpfSieve::new(100_000);
        for n in 0..=100_000u64 {
            assert_eq!(is_prime(n), n >= 2 && sieve.is_prime(n), "n = {n}");
        }
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime(561)); // Carmichael
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(!is_prime(18_446_744_073_709_551_615));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(0), Err(ArithError::ZeroFactorization));
        assert_eq!(factorize(1).unwrap().prime_powers(), &[]);
        assert_eq!(factorize(10).unwrap().prime_powers(), &[(2, 1), (5, 1)]);
        assert_eq!(
            factorize(360).unwrap().prime_powers(),
            &[(2, 3), (3, 2), (5, 1)]
        );
        // 999983 and 1000003 both exceed the trial-division bound.
        assert_eq!(
            factorize(999_983 * 1_000_003).unwrap().prime_powers(),
            &[(999_983, 1), (1_000_003, 1)]
        );
        assert_eq!(
            factorize(1_000_003u64.pow(2)).unwrap().prime_powers(),
            &[(1_000_003, 2)]
        );
        assert_eq!(
            factorize(10u64.pow(12)).unwrap().prime_powers(),
            &[(2, 12), (5, 12)]
        );
    }

    #[test]
    fn factorize_matches_sieve() {
        let sieve = SpfSieve::new(20_000);
        for n in 1..=20_000u64 {
            assert_eq!(factorize(n).unwrap(), sieve.factorize(n));
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(factorize(1).unwrap().divisors(), vec![1]);
        assert_eq!(factorize(10).unwrap().divisors(), vec![1, 2, 5, 10]);
        assert_eq!(
            factorize(12).unwrap().divisors(),
            vec![1, 2, 3, 4, 6, 12]
        );
        let d360 = factorize(360).unwrap().divisors();
        assert_eq!(d360.len(), 24);
        assert!(d360.windows(2).all(|w| w[0] < w[1]));
        assert!(d360.iter().all(|d| 360 % d == 0));
    }

    #[test]
    fn phi_examples_and_oracle() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(360), 96);
        for n in 1..=2000 {
            assert_eq!(euler_phi(n), brute_phi(n), "phi({n})");
        }
    }

    #[test]
    fn phi_sums_over_divisors() {
        // ∑_{d | n} φ(d) = n.
        let sieve = SpfSieve::new(10_000);
        for n in 1..=10_000u64 {
            let total: u64 = sieve.factorize(n).divisors().iter().map(|&d| euler_phi(d)).sum();
            assert_eq!(total, n);
        }
    }

    #[test]
    fn lambda_examples_and_oracle() {
        assert_eq!(carmichael_lambda(1), 1);
        assert_eq!(carmichael_lambda(2), 1);
        assert_eq!(carmichael_lambda(4), 2);
        assert_eq!(carmichael_lambda(8), 2);
        assert_eq!(carmichael_lambda(16), 4);
        assert_eq!(carmichael_lambda(15), 4);
        for n in 1..=2000 {
            assert_eq!(carmichael_lambda(n), brute_lambda(n), "lambda({n})");
        }
    }

    #[test]
    fn lambda_divides_phi_and_is_divisor_monotone() {
        for n in 1..=10_000u64 {
            assert_eq!(euler_phi(n) % carmichael_lambda(n), 0);
        }
        for n in 1..=2000u64 {
            let ln = carmichael_lambda(n);
            for d in factorize(n).unwrap().divisors() {
                assert_eq!(ln % carmichael_lambda(d), 0, "lambda({d}) | lambda({n})");
            }
        }
    }

    #[test]
    fn phi_over_lambda_is_divisor_monotone() {
        // φ(d)/λ(d) divides φ(n)/λ(n) whenever d | n.
        for n in 1..=3000u64 {
            let qn = euler_phi(n) / carmichael_lambda(n);
            for d in factorize(n).unwrap().divisors() {
                let qd = euler_phi(d) / carmichael_lambda(d);
                assert_eq!(qn % qd, 0, "d = {d}, n = {n}");
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 7), Ok(3));
        assert_eq!(multiplicative_order(2, 5), Ok(4));
        assert_eq!(multiplicative_order(2, 15), Ok(4));
        assert_eq!(multiplicative_order(10, 3), Ok(1));
        assert_eq!(multiplicative_order(9, 1), Ok(1));
        assert_eq!(
            multiplicative_order(2, 4),
            Err(ArithError::NotCoprime { a: 2, n: 4 })
        );
        // ord_{2^k}(3) = 2^(k-2) for k ≥ 3.
        assert_eq!(multiplicative_order(3, 1 << 40), Ok(1 << 38));
    }

    #[test]
    fn order_matches_brute_force_and_is_minimal() {
        for n in 2..=300u64 {
            for a in 1..=30u64 {
                if gcd(a % n, n) != 1 {
                    assert!(multiplicative_order(a, n).is_err());
                    continue;
                }
                let t = multiplicative_order(a, n).unwrap();
                assert_eq!(t, brute_order(a, n), "a = {a}, n = {n}");
                assert_eq!(mod_pow(a, t, n), 1 % n);
                for &(p, _) in factorize(t).unwrap().prime_powers() {
                    assert_ne!(mod_pow(a, t / p, n), 1 % n);
                }
            }
        }
    }

    #[test]
    fn order_of_lcm_modulus() {
        // ord_{lcm(d,d')}(a) = lcm(ord_d(a), ord_{d'}(a)), hence
        // ord_d(a) · ord_{d'}(a) ≥ ord_{dd'/gcd(d,d')}(a).
        for a in [2u64, 3, 10] {
            let mut ords: Vec<Option<u64>> = vec![None; 201];
            for d in 1..=200u64 {
                if gcd(a % d, d) == 1 {
                    ords[d as usize] = Some(multiplicative_order(a, d).unwrap());
                }
            }
            for d in 1..=200u64 {
                for dp in d..=200u64 {
                    let (Some(od), Some(odp)) = (ords[d as usize], ords[dp as usize]) else {
                        continue;
                    };
                    let m = d / gcd(d, dp) * dp;
                    let om = multiplicative_order(a, m).unwrap();
                    assert_eq!(om, lcm(od, odp));
                    assert!(od * odp >= om, "a = {a}, d = {d}, d' = {dp}");
                }
            }
        }
    }

    #[test]
    fn coprime_part_examples() {
        assert_eq!(coprime_part(10, 2), 5);
        assert_eq!(coprime_part(24, 3), 8);
        assert_eq!(coprime_part(8, 6), 1);
        assert_eq!(coprime_part(45, 1), 45);
        assert_eq!(coprime_part(1, 7), 1);
        for n in 1..=500u64 {
            for a in 1..=20u64 {
                let m = coprime_part(n, a);
                assert_eq!(gcd(m, a), 1);
                assert_eq!(n % m, 0);
                // Maximality: the cofactor carries only primes of a.
                assert_eq!(coprime_part(n / m, a), 1);
            }
        }
    }

    #[test]
    fn order_lower_bound_examples() {
        let w = check_order_lower_bound(2, 15).unwrap();
        assert!(w.holds);
        assert_eq!(w.order, ExactRational::from_u64(4));
        assert_eq!(w.bound, ExactRational::ratio(32, 15));

        let w = check_order_lower_bound(2, 7).unwrap();
        assert!(w.holds);
        assert_eq!(w.order, ExactRational::from_u64(3));
        assert_eq!(w.bound, ExactRational::ratio(18, 7));

        let w = check_order_lower_bound(5, 1).unwrap();
        assert!(w.holds);
        assert_eq!(w.order, w.bound);

        assert!(check_order_lower_bound(6, 15).is_err());
    }

    #[test]
    fn order_lower_bound_holds_on_domain() {
        for a in [2u64, 3, 5, 10] {
            for n in 1..=500u64 {
                if n > 1 && gcd(a % n, n) != 1 {
                    continue;
                }
                assert!(check_order_lower_bound(a, n).unwrap().holds, "a = {a}, n = {n}");
            }
        }
    }

    #[test]
    fn rational_reduction_and_render() {
        let r = ExactRational::new(6.into(), (-4).into());
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(ExactRational::ratio(17, 5).to_string(), "17/5");
        assert_eq!(ExactRational::ratio(8, 2).to_string(), "4");
        assert_eq!(ExactRational::zero().to_string(), "0");
        assert!(ExactRational::ratio(8, 2).is_integer());
        assert_eq!(
            ExactRational::ratio(8, 2).to_integer(),
            Some(BigInt::from(4))
        );
        assert_eq!(ExactRational::ratio(17, 5).to_integer(), None);
    }

    #[test]
    fn rational_arithmetic() {
        let a = ExactRational::ratio(1, 6);
        let b = ExactRational::ratio(1, 3);
        assert_eq!(&a + &b, ExactRational::ratio(1, 2));
        assert_eq!(&a * &b, ExactRational::ratio(1, 18));
        assert_eq!(&b - &a, a);
        assert!(a < b);
        let mut acc = ExactRational::zero();
        for _ in 0..6 {
            acc += &a;
        }
        assert_eq!(acc, ExactRational::from_u64(1));
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn rational_rejects_zero_denominator() {
        let _ = ExactRational::new(1.into(), 0.into());
    }
}
