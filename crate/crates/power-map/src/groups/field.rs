//! Small finite fields F_q for odd prime powers q = p^c.
//!
//! Field elements are encoded as integers in 0..q read as base-p digit
//! strings: the element Σ cᵢ tⁱ (t the class of x in F_p[x]/(m)) is the
//! integer Σ cᵢ pⁱ. The reduction polynomial m is the monic irreducible of
//! degree c whose non-leading coefficient string, read as an integer the same
//! way, is smallest — for F_9 that is x² + 1.

use super::GroupError;
use crate::arith::factorize;

const MAX_DEG: usize = 7;

/// Arithmetic context for one field F_q; all ops take packed elements.
pub struct FieldContext {
    p: u64,
    deg: u32,
    q: u64,
    /// Little-endian coefficients c_0..c_deg of the reduction polynomial,
    /// c_deg = 1; `[0, 1]` (the polynomial x) in the prime-field case.
    reduction: Vec<u64>,
    add_table: Vec<u16>,
    mul_table: Vec<u16>,
}

impl FieldContext {
    /// Builds F_q; q must be an odd prime power (and small enough to
    /// tabulate: q ≤ 1000).
    pub fn new(q: u64) -> Result<FieldContext, GroupError> {
        let err = |msg: String| GroupError::UnsupportedParameter(msg);
        if q < 3 || q > 1000 {
            return Err(err(format!("field size {q} out of range")));
        }
        let fact = factorize(q).unwrap();
        let [(p, deg)] = fact.prime_powers() else {
            return Err(err(format!("field size {q} is not a prime power")));
        };
        let (p, deg) = (*p, *deg);
        if p == 2 {
            return Err(err(format!("field size {q} is even")));
        }
        let reduction = if deg == 1 {
            vec![0, 1]
        } else {
            find_reduction_polynomial(p, deg)
        };
        let mut ctx = FieldContext {
            p,
            deg,
            q,
            reduction,
            add_table: Vec::new(),
            mul_table: Vec::new(),
        };
        let mut add_table = vec![0u16; (q * q) as usize];
        let mut mul_table = vec![0u16; (q * q) as usize];
        for x in 0..q {
            for y in 0..q {
                add_table[(x * q + y) as usize] = ctx.add_slow(x, y) as u16;
                mul_table[(x * q + y) as usize] = ctx.mul_slow(x, y) as u16;
            }
        }
        ctx.add_table = add_table;
        ctx.mul_table = mul_table;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// c_0..c_deg of the monic reduction polynomial.
    pub fn reduction_coefficients(&self) -> &[u64] {
        &self.reduction
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        self.add_table[(x * self.q + y) as usize] as u64
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        self.mul_table[(x * self.q + y) as usize] as u64
    }

    pub fn neg(&self, x: u64) -> u64 {
        let digits = self.unpack(x);
        self.pack(digits.map(|d| (self.p - d) % self.p))
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    fn unpack(&self, mut x: u64) -> [u64; MAX_DEG] {
        let mut digits = [0u64; MAX_DEG];
        for d in digits.iter_mut().take(self.deg as usize) {
            *d = x % self.p;
            x /= self.p;
        }
        debug_assert_eq!(x, 0);
        digits
    }

    fn pack(&self, digits: [u64; MAX_DEG]) -> u64 {
        let mut x = 0;
        for &d in digits[..self.deg as usize].iter().rev() {
            x = x * self.p + d;
        }
        x
    }

    fn add_slow(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.unpack(x), self.unpack(y));
        let mut out = [0u64; MAX_DEG];
        for i in 0..self.deg as usize {
            out[i] = (a[i] + b[i]) % self.p;
        }
        self.pack(out)
    }

    fn mul_slow(&self, x: u64, y: u64) -> u64 {
        if self.deg == 1 {
            return x * y % self.p;
        }
        let (a, b) = (self.unpack(x), self.unpack(y));
        let deg = self.deg as usize;
        let mut prod = [0u64; 2 * MAX_DEG];
        for i in 0..deg {
            for j in 0..deg {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % self.p;
            }
        }
        // x^deg ≡ −(c_0 + c_1 x + … + c_{deg−1} x^{deg−1}).
        for i in (deg..2 * deg - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..deg {
                let neg = (self.p - self.reduction[j] % self.p) % self.p;
                prod[i - deg + j] = (prod[i - deg + j] + c * neg) % self.p;
            }
        }
        let mut out = [0u64; MAX_DEG];
        out[..deg].copy_from_slice(&prod[..deg]);
        self.pack(out)
    }
}

/// The canonical monic irreducible of degree deg over F_p: smallest when its
/// non-leading coefficients are read as a base-p integer.
fn find_reduction_polynomial(p: u64, deg: u32) -> Vec<u64> {
    assert!((2..=MAX_DEG as u32).contains(&deg));
    let deg = deg as usize;
    for code in 0..p.pow(deg as u32) {
        let mut poly = vec![0u64; deg + 1];
        let mut c = code;
        for coeff in poly.iter_mut().take(deg) {
            *coeff = c % p;
            c /= p;
        }
        poly[deg] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = vec![0u64; d + 1];
            let mut c = code;
            for coeff in divisor.iter_mut().take(d) {
                *coeff = c % p;
                c /= p;
            }
            divisor[d] = 1;
            if poly_divides(&divisor, poly, p) {
                return false;
            }
        }
    }
    true
}

/// Does monic divisor divide poly over F_p?
fn poly_divides(divisor: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let top = rem.len() - 1;
        if lead != 0 {
            for i in 0..=d {
                let idx = top - d + i;
                rem[idx] = (rem[idx] + lead * (p - divisor[i] % p)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pow(f: &FieldContext, x: u64, k: u64) -> u64 {
        let mut acc = 1;
        for _ in 0..k {
            acc = f.mul(acc, x);
        }
        acc
    }

    #[test]
    fn rejects_non_prime_powers_and_even() {
        assert!(FieldContext::new(1).is_err());
        assert!(FieldContext::new(4).is_err());
        assert!(FieldContext::new(6).is_err());
        assert!(FieldContext::new(12).is_err());
        assert!(FieldContext::new(2).is_err());
    }

    #[test]
    fn f9_uses_x_squared_plus_one() {
        let f = FieldContext::new(9).unwrap();
        assert_eq!(f.p(), 3);
        assert_eq!(f.degree(), 2);
        assert_eq!(f.reduction_coefficients(), &[1, 0, 1]);
        // t² = −1 = 2: element t packs as 3, constant 2 as 2.
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [3u64, 5, 9, 25, 27] {
            let f = FieldContext::new(q).unwrap();
            for x in 0..q {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.mul(x, 0), 0);
                assert_eq!(f.add(x, f.neg(x)), 0);
                assert_eq!(f.sub(x, x), 0);
                for y in 0..q {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in 0..q {
                        assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
                        assert_eq!(f.add(x, f.add(y, z)), f.add(f.add(x, y), z));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unit_group_has_order_q_minus_one() {
        for q in [3u64, 5, 7, 9, 13, 25, 27, 49] {
            let f = FieldContext::new(q).unwrap();
            for x in 1..q {
                assert_eq!(pow(&f, x, q - 1), 1, "x = {x}, q = {q}");
            }
            // Nonzero elements are closed under multiplication (no zero divisors).
            for x in 1..q {
                for y in 1..q {
                    assert_ne!(f.mul(x, y), 0);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for q in [9u64, 25, 27] {
            let f = FieldContext::new(q).unwrap();
            for x in 0..q {
                for y in 0..q {
                    assert_eq!(
                        pow(&f, f.add(x, y), f.p()),
                        f.add(pow(&f, x, f.p()), pow(&f, y, f.p()))
                    );
                }
            }
        }
    }
}
