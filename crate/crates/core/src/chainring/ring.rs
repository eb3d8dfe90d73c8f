use crate::error::{Error, Result};

/// Largest supported modulus (exclusive). Products of two reduced elements
/// then fit in a `u64` without overflow.
pub const MODULUS_BOUND: u64 = 1 << 31;

/// The truncated valuation ring `Z/p^n`.
///
/// Elements are plain `u64` values kept canonically reduced to `[0, p^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    p: u64,
    n: u32,
    modulus: u64,
    // p^n - 1 when p = 2, zero otherwise; lets reduction avoid a division.
    mask: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut modulus: u64 = 1;
        for _ in 0..n {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m < MODULUS_BOUND)
                .ok_or(Error::RingTooLarge { p, n })?;
        }
        let mask = if p == 2 { modulus - 1 } else { 0 };
        Ok(RingSpec {
            p,
            n,
            modulus,
            mask,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Length of the ring, i.e. the exponent `n` in `p^n`.
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^k`; saturates to `0 = p^n` in the ring for `k >= n`.
    #[inline]
    pub fn pow(&self, k: u32) -> u64 {
        if k >= self.n {
            0
        } else {
            self.p.pow(k)
        }
    }

    /// `p^k` as an integer, without reduction. Valid for `k <= n`.
    #[inline]
    pub fn int_pow(&self, k: u32) -> u64 {
        debug_assert!(k <= self.n);
        self.p.pow(k)
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        if self.mask != 0 {
            x & self.mask
        } else {
            x % self.modulus
        }
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    /// Largest `v` with `p^v | x`; `n` for `x = 0`.
    pub fn valuation(&self, x: u64) -> u32 {
        let mut x = self.reduce(x);
        if x == 0 {
            return self.n;
        }
        let mut v = 0;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, x: u64) -> bool {
        !self.reduce(x).is_multiple_of(self.p)
    }

    pub fn unit_inverse(&self, x: u64) -> Result<u64> {
        let x = self.reduce(x);
        if x.is_multiple_of(self.p) {
            return Err(Error::NonUnit {
                value: x,
                modulus: self.modulus,
            });
        }
        let (mut r0, mut r1) = (self.modulus as i64, x as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(s0))
    }

    /// Splits a nonzero `x` as `p^v * u` with `u` a unit, returning `(v, u)`.
    /// The unit is reduced modulo `p^n`; it is only determined modulo
    /// `p^(n-v)` and the representative `x / p^v` is used.
    pub fn split_unit(&self, x: u64) -> (u32, u64) {
        let v = self.valuation(x);
        if v == self.n {
            return (v, 0);
        }
        (v, self.reduce(x) / self.p.pow(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large_moduli() {
        assert_eq!(RingSpec::new(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(RingSpec::new(1, 2), Err(Error::NotPrime(1)));
        assert_eq!(RingSpec::new(2, 0), Err(Error::ZeroLength));
        assert!(RingSpec::new(2, 30).is_ok());
        assert_eq!(
            RingSpec::new(2, 31),
            Err(Error::RingTooLarge { p: 2, n: 31 })
        );
        assert!(RingSpec::new(65521, 1).is_ok());
        assert!(RingSpec::new(65521, 2).is_err());
    }

    #[test]
    fn valuation_examples() {
        let r = RingSpec::new(2, 3).unwrap();
        assert_eq!(r.valuation(4), 2);
        assert_eq!(r.valuation(0), 3);
        assert_eq!(r.valuation(3), 0);
        let r = RingSpec::new(3, 2).unwrap();
        assert_eq!(r.valuation(6), 1);
    }

    #[test]
    fn unit_inverse_examples() {
        let r = RingSpec::new(2, 3).unwrap();
        assert_eq!(r.unit_inverse(3), Ok(3));
        assert_eq!(
            r.unit_inverse(2),
            Err(Error::NonUnit {
                value: 2,
                modulus: 8
            })
        );
        let r = RingSpec::new(5, 1).unwrap();
        assert_eq!(r.unit_inverse(2), Ok(3));
    }

    #[test]
    fn every_unit_inverts() {
        for (p, n) in [(2, 5), (3, 3), (5, 2), (7, 2)] {
            let r = RingSpec::new(p, n).unwrap();
            for x in 0..r.modulus() {
                match r.unit_inverse(x) {
                    Ok(y) => assert_eq!(r.mul(x, y), 1),
                    Err(_) => assert!(r.valuation(x) > 0),
                }
            }
        }
    }
}
