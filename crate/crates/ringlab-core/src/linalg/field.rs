//! Arithmetic in `F_p` for small primes `p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest modulus accepted for a [`PrimeField`].
pub const MAX_MODULUS: u32 = 251;

/// Reasons a modulus cannot back a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u32),
    TooLarge(u32),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            FieldError::TooLarge(p) => write!(f, "modulus {p} exceeds the maximum {MAX_MODULUS}"),
        }
    }
}

impl core::error::Error for FieldError {}

/// The field `F_p`, with residues stored as `u32` values in `[0, p)`.
///
/// Inverses are tabulated at construction, so all operations are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    inverses: Vec<u32>,
}

impl PrimeField {
    /// Builds `F_p`. Fails if `p` is composite or larger than
    /// [`MAX_MODULUS`].
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let mut inverses = vec![0u32; p as usize];
        for a in 1..p {
            inverses[a as usize] = inverse_mod(a, p);
        }
        Ok(Self { p, inverses })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.inverses[a as usize])
        }
    }

    /// Canonical residue of an arbitrary unsigned value.
    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    /// Canonical residue of an arbitrary signed value.
    #[inline]
    pub fn reduce_signed(&self, x: i64) -> u32 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u32
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo prime `p` via the extended Euclidean algorithm.
fn inverse_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} is not invertible mod {p}");
    (((t % p as i64) + p as i64) % p as i64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(PrimeField::new(0), Err(FieldError::NotPrime(0)));
        assert_eq!(PrimeField::new(253), Err(FieldError::TooLarge(253)));
    }

    #[test]
    fn accepts_max_modulus() {
        assert!(PrimeField::new(251).is_ok());
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(0), None);
        for a in 1..5 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn inverses_for_every_small_prime() {
        for p in [2u32, 3, 5, 7, 11, 13, 251] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "p={p} a={a}");
            }
        }
    }
}
