use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Residue in `[0, p)`; every arithmetic helper below keeps values reduced.
pub type FieldElement = u64;

/// A prime `2 <= p <= 2^31`, so that products of two residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallPrime(u64);

pub const MAX_PRIME: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl SmallPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(SmallPrime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0));
        self.pow(a, self.0 - 2)
    }

    pub fn reduce_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce_bigint(self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.0);
        v.mod_floor(&m).to_u64().expect("residue fits in u64")
    }

    /// Scales `v` so its first nonzero entry is 1; `None` for the zero vector.
    pub fn normalize(self, v: &mut [u64]) -> Option<()> {
        let lead = v.iter().position(|&c| c != 0)?;
        let inv = self.inv(v[lead]);
        for c in v.iter_mut() {
            *c = self.mul(*c, inv);
        }
        Some(())
    }
}

impl fmt::Display for SmallPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Colon-joined serialization used in reports and on the command line.
pub fn format_point(pt: &[u64]) -> String {
    pt.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":")
}

/// Parses `"1:0:2"`, reducing each coordinate mod p and normalizing.
pub fn parse_point(text: &str, p: SmallPrime) -> Result<Vec<u64>> {
    let mut coords = Vec::new();
    for piece in text.split(':') {
        let v: i64 = piece
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("bad coordinate {piece:?}") })?;
        coords.push(p.reduce_i64(v));
    }
    if p.normalize(&mut coords).is_none() {
        return Err(Error::ZeroPoint);
    }
    Ok(coords)
}
