//! Arithmetic in F_p and univariate polynomials over F_p.

use crate::error::{Error, Result};

/// The prime field F_p. All element values are reduced representatives in
/// [0, p).
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        debug_assert!(is_prime(p));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(
            !a.is_multiple_of(self.p),
            "division by zero in F_{}",
            self.p
        );
        self.pow(a, self.p - 2)
    }

    /// Square root by Tonelli–Shanks; `None` for nonresidues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return Some(0);
        }
        if self.p == 2 {
            return Some(a);
        }
        if self.pow(a, (self.p - 1) / 2) != 1 {
            return None;
        }
        if self.p % 4 == 3 {
            return Some(self.pow(a, (self.p + 1) / 4));
        }
        // p ≡ 1 (mod 4): full Tonelli–Shanks.
        let mut q = self.p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..self.p)
            .find(|&z| self.pow(z, (self.p - 1) / 2) == self.p - 1)
            .expect("a quadratic nonresidue exists for odd p");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// Smallest primitive root modulo p.
    pub fn primitive_root(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let factors = factorize(self.p - 1);
        (2..self.p)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&(q, _)| self.pow(g, (self.p - 1) / q) != 1)
            })
            .expect("every prime field has a primitive root")
    }

    /// A fixed primitive e-th root of unity; requires e | p − 1.
    pub fn nth_root(&self, e: u64) -> Result<u64> {
        if !(self.p - 1).is_multiple_of(e) {
            return Err(Error::Internal(format!(
                "no primitive {}-th root of unity in F_{}",
                e, self.p
            )));
        }
        Ok(self.pow(self.primitive_root(), (self.p - 1) / e))
    }
}

/// Deterministic trial-division primality (inputs stay far below 2^40).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = 7u64;
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut w = 0;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += wheel[w];
        w = (w + 1) % wheel.len();
    }
    true
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// splitmix64 step, used for deterministic pseudorandom vectors.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

// ---- polynomials over F_p (little-endian coefficients, no trailing zeros) ----

pub fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn poly_deg(f: &[u64]) -> usize {
    debug_assert!(f.last() != Some(&0));
    f.len().saturating_sub(1)
}

pub fn poly_eval(fp: &Fp, f: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = fp.add(fp.mul(acc, x), c);
    }
    acc
}

pub fn poly_mul(fp: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    poly_trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn poly_divrem(fp: &Fp, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), poly_trim(rem));
    }
    let lead_inv = fp.inv(*b.last().unwrap());
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = fp.mul(rem[i + b.len() - 1], lead_inv);
        if c != 0 {
            quot[i] = c;
            for (j, &bc) in b.iter().enumerate() {
                rem[i + j] = fp.sub(rem[i + j], fp.mul(c, bc));
            }
        }
    }
    (poly_trim(quot), poly_trim(rem))
}

/// Monic greatest common divisor.
pub fn poly_gcd(fp: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divrem(fp, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = fp.inv(lead);
            for c in &mut a {
                *c = fp.mul(*c, inv);
            }
        }
    }
    a
}

/// Monic least common multiple.
pub fn poly_lcm(fp: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let g = poly_gcd(fp, a, b);
    let (q, r) = poly_divrem(fp, a, &g);
    debug_assert!(r.is_empty());
    let mut l = poly_mul(fp, &q, b);
    let lead_inv = fp.inv(*l.last().unwrap());
    for c in &mut l {
        *c = fp.mul(*c, lead_inv);
    }
    l
}

/// All roots in F_p by direct scan (p is small by construction), ascending.
pub fn poly_roots(fp: &Fp, f: &[u64]) -> Vec<u64> {
    (0..fp.p).filter(|&x| poly_eval(fp, f, x) == 0).collect()
}
