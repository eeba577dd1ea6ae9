//! Exact arithmetic in finite fields GF(p^e) and elementary number theory.
//!
//! A [`FieldCtx`] describes a field: characteristic `p`, extension degree `e`,
//! and (for `e > 1`) a monic irreducible modulus over GF(p). Elements are
//! [`FieldElem`] values: the residue vector `(c_0, ..., c_{e-1})` packed in a
//! single `u64` as `sum c_i * p^i`, so equality of elements is equality of
//! packed values. All operations are pure; contexts are immutable.

use crate::error::{Error, Result};

/// A finite field GF(p^e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    e: u32,
    q: u64,
    /// Monic irreducible modulus over GF(p), ascending coefficients of
    /// length e + 1. Empty when e == 1.
    modulus: Vec<u64>,
}

/// An element of a finite field, canonical packed form.
///
/// The packed value is `sum c_i * p^i` for the residue vector `(c_0, ..., c_{e-1})`;
/// it is only meaningful relative to the [`FieldCtx`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }

    /// Packed representation (element index in the range `0..q`).
    pub fn packed(self) -> u64 {
        self.0
    }

    /// Element from its packed representation. The caller must ensure the
    /// value is below the field cardinality.
    pub fn from_packed(v: u64) -> FieldElem {
        FieldElem(v)
    }
}

impl FieldCtx {
    /// GF(p) for a prime p.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldCtx { p, e: 1, q: p, modulus: Vec::new() })
    }

    /// GF(p^e) for a prime p and e >= 2.
    ///
    /// The modulus is the first monic irreducible of degree e over GF(p) when
    /// coefficient vectors `(c_0, ..., c_{e-1})` are enumerated in counting
    /// order with the constant term varying fastest, so the choice is the
    /// same on every run.
    pub fn extension_field(p: u64, e: u32) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 2 {
            return Err(Error::BadExtensionDegree(e));
        }
        let q = checked_pow(p, e).ok_or(Error::BadExtensionDegree(e))?;
        let mut modulus = vec![0u64; e as usize + 1];
        modulus[e as usize] = 1;
        for k in 0..q {
            let mut v = k;
            for c in modulus.iter_mut().take(e as usize) {
                *c = v % p;
                v /= p;
            }
            if dense::is_irreducible_trial(&modulus, p) {
                return Ok(FieldCtx { p, e, q, modulus });
            }
        }
        unreachable!("an irreducible polynomial of degree {} over GF({}) exists", e, p)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Ascending coefficients of the modulus, or None for a prime field.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.e == 1 { None } else { Some(&self.modulus) }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The residue class of the modulus root, i.e. the element `g` with
    /// coordinates (0, 1, 0, ...). None for prime fields.
    pub fn generator(&self) -> Option<FieldElem> {
        if self.e == 1 { None } else { Some(FieldElem(self.p)) }
    }

    /// Canonical image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let p = self.p as i64;
        FieldElem(n.rem_euclid(p) as u64)
    }

    /// Residue vector (c_0, ..., c_{e-1}) over GF(p).
    pub fn coords(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0;
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// Element from a residue vector of length e with entries in [0, p).
    pub fn elem_from_coords(&self, coords: &[u64]) -> Result<FieldElem> {
        if coords.len() != self.e as usize {
            return Err(Error::DimensionMismatch { expected: self.e as usize, got: coords.len() });
        }
        let mut v = 0u64;
        for &c in coords.iter().rev() {
            if c >= self.p {
                return Err(Error::FieldMismatch);
            }
            v = v * self.p + c;
        }
        Ok(FieldElem(v))
    }

    /// All field elements in ascending packed order (zero first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.e == 1 {
            return FieldElem(addmod(a.0, b.0, self.p));
        }
        let (mut v, p) = (0u64, self.p);
        let (mut x, mut y) = (a.0, b.0);
        let mut mult = 1u64;
        for _ in 0..self.e {
            v += addmod(x % p, y % p, p) * mult;
            x /= p;
            y /= p;
            mult *= p;
        }
        FieldElem(v)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.e == 1 {
            return FieldElem(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut v, p) = (0u64, self.p);
        let mut x = a.0;
        let mut mult = 1u64;
        for _ in 0..self.e {
            let d = x % p;
            v += if d == 0 { 0 } else { p - d } * mult;
            x /= p;
            mult *= p;
        }
        FieldElem(v)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.e == 1 {
            return FieldElem(mulmod(a.0, b.0, self.p));
        }
        let da = self.coords(a);
        let db = self.coords(b);
        let mut prod = vec![0u64; 2 * self.e as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = addmod(prod[i + j], mulmod(x, y, self.p), self.p);
            }
        }
        dense::rem_monic(&mut prod, &self.modulus, self.p);
        let mut v = 0u64;
        for i in (0..self.e as usize).rev() {
            v = v * self.p + prod.get(i).copied().unwrap_or(0);
        }
        FieldElem(v)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.e == 1 {
            return Ok(FieldElem(inv_mod_prime(a.0, self.p)));
        }
        let da = self.coords(a);
        let inv = dense::inv_mod(&da, &self.modulus, self.p).expect("unit in a field");
        let mut v = 0u64;
        for i in (0..self.e as usize).rev() {
            v = v * self.p + inv.get(i).copied().unwrap_or(0);
        }
        Ok(FieldElem(v))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, mut n: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Human-readable form: a decimal residue for prime fields, a polynomial
    /// in the generator `g` otherwise (e.g. `g^2+2*g+1`).
    pub fn render(&self, a: FieldElem) -> String {
        if self.e == 1 {
            return a.0.to_string();
        }
        let coords = self.coords(a);
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (c, i) {
                (_, 0) => c.to_string(),
                (1, 1) => "g".to_string(),
                (1, _) => format!("g^{}", i),
                (_, 1) => format!("{}*g", c),
                (_, _) => format!("{}*g^{}", c, i),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn addmod(a: u64, b: u64, m: u64) -> u64 {
    (a + b) % m
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime and a nonzero mod p
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let quo = r0 / r1;
        (r0, r1) = (r1, r0 - quo * r1);
        (s0, s1) = (s1, s0 - quo * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut v = 1u64;
    for _ in 0..e {
        v = v.checked_mul(p)?;
    }
    Some(v)
}

/// Deterministic trial-division primality for desk-scale integers.
pub fn is_prime(n: u64) -> bool {
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

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    base %= m;
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Least d >= 1 with g^d = 1 mod n.
///
/// Computed by reducing phi(n) along its prime factors, which always yields
/// the least exponent since the set of e with g^e = 1 is the set of multiples
/// of the order, and the order divides phi(n).
pub fn multiplicative_order(g: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    if gcd(g % n, n) != 1 {
        return Err(Error::NotCoprime { g, n });
    }
    let phi = euler_phi(n);
    let mut order = phi;
    for (p, _) in factorize(phi) {
        while order.is_multiple_of(p) && pow_mod(g, order / p, n) == 1 {
            order /= p;
        }
    }
    debug_assert_eq!(pow_mod(g, order, n), 1);
    Ok(order)
}

/// True iff g generates the unit group mod m.
pub fn is_primitive_root(g: u64, m: u64) -> Result<bool> {
    Ok(multiplicative_order(g, m)? == euler_phi(m))
}

/// Ascending odd primes p <= limit for which 2 is a primitive root mod p.
pub fn primes_with_primitive_root_two(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 3u64;
    while p <= limit {
        if is_prime(p) && is_primitive_root(2, p) == Ok(true) {
            out.push(p);
        }
        p += 2;
    }
    out
}

/// Dense polynomial arithmetic over GF(p) on raw coefficient vectors
/// (ascending order). Used for moduli and extension-field inversion.
mod dense {
    pub fn deg(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    fn mulmod(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 * b as u128) % m as u128) as u64
    }

    /// Reduce `a` modulo the monic polynomial `m` in place.
    pub fn rem_monic(a: &mut Vec<u64>, m: &[u64], p: u64) {
        let dm = deg(m).expect("monic modulus is nonzero");
        while let Some(da) = deg(a) {
            if da < dm {
                break;
            }
            let lead = a[da];
            let shift = da - dm;
            for (i, &mc) in m.iter().enumerate().take(dm + 1) {
                let sub = mulmod(lead, mc, p);
                let idx = i + shift;
                a[idx] = (a[idx] + p - sub % p) % p;
            }
        }
        if let Some(d) = deg(a) {
            a.truncate(d + 1);
        } else {
            a.clear();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
            }
        }
        out
    }

    /// (quotient, remainder) with a nonzero divisor.
    fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = deg(b).expect("nonzero divisor");
        let lead_inv = super::inv_mod_prime(b[db], p);
        let mut rem = a.to_vec();
        let mut quo = vec![0u64; a.len().saturating_sub(db)];
        while let Some(dr) = deg(&rem) {
            if dr < db {
                break;
            }
            let c = mulmod(rem[dr], lead_inv, p);
            let shift = dr - db;
            quo[shift] = c;
            for (i, &bc) in b.iter().enumerate().take(db + 1) {
                let sub = mulmod(c, bc, p);
                rem[i + shift] = (rem[i + shift] + p - sub) % p;
            }
        }
        (quo, rem)
    }

    /// Inverse of `a` modulo the monic polynomial `m`, if a unit.
    pub fn inv_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        // extended Euclid: r0 = m, r1 = a
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        {
            let d = deg(&r1)?;
            r1.truncate(d + 1);
        }
        let mut t0: Vec<u64> = Vec::new();
        let mut t1: Vec<u64> = vec![1];
        while deg(&r1).is_some() {
            let (quo, rem) = divrem(&r0, &r1, p);
            let qt = mul(&quo, &t1, p);
            let mut t2 = t0.clone();
            t2.resize(t2.len().max(qt.len()), 0);
            for (i, &c) in qt.iter().enumerate() {
                t2[i] = (t2[i] + p - c) % p;
            }
            r0 = r1;
            r1 = rem;
            if let Some(d) = deg(&r1) {
                r1.truncate(d + 1);
            } else {
                r1.clear();
            }
            t0 = t1;
            t1 = t2;
        }
        // r0 is a nonzero constant gcd since m is irreducible and a != 0
        let d0 = deg(&r0)?;
        if d0 != 0 {
            return None;
        }
        let c_inv = super::inv_mod_prime(r0[0], p);
        let mut out = t0;
        for c in out.iter_mut() {
            *c = mulmod(*c, c_inv, p);
        }
        let mut reduced = out;
        rem_monic(&mut reduced, m, p);
        Some(reduced)
    }

    /// Exhaustive trial division: true iff `f` (monic, ascending) has no
    /// monic divisor of degree 1..=deg(f)/2 over GF(p). Desk scale only.
    pub fn is_irreducible_trial(f: &[u64], p: u64) -> bool {
        let df = match deg(f) {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if df == 1 {
            return true;
        }
        for d in 1..=df / 2 {
            // all monic polynomials of degree d
            let count = p.pow(d as u32);
            for k in 0..count {
                let mut div = vec![0u64; d + 1];
                div[d] = 1;
                let mut v = k;
                for c in div.iter_mut().take(d) {
                    *c = v % p;
                    v /= p;
                }
                let (_, rem) = divrem(f, &div, p);
                if deg(&rem).is_none() {
                    return false;
                }
            }
        }
        true
    }
}
