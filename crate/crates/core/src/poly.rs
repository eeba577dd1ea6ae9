//! Sparse exact polynomial arithmetic over a [`FieldCtx`]: univariate and
//! bivariate polynomials, Euclidean gcds, irreducibility by the
//! distinct-degree criterion, cyclotomic polynomials, homogenization, and
//! zerodivisor detection for linear forms on k[[x,y]]/(f).
//!
//! Arithmetic between polynomials over different fields panics; the library
//! never mixes fields, and the CLI layer validates inputs before they get
//! here.
//!
//! Conventions fixed once for reproducibility: monomials of a common degree
//! are ordered by descending x-exponent, degrees ascending for bases and
//! descending for display; "monic" means leading coefficient 1 under the
//! (total degree, then x-exponent) order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{self, FieldCtx, FieldElem};

/// Monomials x^i y^j of total degree d, x-exponent descending.
pub fn monomials_of_degree(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=d).map(move |j| (d - j, j))
}

// ---------------------------------------------------------------------------
// univariate
// ---------------------------------------------------------------------------

/// Sparse univariate polynomial over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    ctx: FieldCtx,
    coeffs: BTreeMap<usize, FieldElem>,
}

impl UniPoly {
    pub fn zero(ctx: &FieldCtx) -> UniPoly {
        UniPoly { ctx: ctx.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(ctx: &FieldCtx, c: FieldElem) -> UniPoly {
        let mut p = UniPoly::zero(ctx);
        p.set_coeff(0, c);
        p
    }

    pub fn one(ctx: &FieldCtx) -> UniPoly {
        UniPoly::constant(ctx, ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> UniPoly {
        UniPoly::monomial(ctx, 1, ctx.one())
    }

    pub fn monomial(ctx: &FieldCtx, deg: usize, c: FieldElem) -> UniPoly {
        let mut p = UniPoly::zero(ctx);
        p.set_coeff(deg, c);
        p
    }

    /// Polynomial from ascending integer coefficients, reduced into the field.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> UniPoly {
        let mut p = UniPoly::zero(ctx);
        for (d, &c) in coeffs.iter().enumerate() {
            p.set_coeff(d, ctx.from_int(c));
        }
        p
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn set_coeff(&mut self, deg: usize, c: FieldElem) {
        if c.is_zero() {
            self.coeffs.remove(&deg);
        } else {
            self.coeffs.insert(deg, c);
        }
    }

    pub fn coeff(&self, deg: usize) -> FieldElem {
        self.coeffs.get(&deg).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<FieldElem> {
        self.degree().map(|d| self.coeff(d))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, FieldElem)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    fn assert_same_field(&self, other: &UniPoly) {
        assert!(self.ctx == other.ctx, "polynomials over different fields");
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.set_coeff(d, self.ctx.add(out.coeff(d), c));
        }
        out
    }

    pub fn neg(&self) -> UniPoly {
        let mut out = UniPoly::zero(&self.ctx);
        for (d, c) in self.terms() {
            out.set_coeff(d, self.ctx.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let mut out = UniPoly::zero(&self.ctx);
        for (da, ca) in self.terms() {
            for (db, cb) in other.terms() {
                let d = da + db;
                out.set_coeff(d, self.ctx.add(out.coeff(d), self.ctx.mul(ca, cb)));
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: FieldElem) -> UniPoly {
        let mut out = UniPoly::zero(&self.ctx);
        for (d, a) in self.terms() {
            out.set_coeff(d, self.ctx.mul(a, c));
        }
        out
    }

    pub fn eval(&self, at: FieldElem) -> FieldElem {
        let mut acc = self.ctx.zero();
        for (d, c) in self.terms() {
            acc = self.ctx.add(acc, self.ctx.mul(c, self.ctx.pow(at, d as u64)));
        }
        acc
    }

    /// (quotient, remainder); the divisor must be nonzero.
    pub fn divrem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.assert_same_field(div);
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.ctx.inv(div.coeff(dd))?;
        let mut rem = self.clone();
        let mut quo = UniPoly::zero(&self.ctx);
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = self.ctx.mul(rem.coeff(dr), lead_inv);
            let shift = dr - dd;
            quo.set_coeff(shift, c);
            for (d, dc) in div.terms() {
                let idx = d + shift;
                rem.set_coeff(idx, self.ctx.sub(rem.coeff(idx), self.ctx.mul(c, dc)));
            }
        }
        Ok((quo, rem))
    }

    pub fn make_monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(l) => self.scalar_mul(self.ctx.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic(f).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self^e modulo m.
    pub fn pow_mod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.divrem(m).expect("nonzero modulus").1;
        let mut acc = UniPoly::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(m).expect("nonzero modulus").1;
            }
            base = base.mul(&base).divrem(m).expect("nonzero modulus").1;
            e >>= 1;
        }
        acc
    }

    /// Irreducibility over the coefficient field by the distinct-degree
    /// criterion: f of degree n is irreducible iff f divides x^(q^n) - x and
    /// gcd(x^(q^k) - x mod f, f) = 1 for 1 <= k <= n/2.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        if n == 1 {
            return true;
        }
        let q = self.ctx.q();
        let x = UniPoly::x(&self.ctx);
        // iterate the q-power map starting from x mod f
        let mut xq = x.divrem(self).expect("nonzero").1;
        for k in 1..=n {
            xq = xq.pow_mod(q, self);
            if k <= n / 2 {
                let g = xq.sub(&x).gcd(self);
                if g.degree() != Some(0) {
                    return false;
                }
            }
        }
        // x^(q^n) = x mod f
        xq.sub(&x).divrem(self).expect("nonzero").1.is_zero()
    }

    /// y^deg * f(x/y): each term c x^i becomes c x^i y^(deg-i).
    pub fn homogenize(&self, deg: usize) -> Result<BiPoly> {
        if let Some(d) = self.degree() {
            if deg < d {
                return Err(Error::DegreeTooSmall { needed: d, got: deg });
            }
        }
        let mut out = BiPoly::zero(&self.ctx);
        for (d, c) in self.terms() {
            out.set_coeff(d, deg - d, c);
        }
        Ok(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&d, &c) in self.coeffs.iter().rev() {
            parts.push(render_term(&self.ctx, c, &[("x", d)]));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// First monic irreducible polynomial of the given degree, scanning
/// coefficient vectors in counting order with the constant term fastest.
pub fn first_irreducible(ctx: &FieldCtx, deg: usize) -> UniPoly {
    assert!(deg >= 1);
    let q = ctx.q();
    let count = q.checked_pow(deg as u32).expect("desk-scale degree");
    for k in 0..count {
        let mut p = UniPoly::monomial(ctx, deg, ctx.one());
        let mut v = k;
        for d in 0..deg {
            p.set_coeff(d, FieldElem::from_packed(v % q));
            v /= q;
        }
        if p.is_irreducible() {
            return p;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over a finite field")
}

/// The p^m-th cyclotomic polynomial 1 + x^(p^(m-1)) + x^(2 p^(m-1)) + ...
/// + x^((p-1) p^(m-1)), reduced into ctx.
pub fn cyclotomic_prime_power(p: u64, m: u32, ctx: &FieldCtx) -> Result<UniPoly> {
    if !gf::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ctx.p() == p {
        return Err(Error::CharacteristicDividesN { p });
    }
    assert!(m >= 1, "prime-power exponent must be at least 1");
    let step = p.pow(m - 1) as usize;
    let mut out = UniPoly::zero(ctx);
    for i in 0..p as usize {
        out.set_coeff(i * step, ctx.one());
    }
    Ok(out)
}

/// The n-th cyclotomic polynomial reduced into ctx, via the exact recursion
/// x^n - 1 = prod over d | n of the d-th cyclotomic polynomial.
pub fn cyclotomic(n: u64, ctx: &FieldCtx) -> UniPoly {
    assert!(n >= 1);
    let mut memo: BTreeMap<u64, UniPoly> = BTreeMap::new();
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        // x^m - 1
        let mut num = UniPoly::monomial(ctx, m as usize, ctx.one());
        num.set_coeff(0, ctx.neg(ctx.one()));
        let mut den = UniPoly::one(ctx);
        for (&d, phi) in memo.iter() {
            if m % d == 0 {
                den = den.mul(phi);
            }
        }
        let (quo, rem) = num.divrem(&den).expect("nonzero divisor");
        debug_assert!(rem.is_zero(), "cyclotomic recursion divides exactly");
        memo.insert(m, quo);
    }
    memo.remove(&n).expect("computed")
}

/// Factorization shape of the n-th cyclotomic polynomial over GF(q):
/// it splits into phi(n)/d distinct monic irreducible factors, each of
/// degree d, where d is the multiplicative order of q mod n.
pub fn cyclotomic_factor_pattern(n: u64, q: u64) -> Result<(u64, u64)> {
    if !gf::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n == 1 {
        return Ok((1, 1));
    }
    let d = gf::multiplicative_order(q, n)?;
    Ok((d, gf::euler_phi(n) / d))
}

// ---------------------------------------------------------------------------
// bivariate
// ---------------------------------------------------------------------------

/// Sparse bivariate polynomial over a finite field; keys are exponent pairs
/// (i, j) of monomials x^i y^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    ctx: FieldCtx,
    terms: BTreeMap<(usize, usize), FieldElem>,
}

impl BiPoly {
    pub fn zero(ctx: &FieldCtx) -> BiPoly {
        BiPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &FieldCtx, c: FieldElem) -> BiPoly {
        let mut p = BiPoly::zero(ctx);
        p.set_coeff(0, 0, c);
        p
    }

    pub fn one(ctx: &FieldCtx) -> BiPoly {
        BiPoly::constant(ctx, ctx.one())
    }

    pub fn var_x(ctx: &FieldCtx) -> BiPoly {
        BiPoly::monomial(ctx, 1, 0, ctx.one())
    }

    pub fn var_y(ctx: &FieldCtx) -> BiPoly {
        BiPoly::monomial(ctx, 0, 1, ctx.one())
    }

    pub fn monomial(ctx: &FieldCtx, i: usize, j: usize, c: FieldElem) -> BiPoly {
        let mut p = BiPoly::zero(ctx);
        p.set_coeff(i, j, c);
        p
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: FieldElem) {
        if c.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> FieldElem {
        self.terms.get(&(i, j)).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), FieldElem)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Maximum total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Minimum total degree of a term (the order of f as a power series).
    pub fn order(&self) -> Result<usize> {
        self.terms.keys().map(|&(i, j)| i + j).min().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|&(i, j)| i + j);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().is_none_or(|d| d == 0)
    }

    fn assert_same_field(&self, other: &BiPoly) {
        assert!(self.ctx == other.ctx, "polynomials over different fields");
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        self.assert_same_field(other);
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.set_coeff(i, j, self.ctx.add(out.coeff(i, j), c));
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        let mut out = BiPoly::zero(&self.ctx);
        for ((i, j), c) in self.terms() {
            out.set_coeff(i, j, self.ctx.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        self.assert_same_field(other);
        let mut out = BiPoly::zero(&self.ctx);
        for ((ia, ja), ca) in self.terms() {
            for ((ib, jb), cb) in other.terms() {
                let (i, j) = (ia + ib, ja + jb);
                out.set_coeff(i, j, self.ctx.add(out.coeff(i, j), self.ctx.mul(ca, cb)));
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: FieldElem) -> BiPoly {
        let mut out = BiPoly::zero(&self.ctx);
        for ((i, j), a) in self.terms() {
            out.set_coeff(i, j, self.ctx.mul(a, c));
        }
        out
    }

    pub fn pow(&self, n: usize) -> BiPoly {
        let mut acc = BiPoly::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let mut acc = self.ctx.zero();
        for ((i, j), c) in self.terms() {
            let m = self.ctx.mul(self.ctx.pow(x, i as u64), self.ctx.pow(y, j as u64));
            acc = self.ctx.add(acc, self.ctx.mul(c, m));
        }
        acc
    }

    /// f(x_to, y_to), with powers of the substituted values memoized.
    pub fn substitute(&self, x_to: &BiPoly, y_to: &BiPoly) -> BiPoly {
        self.assert_same_field(x_to);
        self.assert_same_field(y_to);
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut xp = Vec::with_capacity(max_i + 1);
        let mut yp = Vec::with_capacity(max_j + 1);
        xp.push(BiPoly::one(&self.ctx));
        yp.push(BiPoly::one(&self.ctx));
        for i in 1..=max_i {
            let next = xp[i - 1].mul(x_to);
            xp.push(next);
        }
        for j in 1..=max_j {
            let next = yp[j - 1].mul(y_to);
            yp.push(next);
        }
        let mut out = BiPoly::zero(&self.ctx);
        for ((i, j), c) in self.terms() {
            out = out.add(&xp[i].mul(&yp[j]).scalar_mul(c));
        }
        out
    }

    /// The sum of the terms of minimal total degree t, together with t.
    pub fn initial_form(&self) -> Result<(usize, BiPoly)> {
        let t = self.order()?;
        let mut out = BiPoly::zero(&self.ctx);
        for ((i, j), c) in self.terms() {
            if i + j == t {
                out.set_coeff(i, j, c);
            }
        }
        Ok((t, out))
    }

    /// Leading term under the (total degree, then x-exponent) order.
    pub fn leading_term(&self) -> Option<((usize, usize), FieldElem)> {
        self.terms().max_by_key(|&((i, j), _)| (i + j, i))
    }

    /// Scale so the leading coefficient is 1.
    pub fn make_monic(&self) -> BiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scalar_mul(self.ctx.inv(c).expect("nonzero coefficient")),
        }
    }

    /// f(x, c*x) collapsed to a univariate polynomial in x.
    pub fn collapse_y_to_cx(&self, c: FieldElem) -> UniPoly {
        let mut out = UniPoly::zero(&self.ctx);
        for ((i, j), a) in self.terms() {
            let d = i + j;
            let v = self.ctx.mul(a, self.ctx.pow(c, j as u64));
            out.set_coeff(d, self.ctx.add(out.coeff(d), v));
        }
        out
    }

    /// f(0, y) as a univariate polynomial in y.
    pub fn restrict_to_y(&self) -> UniPoly {
        let mut out = UniPoly::zero(&self.ctx);
        for ((i, j), a) in self.terms() {
            if i == 0 {
                out.set_coeff(j, a);
            }
        }
        out
    }

    /// For homogeneous f: the largest a with y^a | f and the univariate
    /// dehomogenization u(x) = (f / y^a)(x, 1).
    fn split_y_power(&self) -> (usize, UniPoly) {
        debug_assert!(self.is_homogeneous() && !self.is_zero());
        let ymin = self.terms.keys().map(|&(_, j)| j).min().expect("nonzero");
        let mut u = UniPoly::zero(&self.ctx);
        for ((i, _), c) in self.terms() {
            u.set_coeff(i, c);
        }
        (ymin, u)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(usize, usize)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        let parts: Vec<String> = keys
            .iter()
            .map(|&(i, j)| render_term(&self.ctx, self.coeff(i, j), &[("x", i), ("y", j)]))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn render_term(ctx: &FieldCtx, c: FieldElem, vars: &[(&str, usize)]) -> String {
    let mut factors: Vec<String> = Vec::new();
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{}^{}", name, e)),
        }
    }
    let cstr = ctx.render(c);
    if factors.is_empty() {
        return if cstr.contains('+') { format!("({})", cstr) } else { cstr };
    }
    if c.is_one() {
        return factors.join("*");
    }
    let cpart = if cstr.contains('+') { format!("({})", cstr) } else { cstr };
    format!("{}*{}", cpart, factors.join("*"))
}

/// Gcd of two homogeneous polynomials, monic under the degree-then-lex order.
///
/// Homogeneous polynomials in two variables factor as a power of y times the
/// homogenization of a univariate polynomial, and homogenization is
/// multiplicative, so the gcd splits the same way.
///
/// Panics if an argument is not homogeneous.
pub fn bihom_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    assert!(a.is_homogeneous() && b.is_homogeneous(), "bihom_gcd needs homogeneous inputs");
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    let (ya, ua) = a.split_y_power();
    let (yb, ub) = b.split_y_power();
    let w = ua.gcd(&ub);
    let wd = w.degree().expect("gcd of nonzero polynomials is nonzero");
    let hom = w.homogenize(wd).expect("degree matches");
    let ypow = BiPoly::monomial(a.ctx(), 0, ya.min(yb), a.ctx().one());
    hom.mul(&ypow)
}

/// Exact division of homogeneous polynomials: a / b when b divides a.
pub fn divide_exact_hom(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    assert!(a.is_homogeneous() && b.is_homogeneous(), "exact division needs homogeneous inputs");
    if a.is_zero() {
        return Some(BiPoly::zero(a.ctx()));
    }
    if b.is_zero() {
        return None;
    }
    let (ya, ua) = a.split_y_power();
    let (yb, ub) = b.split_y_power();
    if yb > ya {
        return None;
    }
    let (quo, rem) = ua.divrem(&ub).expect("nonzero divisor");
    if !rem.is_zero() {
        return None;
    }
    let qd = quo.degree()?;
    let hom = quo.homogenize(qd).expect("degree matches");
    Some(hom.mul(&BiPoly::monomial(a.ctx(), 0, ya - yb, a.ctx().one())))
}

/// All projective points [alpha : beta] over the coefficient field whose
/// linear form alpha*x + beta*y is a zerodivisor on k[[x,y]]/(f).
///
/// For a linear form z, the quotient by z is a discrete valuation ring, so z
/// is a zerodivisor exactly when f maps to zero there, i.e. when the
/// substitution eliminating z kills f: f(x, -alpha*x) = 0 for beta
/// normalized to 1, and f(0, y) = 0 for the point [1 : 0].
///
/// Points are returned as (alpha, beta) with [1 : 0] first and then
/// [alpha : 1] by ascending alpha.
pub fn linear_zerodivisor_forms(f: &BiPoly) -> Result<Vec<(FieldElem, FieldElem)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = f.ctx().clone();
    let mut out = Vec::new();
    if f.restrict_to_y().is_zero() {
        out.push((ctx.one(), ctx.zero()));
    }
    for alpha in ctx.elements() {
        if f.collapse_y_to_cx(ctx.neg(alpha)).is_zero() {
            out.push((alpha, ctx.one()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    /// xy(x^n + y^n) over the given field.
    fn xy_power_poly(ctx: &FieldCtx, n: usize) -> BiPoly {
        let x = BiPoly::var_x(ctx);
        let y = BiPoly::var_y(ctx);
        x.mul(&y).mul(&x.pow(n).add(&y.pow(n)))
    }

    #[test]
    fn arith_examples() {
        let f2 = gf(2);
        let x = BiPoly::var_x(&f2);
        let y = BiPoly::var_y(&f2);
        // (x + y)^2 = x^2 + y^2 in characteristic 2
        let sq = x.add(&y).pow(2);
        assert_eq!(sq, x.pow(2).add(&y.pow(2)));

        // xy(x + y) at (1, 1) over GF(2) is 0
        let f = xy_power_poly(&f2, 1);
        assert!(f.eval(f2.one(), f2.one()).is_zero());

        // substitute y -> x in x + y over GF(3) gives 2x
        let f3 = gf(3);
        let s = BiPoly::var_x(&f3)
            .add(&BiPoly::var_y(&f3))
            .substitute(&BiPoly::var_x(&f3), &BiPoly::var_x(&f3));
        assert_eq!(s, BiPoly::var_x(&f3).scalar_mul(f3.from_int(2)));
    }

    #[test]
    fn order_and_initial_form() {
        let f2 = gf(2);
        let f = xy_power_poly(&f2, 1);
        assert_eq!(f.order().unwrap(), 3);

        let x = BiPoly::var_x(&f2);
        let y = BiPoly::var_y(&f2);
        let g = x.pow(2).mul(&y).add(&y.pow(5));
        assert_eq!(g.order().unwrap(), 3);
        assert_eq!(BiPoly::one(&f2).order().unwrap(), 0);
        assert_eq!(BiPoly::zero(&f2).order(), Err(Error::ZeroPolynomial));

        // initial form of xy(x+y) + x^5 is (3, xy(x+y))
        let h = f.add(&x.pow(5));
        assert_eq!(h.initial_form().unwrap(), (3, f.clone()));

        // x - h with ord(h) >= 2 has initial form (1, x)
        let f3 = gf(3);
        let x3 = BiPoly::var_x(&f3);
        let tail = BiPoly::var_y(&f3).pow(2).scalar_mul(f3.from_int(2));
        let z = x3.sub(&tail);
        let (t, star) = z.initial_form().unwrap();
        assert_eq!((t, star), (1, x3.clone()));

        // homogeneous polynomial is its own initial form
        assert_eq!(f.initial_form().unwrap(), (3, f.clone()));
    }

    #[test]
    fn gcd_uni_examples() {
        let f2 = gf(2);
        // gcd(x^2 + 1, x + 1) = x + 1 over GF(2)
        let a = UniPoly::from_ints(&f2, &[1, 0, 1]);
        let b = UniPoly::from_ints(&f2, &[1, 1]);
        assert_eq!(a.gcd(&b), b);

        // gcd(x^3 + x, x^2) = x
        let c = UniPoly::from_ints(&f2, &[0, 1, 0, 1]);
        let d = UniPoly::from_ints(&f2, &[0, 0, 1]);
        assert_eq!(c.gcd(&d), UniPoly::x(&f2));

        // gcd(f, 0) = monic f
        let f5 = gf(5);
        let e = UniPoly::from_ints(&f5, &[1, 2, 3]);
        assert_eq!(e.gcd(&UniPoly::zero(&f5)), e.make_monic());
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = gf(2);
        assert!(UniPoly::from_ints(&f2, &[1, 1, 1]).is_irreducible());
        assert!(UniPoly::from_ints(&f2, &[1, 1, 1, 1, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&f2, &[1, 0, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&f2, &[1]).is_irreducible());
    }

    /// Oracle: trial division by every lower-degree monic polynomial.
    fn is_irreducible_trial(f: &UniPoly) -> bool {
        let n = match f.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        let ctx = f.ctx();
        let q = ctx.q();
        for d in 1..=n / 2 {
            for k in 0..q.pow(d as u32) {
                let mut div = UniPoly::monomial(ctx, d, ctx.one());
                let mut v = k;
                for i in 0..d {
                    div.set_coeff(i, FieldElem::from_packed(v % q));
                    v /= q;
                }
                if f.divrem(&div).unwrap().1.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for p in [2u64, 3] {
            let ctx = gf(p);
            for deg in 1..=4usize {
                for k in 0..p.pow(deg as u32) {
                    let mut f = UniPoly::monomial(&ctx, deg, ctx.one());
                    let mut v = k;
                    for i in 0..deg {
                        f.set_coeff(i, FieldElem::from_packed(v % p));
                        v /= p;
                    }
                    assert_eq!(f.is_irreducible(), is_irreducible_trial(&f), "{}", f);
                }
            }
        }
    }

    #[test]
    fn cyclotomic_prime_power_examples() {
        let f2 = gf(2);
        let f3 = gf(3);
        assert_eq!(
            cyclotomic_prime_power(5, 1, &f2).unwrap(),
            UniPoly::from_ints(&f2, &[1, 1, 1, 1, 1])
        );
        assert_eq!(
            cyclotomic_prime_power(3, 2, &f2).unwrap(),
            UniPoly::from_ints(&f2, &[1, 0, 0, 1, 0, 0, 1])
        );
        assert_eq!(cyclotomic_prime_power(2, 1, &f3).unwrap(), UniPoly::from_ints(&f3, &[1, 1]));
        assert_eq!(cyclotomic_prime_power(3, 1, &f3), Err(Error::CharacteristicDividesN { p: 3 }));
    }

    #[test]
    fn cyclotomic_general_agrees_with_prime_power_form() {
        let f2 = gf(2);
        let f3 = gf(3);
        for (p, m) in [(3u64, 1u32), (3, 2), (5, 1), (7, 1)] {
            let n = p.pow(m);
            assert_eq!(cyclotomic(n, &f2), cyclotomic_prime_power(p, m, &f2).unwrap());
        }
        for (p, m) in [(2u64, 1u32), (2, 2), (5, 1), (5, 2)] {
            let n = p.pow(m);
            assert_eq!(cyclotomic(n, &f3), cyclotomic_prime_power(p, m, &f3).unwrap());
        }
        // x - 1 and x^2 - x + 1
        assert_eq!(cyclotomic(1, &f3), UniPoly::from_ints(&f3, &[-1, 1]));
        let f5 = gf(5);
        assert_eq!(cyclotomic(6, &f5), UniPoly::from_ints(&f5, &[1, -1, 1]));
    }

    #[test]
    fn factor_pattern_examples() {
        assert_eq!(cyclotomic_factor_pattern(5, 2).unwrap(), (4, 1));
        assert_eq!(cyclotomic_factor_pattern(7, 2).unwrap(), (3, 2));
        assert_eq!(cyclotomic_factor_pattern(3, 2).unwrap(), (2, 1));
        assert_eq!(cyclotomic_factor_pattern(6, 4), Err(Error::NotPrime(4)));
        assert_eq!(cyclotomic_factor_pattern(6, 3), Err(Error::NotCoprime { g: 3, n: 6 }));
    }

    #[test]
    fn homogenize_examples() {
        let f2 = gf(2);
        let quad = UniPoly::from_ints(&f2, &[1, 1, 1]);
        let hom = quad.homogenize(2).unwrap();
        let x = BiPoly::var_x(&f2);
        let y = BiPoly::var_y(&f2);
        assert_eq!(hom, x.pow(2).add(&x.mul(&y)).add(&y.pow(2)));

        let lin = UniPoly::from_ints(&f2, &[1, 1]);
        assert_eq!(lin.homogenize(1).unwrap(), x.add(&y));

        let phi5 = cyclotomic_prime_power(5, 1, &f2).unwrap();
        let h5 = phi5.homogenize(4).unwrap();
        let mut expect = BiPoly::zero(&f2);
        for (i, j) in monomials_of_degree(4) {
            expect.set_coeff(i, j, f2.one());
        }
        assert_eq!(h5, expect);

        assert_eq!(quad.homogenize(1), Err(Error::DegreeTooSmall { needed: 2, got: 1 }));
    }

    #[test]
    fn bihom_gcd_examples() {
        let f2 = gf(2);
        let x = BiPoly::var_x(&f2);
        let y = BiPoly::var_y(&f2);
        let quad = x.pow(2).add(&x.mul(&y)).add(&y.pow(2));
        let cubic = xy_power_poly(&f2, 1);
        assert_eq!(bihom_gcd(&quad, &cubic), BiPoly::one(&f2));

        let a = x.mul(&y);
        let b = y.mul(&x.add(&y));
        assert_eq!(bihom_gcd(&a, &b), y.clone());

        assert_eq!(bihom_gcd(&cubic, &cubic), cubic.make_monic());
    }

    #[test]
    fn linear_zerodivisors_examples() {
        let f2 = gf(2);
        let f = xy_power_poly(&f2, 1);
        let pts = linear_zerodivisor_forms(&f).unwrap();
        assert_eq!(pts.len(), 3); // all of P^1(GF(2))

        // xy(x^3 + y^3) over GF(3): x, y, x + y but not x + 2y
        let f3 = gf(3);
        let g = xy_power_poly(&f3, 3);
        let pts = linear_zerodivisor_forms(&g).unwrap();
        assert_eq!(
            pts,
            vec![(f3.one(), f3.zero()), (f3.zero(), f3.one()), (f3.one(), f3.one()),]
        );

        // x^2: only the point [1 : 0]
        let h = BiPoly::var_x(&f2).pow(2);
        assert_eq!(linear_zerodivisor_forms(&h).unwrap(), vec![(f2.one(), f2.zero())]);
    }

    #[test]
    fn cyclotomic_prime_power_identity() {
        // phi_{p^m}(x) * (x^(p^(m-1)) - 1) = x^(p^m) - 1
        for (ctx_p, p_list) in [(2u64, [3u64, 5, 7]), (3, [2, 5, 7])] {
            let ctx = gf(ctx_p);
            for p in p_list {
                for m in 1..=3u32 {
                    let phi = cyclotomic_prime_power(p, m, &ctx).unwrap();
                    let lower = p.pow(m - 1) as usize;
                    let mut left = UniPoly::monomial(&ctx, lower, ctx.one());
                    left.set_coeff(0, ctx.neg(ctx.one()));
                    let mut right = UniPoly::monomial(&ctx, p.pow(m) as usize, ctx.one());
                    right.set_coeff(0, ctx.neg(ctx.one()));
                    assert_eq!(phi.mul(&left), right, "p={} m={} over GF({})", p, m, ctx_p);
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let a = BiPoly::var_x(&gf(2));
        let b = BiPoly::var_y(&gf(3));
        let _ = a.add(&b);
    }

    #[test]
    fn display_examples() {
        let f2 = gf(2);
        let f = xy_power_poly(&f2, 1);
        assert_eq!(f.to_string(), "x^2*y + x*y^2");
        let f5 = gf(5);
        let g = BiPoly::var_x(&f5).pow(2).scalar_mul(f5.from_int(3)).add(&BiPoly::one(&f5));
        assert_eq!(g.to_string(), "3*x^2 + 1");
        assert_eq!(BiPoly::zero(&f5).to_string(), "0");
    }

    #[test]
    fn first_irreducible_over_gf4() {
        let f4 = FieldCtx::extension_field(2, 2).unwrap();
        let q = first_irreducible(&f4, 2);
        assert!(q.is_irreducible());
        assert_eq!(q.degree(), Some(2));
        // x^2 + x + g is the first hit in scan order over GF(4)
        let g = f4.generator().unwrap();
        let mut expect = UniPoly::monomial(&f4, 2, f4.one());
        expect.set_coeff(1, f4.one());
        expect.set_coeff(0, g);
        assert_eq!(q, expect);
    }
}
