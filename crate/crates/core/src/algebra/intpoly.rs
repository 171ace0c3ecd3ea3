//! Dense univariate polynomials over the integers.
//!
//! This is the storage layer underneath [`RatFun`](super::RatFun): numerators
//! and denominators are kept as primitive integer polynomials so that the
//! hot loops never touch rational coefficient arithmetic. GCDs use a
//! multi-modular algorithm with trial-division verification, falling back to
//! a primitive pseudo-remainder sequence if the prime table runs out.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Coefficients in ascending degree, no trailing zeros. The zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits off the content with the sign chosen so the primitive part has
    /// a positive leading coefficient.
    pub fn primitive_split(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut c = self.content();
        if self.lc().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if c.is_one() {
            (c, self.clone())
        } else {
            let p = self.div_scalar_exact(&c);
            (c, p)
        }
    }

    pub fn primitive_part(&self) -> IntPoly {
        self.primitive_split().1
    }

    /// Exact quotient over the integers, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let lead = d.lc()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// `p(x) -> p(x^m)`.
    pub fn compose_power(&self, m: usize) -> IntPoly {
        if m == 1 || self.is_constant() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * m] = c.clone();
        }
        IntPoly::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::from(0i64);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + &Rational::from(c.clone());
        }
        acc
    }

    fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self.coeffs.iter().map(|c| mod_u64(c, p)).collect();
        trim_mod(&mut v);
        v
    }

    /// Primitive gcd with positive leading coefficient. Both arguments are
    /// expected to be primitive; the result is only determined up to a
    /// constant otherwise.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.is_constant() || other.is_constant() {
            return IntPoly::one();
        }
        if self == other {
            return self.primitive_part();
        }
        let a = self.primitive_part();
        let b = other.primitive_part();
        modular_gcd(&a, &b).unwrap_or_else(|| prs_gcd(&a, &b))
    }
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    let r = (c.magnitude() % p).to_u64().unwrap_or(0);
    if c.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const PRIME_COUNT: usize = 256;

/// Descending primes below 2^62.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut n = (1u64 << 62) - 1;
        while out.len() < PRIME_COUNT {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// Remainder of `a` modulo `b` over Z/p, `b` nonzero.
fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv_lead = invmod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mulmod(a[top], inv_lead, p);
        if q != 0 {
            let shift = top - db;
            for (j, bc) in b.iter().enumerate() {
                let t = mulmod(q, *bc, p);
                let slot = &mut a[shift + j];
                *slot = if *slot >= t { *slot - t } else { *slot + p - t };
            }
        }
        a.pop();
        trim_mod(a);
    }
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        rem_mod(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = invmod(lead, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

fn symmetric(c: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r > half {
        r - m
    } else {
        r
    }
}

/// Brown-style dense modular gcd. `None` when the prime table is exhausted.
fn modular_gcd(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let la = a.lc()?;
    let lb = b.lc()?;
    let gamma = la.gcd(lb);
    let max_deg = a.degree()?.min(b.degree()?);

    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut acc_deg = max_deg + 1;
    let mut last: Option<IntPoly> = None;

    for &p in primes() {
        if mod_u64(la, p) == 0 || mod_u64(lb, p) == 0 {
            continue;
        }
        let g = gcd_mod(a.reduce_mod(p), b.reduce_mod(p), p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(IntPoly::one());
        }
        if d > acc_deg {
            continue;
        }
        let gp = mod_u64(&gamma, p);
        let scaled: Vec<u64> = g.iter().map(|c| mulmod(*c, gp, p)).collect();
        if d < acc_deg {
            acc_deg = d;
            acc = scaled.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            last = None;
        } else {
            // CRT: x = acc + M * ((g - acc) * M^{-1} mod p)
            let m_mod_p = mod_u64(&modulus, p);
            let m_inv = invmod(m_mod_p, p);
            for (slot, &gc) in acc.iter_mut().zip(&scaled) {
                let cur = mod_u64(slot, p);
                let diff = if gc >= cur { gc - cur } else { gc + p - cur };
                let k = mulmod(diff, m_inv, p);
                *slot += &modulus * BigInt::from(k);
            }
            modulus *= BigInt::from(p);
        }
        let half: BigInt = &modulus >> 1;
        let cand = IntPoly::new(acc.iter().map(|c| symmetric(c, &modulus, &half)).collect()).primitive_part();
        if last.as_ref() == Some(&cand) && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
            return Some(cand);
        }
        last = Some(cand);
    }
    None
}

/// Primitive pseudo-remainder sequence; slow but unconditional.
fn prs_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut f, mut g) = if a.degree() >= b.degree() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = r.primitive_part();
    }
    f.primitive_part()
}

fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let dg = g.degree().expect("nonzero divisor");
    let lead = g.lc().expect("nonzero divisor").clone();
    let mut r = f.coeffs.clone();
    while r.len() > dg && !r.is_empty() {
        let top = r.len() - 1;
        let t = r[top].clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        let shift = top - dg;
        for (j, gc) in g.coeffs.iter().enumerate() {
            r[shift + j] -= &t * gc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    IntPoly::new(r)
}
