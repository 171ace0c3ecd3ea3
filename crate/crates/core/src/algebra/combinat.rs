use num_bigint::BigInt;
use num_traits::One;

use super::Rational;
use crate::Error;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::from(0i64);
    }
    let k = k.min(n - k);
    if n <= 100 {
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        return Rational::from(BigInt::from(r));
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    Rational::from(r)
}

/// `n! / (parts[0]! parts[1]! ...)`. The parts must sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<Rational, Error> {
    let sum: u64 = parts.iter().sum();
    if sum != n {
        return Err(Error::MultinomialMismatch { n, sum });
    }
    // product of binomials avoids the full factorial quotient
    let mut acc = Rational::from(1i64);
    let mut remaining = n;
    for &p in parts {
        acc *= &binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

/// Rising factorial `(n)_k = n (n+1) ... (n+k-1)`, with `(n)_0 = 1`.
pub fn rising_factorial(n: u64, k: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n + i;
    }
    Rational::from(acc)
}

/// All weak compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order of the part vectors.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u64; parts];
    fill(total, 0, &mut cur, &mut out);
    out
}

fn fill(remaining: u64, idx: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if idx == cur.len() - 1 {
        cur[idx] = remaining;
        out.push(cur.clone());
        return;
    }
    for v in 0..=remaining {
        cur[idx] = v;
        fill(remaining - v, idx + 1, cur, out);
    }
}
