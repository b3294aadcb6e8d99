//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending. `n = 0` and `n = 1` have none.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Residue of `a` in `[0, m)` for `m > 0`; `a` unchanged when `m == 0`.
pub fn reduce(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_zero() {
        a.clone()
    } else {
        a.mod_floor(m)
    }
}

pub fn reduce_in_place(a: &mut BigInt, m: &BigInt) {
    if !m.is_zero() && (a.is_negative() || &*a >= m) {
        *a = a.mod_floor(m);
    }
}

/// `l`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, l: u64) -> u32 {
    let l = BigInt::from(l);
    let mut n = n.abs();
    let mut v = 0;
    if n.is_zero() {
        return 0;
    }
    loop {
        let (q, r) = n.div_rem(&l);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn pow_big(base: u64, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    let b = BigInt::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

/// Refines a list of integers `> 1` into pairwise coprime factors such that
/// each input is a product of powers of the returned values.
pub fn coprime_base(values: &[BigInt]) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = Vec::new();
    for v in values {
        if v <= &BigInt::one() {
            continue;
        }
        let mut pending = vec![v.clone()];
        while let Some(mut x) = pending.pop() {
            let mut i = 0;
            while !x.is_one() && i < base.len() {
                if x == base[i] {
                    x = BigInt::one();
                    break;
                }
                let g = x.gcd(&base[i]);
                if g.is_one() {
                    i += 1;
                    continue;
                }
                let b = base.swap_remove(i);
                let b_rest = &b / &g;
                if !b_rest.is_one() {
                    pending.push(b_rest);
                }
                pending.push(g.clone());
                x = &x / &g;
                i = 0;
            }
            if !x.is_one() {
                base.push(x);
            }
        }
        base.sort();
        base.dedup();
    }
    base.sort();
    base.dedup();
    base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(97), vec![97]);
    }

    #[test]
    fn coprime_base_refines() {
        let vals: Vec<BigInt> = [12, 18, 5].iter().map(|&v| BigInt::from(v)).collect();
        let base = coprime_base(&vals);
        for (i, a) in base.iter().enumerate() {
            for b in &base[i + 1..] {
                assert!(a.gcd(b).is_one());
            }
        }
        for v in &vals {
            let mut r = v.clone();
            for b in &base {
                while (&r % b).is_zero() {
                    r /= b;
                }
            }
            assert!(r.is_one(), "{v} not covered by {base:?}");
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(48), 2), 4);
        assert_eq!(valuation(&BigInt::from(48), 3), 1);
        assert_eq!(valuation(&BigInt::from(7), 2), 0);
    }
}
