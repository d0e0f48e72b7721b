//! Cyclotomic polynomials and factorizations into them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{EuclideanRing, Field, Poly, PolyRing};

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let (mut m, mut out, mut d) = (n, n, 2);
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Integer coefficients of `Φ_n`, low degree first.
pub fn integer_cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    // t^n - 1 divided by Φ_d for every proper divisor d; all divisors are monic.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        num = divide_monic(&num, &integer_cyclotomic(d));
    }
    num
}

fn divide_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "exact division");
    q
}

/// `Φ_n` over the field of `ring` (the image of the integer polynomial).
pub fn cyclotomic<F: Field>(ring: &PolyRing<F>, n: u64) -> Poly<F::Elem> {
    ring.from_coeffs(
        integer_cyclotomic(n)
            .iter()
            .map(|c| ring.field.from_integer(c))
            .collect(),
    )
}

/// Writes a monic polynomial as `∏ Φ_n^{e_n}` when possible, trying indices
/// in increasing order. In characteristic `p` only indices prime to `p` are
/// used, which makes the factorization unique.
pub fn cyclotomic_factorization<F: Field>(ring: &PolyRing<F>, p: &Poly<F::Elem>) -> Option<Vec<(u64, u32)>> {
    let mut rest = ring.normalize(p);
    if rest.is_zero() || ring.t_valuation(&rest) > 0 {
        return None;
    }
    let char_p = ring.field.characteristic();
    let mut out = Vec::new();
    let mut n = 1u64;
    loop {
        let deg = rest.degree().expect("nonzero") as u64;
        if deg == 0 {
            return Some(out);
        }
        // φ(n) ≥ sqrt(n/2), so no index beyond 2 deg² can contribute.
        if n > 2 * deg * deg + 2 {
            return None;
        }
        if (char_p == 0 || n % char_p != 0) && totient(n) <= deg {
            let phi = cyclotomic(ring, n);
            let mut e = 0;
            loop {
                let (q, r) = ring.div_rem(&rest, &phi);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((n, e));
            }
        }
        n += 1;
    }
}

/// `Φ6Φ12`, `Φ3^3`, `1` for the empty product.
pub fn format_cyclotomic(factors: &[(u64, u32)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|&(n, e)| if e == 1 { format!("Φ{n}") } else { format!("Φ{n}^{e}") })
        .collect()
}
