//! Euclidean domains used for Smith normal forms: the integers and polynomial
//! rings over `ℚ` and `𝔽_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Euclidean domain given as a ring object, so that parameters such as a
/// prime modulus live outside the elements.
pub trait EuclideanRing: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;
    /// Euclidean size; only compared.
    type Size: Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// `(q, r)` with `a = q b + r` and `r = 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn size(&self, a: &Self::Elem) -> Self::Size;
    /// A unit `u` with `u a` the chosen associate of `a` (positive, monic).
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.normalizing_unit(a), a)
    }

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    fn format(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl EuclideanRing for Integers {
    type Elem = BigInt;
    type Size = num_bigint::BigUint;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // Round to nearest to keep remainders small.
        let (q, r) = a.div_mod_floor(b);
        let twice = r.magnitude() * 2u32;
        if &twice > b.magnitude() {
            (q + 1, r - b)
        } else {
            (q, r)
        }
    }
    fn size(&self, a: &BigInt) -> num_bigint::BigUint {
        a.magnitude().clone()
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// A field whose elements the polynomial ring is built on.
pub trait Field: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_integer(&self, v: &BigInt) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;
    /// The characteristic; 0 for `ℚ`.
    fn characteristic(&self) -> u64;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn from_integer(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// `𝔽_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::Config(format!("{p} is not a prime below 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let m = v.mod_floor(&BigInt::from(self.p));
        u64::try_from(m).expect("reduced modulo p")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_integer(&self, v: &BigInt) -> u64 {
        self.from_bigint(v)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// A field viewed as a Euclidean domain: every nonzero element is a unit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FieldRing<F> {
    pub field: F,
}

impl<F: Field> EuclideanRing for FieldRing<F> {
    type Elem = F::Elem;
    type Size = u8;

    fn zero(&self) -> F::Elem {
        self.field.zero()
    }
    fn one(&self) -> F::Elem {
        self.field.one()
    }
    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.add(a, b)
    }
    fn sub(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.sub(a, b)
    }
    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.mul(a, b)
    }
    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.field.neg(a)
    }
    fn is_zero(&self, a: &F::Elem) -> bool {
        self.field.is_zero(a)
    }
    fn is_unit(&self, a: &F::Elem) -> bool {
        !self.field.is_zero(a)
    }
    fn div_rem(&self, a: &F::Elem, b: &F::Elem) -> (F::Elem, F::Elem) {
        (self.field.mul(a, &self.field.inv(b)), self.field.zero())
    }
    fn size(&self, a: &F::Elem) -> u8 {
        u8::from(!self.field.is_zero(a))
    }
    fn normalizing_unit(&self, a: &F::Elem) -> F::Elem {
        if self.field.is_zero(a) {
            self.field.one()
        } else {
            self.field.inv(a)
        }
    }
    fn unit_inverse(&self, u: &F::Elem) -> F::Elem {
        self.field.inv(u)
    }
    fn format(&self, a: &F::Elem) -> String {
        self.field.format(a)
    }
}

/// A polynomial in `t`, coefficients from low to high degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `F[t]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PolyRing<F> {
    pub field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn leading(&self, a: &Poly<F::Elem>) -> Option<F::Elem> {
        a.coeffs.last().cloned()
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Number of leading factors of `t`, i.e. the lowest nonzero degree.
    pub fn t_valuation(&self, a: &Poly<F::Elem>) -> usize {
        a.coeffs.iter().take_while(|c| self.field.is_zero(c)).count()
    }

    /// Drops factors of `t` and makes the result monic: the normal form of
    /// the associate class in `F[t, t⁻¹]`.
    pub fn laurent_normalize(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = self.t_valuation(a);
        let shifted = self.from_coeffs(a.coeffs[v.min(a.coeffs.len())..].to_vec());
        self.normalize(&shifted)
    }

    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }
}

impl<F: Field> EuclideanRing for PolyRing<F> {
    type Elem = Poly<F::Elem>;
    type Size = usize;

    fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }
    fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }
    fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.field.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| self.field.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }
    fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.field.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| self.field.sub(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }
    fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }
    fn is_zero(&self, a: &Poly<F::Elem>) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.len() == 1
    }
    fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let inv = self.field.inv(b.coeffs.last().unwrap());
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.field.mul(&r[k + db], &inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k + j] = self.field.sub(&r[k + j], &self.field.mul(&c, bj));
            }
            q[k] = c;
        }
        r.truncate(db);
        (self.from_coeffs(q), self.from_coeffs(r))
    }
    fn size(&self, a: &Poly<F::Elem>) -> usize {
        a.coeffs.len()
    }
    fn normalizing_unit(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.coeffs.last() {
            Some(c) => self.constant(self.field.inv(c)),
            None => self.one(),
        }
    }
    fn unit_inverse(&self, u: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.constant(self.field.inv(&u.coeffs[0]))
    }
    fn format(&self, a: &Poly<F::Elem>) -> String {
        format_poly(&self.field, a.coeffs(), 0)
    }
}

/// Writes `Σ c_i t^(i + shift)` with the highest degree first.
pub fn format_poly<F: Field>(field: &F, coeffs: &[F::Elem], shift: i64) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let e = i as i64 + shift;
        let text = field.format(c);
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        let mon = match e {
            0 => mag,
            _ => {
                let var = if e == 1 { "t".to_string() } else { format!("t^{e}") };
                if mag == "1" {
                    var
                } else {
                    format!("{mag}*{var}")
                }
            }
        };
        if parts.is_empty() {
            parts.push(if neg { format!("-{mon}") } else { mon });
        } else {
            parts.push(format!("{} {mon}", if neg { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}
