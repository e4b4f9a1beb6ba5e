//! Exact coefficient fields: prime fields, finite extensions, the rationals
//! and cyclotomic quotients of the rationals.
//!
//! A [`Field`] is a runtime descriptor; elements are [`Elem`] values carrying
//! a canonical coordinate representation, so equality of elements is plain
//! coordinate equality. No floating point is used anywhere.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rng::Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    BadDegree(u64),
    ReducibleModulus,
    BadCyclotomicIndex(u64),
    UnsupportedOp(&'static str),
}

impl core::fmt::Display for FieldError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::BadDegree(k) => write!(f, "extension degree {k} must be positive"),
            FieldError::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            FieldError::BadCyclotomicIndex(n) => write!(f, "cyclotomic index {n} must be positive"),
            FieldError::UnsupportedOp(s) => write!(f, "unsupported operation: {s}"),
        }
    }
}

/// Field descriptor. All element operations go through methods on this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    /// Prime field of order `p`.
    Prime { p: u64 },
    /// `GF(p^k)` presented as `F_p[t]` modulo a monic irreducible polynomial.
    /// `modulus` lists the coefficients of the non-leading terms, degree k:
    /// `t^k + modulus[k-1] t^(k-1) + ... + modulus[0]`.
    Extension { p: u64, modulus: Vec<u64> },
    /// The rational numbers.
    Rationals,
    /// `Q[t]/(Phi_n(t))`, the n-th cyclotomic field.
    /// `modulus` holds the non-leading coefficients of `Phi_n` (integers).
    Cyclotomic { n: u64, modulus: Vec<BigInt> },
}

/// A field element in canonical form for its owning field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elem {
    Fp(u64),
    /// Coordinates over the prime field, length = extension degree,
    /// index i = coefficient of `t^i`.
    Ext(Vec<u64>),
    Rat(BigRational),
    /// Coordinates over the rationals, length = deg(Phi_n).
    Cyc(Vec<BigRational>),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_p, used for extension-field plumbing.
// Polynomials are coefficient vectors, index i = coefficient of t^i,
// trailing zeros trimmed.

fn fp_poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_poly_trim(out)
}

/// Remainder of `a` modulo monic `m`.
fn fp_poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let dr = r.len() - 1;
        if lead != 0 {
            for i in 0..dm {
                let sub = (lead * m[i]) % p;
                let idx = dr - dm + i;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        r = fp_poly_trim(r);
    }
    r
}

fn fp_poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = fp_poly_trim(a.to_vec());
    let mut y = fp_poly_trim(b.to_vec());
    while !y.is_empty() {
        // Make y monic before taking remainders.
        let inv = fp_inv(*y.last().unwrap(), p);
        let ym: Vec<u64> = y.iter().map(|&c| (c * inv) % p).collect();
        let r = fp_poly_rem(&x, &ym, p);
        x = ym;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = fp_inv(lead, p);
        x = x.iter().map(|&c| (c * inv) % p).collect();
    }
    x
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on i128 to dodge sign fiddling.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        let tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        let tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    assert_eq!(r, 1, "element not invertible mod p");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// `t^e mod m` by square-and-multiply.
fn fp_poly_pow_t(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = fp_poly_rem(&[0, 1], m, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_poly_rem(&fp_poly_mul(&result, &base, p), m, p);
        }
        base = fp_poly_rem(&fp_poly_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic polynomial of degree k over F_p.
fn fp_poly_irreducible(m: &[u64], p: u64) -> bool {
    let k = (m.len() - 1) as u64;
    if k == 0 {
        return false;
    }
    // t^(p^k) == t mod m
    let mut q = fp_poly_pow_t(p, m, p);
    for _ in 1..k {
        q = fp_poly_compose_frobenius(&q, m, p);
    }
    let t = fp_poly_rem(&[0, 1], m, p);
    if q != t {
        return false;
    }
    // gcd(t^(p^(k/l)) - t, m) == 1 for each prime l | k
    let mut l = 2u64;
    let mut kk = k;
    let mut primes = Vec::new();
    while l * l <= kk {
        if kk % l == 0 {
            primes.push(l);
            while kk % l == 0 {
                kk /= l;
            }
        }
        l += 1;
    }
    if kk > 1 {
        primes.push(kk);
    }
    for l in primes {
        let mut q = fp_poly_pow_t(p, m, p);
        for _ in 1..(k / l) {
            q = fp_poly_compose_frobenius(&q, m, p);
        }
        let mut diff = q;
        // subtract t
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let diff = fp_poly_trim(diff);
        let g = fp_poly_gcd(&diff, m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Apply Frobenius x -> x^p to a residue represented by `q` (poly in t),
/// i.e. compute q(t)^p mod m.
fn fp_poly_compose_frobenius(q: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = q.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_poly_rem(&fp_poly_mul(&result, &base, p), m, p);
        }
        base = fp_poly_rem(&fp_poly_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    result
}

// ---------------------------------------------------------------------------
// Integer polynomial arithmetic for cyclotomic moduli.

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials (assumes divisor monic and exact).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for qi in (0..q.len()).rev() {
        let c = r[qi + dd].clone();
        q[qi] = c.clone();
        for j in 0..=dd {
            let t = &c * &den[j];
            r[qi + j] -= t;
        }
    }
    assert!(r.iter().all(|c| c.is_zero()), "non-exact division");
    q
}

/// The n-th cyclotomic polynomial over the integers, full coefficient vector
/// (constant term first, leading coefficient 1).
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by the product of Phi_d for proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = int_poly_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    int_poly_div_exact(&num, &den)
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers for the cyclotomic quotient ring.

fn rat_poly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
    v
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += t;
        }
    }
    rat_poly_trim(out)
}

/// Remainder modulo a monic rational polynomial.
fn rat_poly_rem(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.last().unwrap().clone();
        let dr = r.len() - 1;
        if !lead.is_zero() {
            for i in 0..dm {
                let t = &lead * &m[i];
                r[dr - dm + i] -= t;
            }
        }
        r.pop();
        r = rat_poly_trim(r);
    }
    r
}

/// Extended Euclid: returns (g, s) with s*a = g mod m, g monic gcd.
fn rat_poly_half_xgcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = m.to_vec();
    let mut r1 = rat_poly_trim(a.to_vec());
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1 = vec![BigRational::one()];
    while !r1.is_empty() {
        // divide r0 by r1
        let (q, r) = rat_poly_divmod(&r0, &r1);
        let qs1 = rat_poly_mul(&q, &s1);
        let s2 = rat_poly_sub(&s0, &qs1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // normalize r0 monic
    let lead = r0.last().unwrap().clone();
    let r0n: Vec<BigRational> = r0.iter().map(|c| c / &lead).collect();
    let s0n: Vec<BigRational> = s0.iter().map(|c| c / &lead).collect();
    (r0n, s0n)
}

fn rat_poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), rat_poly_trim(r));
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / &lead;
        let dr = r.len() - 1;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &b[i];
            r[dr - db + i] -= t;
        }
        r = rat_poly_trim(r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    rat_poly_trim(out)
}

// ---------------------------------------------------------------------------

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime { p })
    }

    /// `GF(p^k)` with the lexicographically smallest monic irreducible modulus
    /// of degree k (coefficient tuple `(a_0, ..., a_{k-1})` ordered
    /// lexicographically), so builds are deterministic.
    pub fn extension(p: u64, k: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadDegree(k));
        }
        if k == 1 {
            return Ok(Field::Prime { p });
        }
        let total = (p as u128).checked_pow(k as u32).expect("degree too large");
        let mut counter: u128 = 0;
        while counter < total {
            let mut coeffs = Vec::with_capacity(k as usize + 1);
            let mut c = counter;
            for _ in 0..k {
                coeffs.push((c % p as u128) as u64);
                c /= p as u128;
            }
            coeffs.push(1);
            if fp_poly_irreducible(&coeffs, p) {
                coeffs.pop();
                return Ok(Field::Extension { p, modulus: coeffs });
            }
            counter += 1;
        }
        unreachable!("irreducible polynomials of every degree exist over F_p")
    }

    /// `GF(p^k)` with an explicit monic modulus (non-leading coefficients).
    pub fn extension_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if modulus.is_empty() {
            return Err(FieldError::BadDegree(0));
        }
        let mut full: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        full.push(1);
        if !fp_poly_irreducible(&full, p) {
            return Err(FieldError::ReducibleModulus);
        }
        full.pop();
        Ok(Field::Extension { p, modulus: full })
    }

    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn cyclotomic(n: u64) -> Result<Field, FieldError> {
        if n == 0 {
            return Err(FieldError::BadCyclotomicIndex(n));
        }
        if n <= 2 {
            // Phi_1 = t - 1, Phi_2 = t + 1: both give Q back.
            return Ok(Field::Rationals);
        }
        let mut phi = cyclotomic_polynomial(n);
        phi.pop(); // drop the leading 1
        Ok(Field::Cyclotomic { n, modulus: phi })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime { p } => *p,
            Field::Extension { p, .. } => *p,
            Field::Rationals | Field::Cyclotomic { .. } => 0,
        }
    }

    /// Degree over the prime subfield; `None` in characteristic zero.
    pub fn degree_over_prime_field(&self) -> Option<u64> {
        match self {
            Field::Prime { .. } => Some(1),
            Field::Extension { modulus, .. } => Some(modulus.len() as u64),
            _ => None,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u128> {
        match self {
            Field::Prime { p } => Some(*p as u128),
            Field::Extension { p, modulus } => Some((*p as u128).pow(modulus.len() as u32)),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Field::Prime { .. } => Elem::Fp(0),
            Field::Extension { modulus, .. } => Elem::Ext(vec![0; modulus.len()]),
            Field::Rationals => Elem::Rat(BigRational::zero()),
            Field::Cyclotomic { modulus, .. } => Elem::Cyc(vec![BigRational::zero(); modulus.len()]),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Field::Prime { .. } => Elem::Fp(1),
            Field::Extension { modulus, .. } => {
                let mut v = vec![0; modulus.len()];
                v[0] = 1;
                Elem::Ext(v)
            }
            Field::Rationals => Elem::Rat(BigRational::one()),
            Field::Cyclotomic { modulus, .. } => {
                let mut v = vec![BigRational::zero(); modulus.len()];
                v[0] = BigRational::one();
                Elem::Cyc(v)
            }
        }
    }

    /// The image of an integer in this field.
    pub fn from_i64(&self, n: i64) -> Elem {
        match self {
            Field::Prime { p } => Elem::Fp(n.rem_euclid(*p as i64) as u64),
            Field::Extension { p, modulus } => {
                let mut v = vec![0; modulus.len()];
                v[0] = n.rem_euclid(*p as i64) as u64;
                Elem::Ext(v)
            }
            Field::Rationals => Elem::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Cyclotomic { modulus, .. } => {
                let mut v = vec![BigRational::zero(); modulus.len()];
                v[0] = BigRational::from_integer(BigInt::from(n));
                Elem::Cyc(v)
            }
        }
    }

    /// The generator `t` of an extension or cyclotomic field.
    pub fn generator(&self) -> Option<Elem> {
        match self {
            Field::Extension { modulus, .. } => {
                if modulus.len() < 2 {
                    return None;
                }
                let mut v = vec![0; modulus.len()];
                v[1] = 1;
                Some(Elem::Ext(v))
            }
            Field::Cyclotomic { modulus, .. } => {
                let mut v = vec![BigRational::zero(); modulus.len()];
                if modulus.len() < 2 {
                    return None;
                }
                v[1] = BigRational::one();
                Some(Elem::Cyc(v))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Fp(x) => *x == 0,
            Elem::Ext(v) => v.iter().all(|&c| c == 0),
            Elem::Rat(r) => r.is_zero(),
            Elem::Cyc(v) => v.iter().all(|c| c.is_zero()),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Field::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => Elem::Fp((x + y) % p),
            (Field::Extension { p, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                Elem::Ext(x.iter().zip(y).map(|(a, b)| (a + b) % p).collect())
            }
            (Field::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Field::Cyclotomic { .. }, Elem::Cyc(x), Elem::Cyc(y)) => {
                Elem::Cyc(x.iter().zip(y).map(|(a, b)| a + b).collect())
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Field::Prime { p }, Elem::Fp(x)) => Elem::Fp((p - x % p) % p),
            (Field::Extension { p, .. }, Elem::Ext(x)) => {
                Elem::Ext(x.iter().map(|&c| (p - c % p) % p).collect())
            }
            (Field::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Field::Cyclotomic { .. }, Elem::Cyc(x)) => Elem::Cyc(x.iter().map(|c| -c).collect()),
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Field::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => Elem::Fp((x * y) % p),
            (Field::Extension { p, modulus }, Elem::Ext(x), Elem::Ext(y)) => {
                let mut m = modulus.clone();
                m.push(1);
                let prod = fp_poly_mul(x, y, *p);
                let mut r = fp_poly_rem(&prod, &m, *p);
                r.resize(modulus.len(), 0);
                Elem::Ext(r)
            }
            (Field::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Field::Cyclotomic { modulus, .. }, Elem::Cyc(x), Elem::Cyc(y)) => {
                let mut m: Vec<BigRational> =
                    modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                m.push(BigRational::one());
                let prod = rat_poly_mul(x, y);
                let mut r = rat_poly_rem(&prod, &m);
                r.resize(modulus.len(), BigRational::zero());
                Elem::Cyc(r)
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Elem {
        assert!(!self.is_zero(a), "division by zero");
        match (self, a) {
            (Field::Prime { p }, Elem::Fp(x)) => Elem::Fp(fp_inv(*x, *p)),
            (Field::Extension { p, modulus }, Elem::Ext(x)) => {
                // invert via x^(q-2) = x^{-1}; q small at desk scale
                let q = (*p as u128).pow(modulus.len() as u32);
                self.pow(&Elem::Ext(x.clone()), (q - 2) as u64)
            }
            (Field::Rationals, Elem::Rat(x)) => Elem::Rat(x.recip()),
            (Field::Cyclotomic { modulus, .. }, Elem::Cyc(x)) => {
                let mut m: Vec<BigRational> =
                    modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                m.push(BigRational::one());
                let (g, s) = rat_poly_half_xgcd(x, &m);
                assert_eq!(g.len(), 1, "element not invertible in cyclotomic field");
                let ginv = g[0].recip();
                let mut r: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
                let mut r2 = rat_poly_rem(&r, &m);
                core::mem::swap(&mut r, &mut r2);
                r.resize(modulus.len(), BigRational::zero());
                Elem::Cyc(r)
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Enumerate all elements (finite fields only).
    pub fn enumerate(&self) -> Result<Vec<Elem>, FieldError> {
        match self {
            Field::Prime { p } => Ok((0..*p).map(Elem::Fp).collect()),
            Field::Extension { p, modulus } => {
                let k = modulus.len();
                let total = (*p as u128).pow(k as u32);
                let mut out = Vec::with_capacity(total as usize);
                for mut c in 0..total {
                    let mut v = Vec::with_capacity(k);
                    for _ in 0..k {
                        v.push((c % *p as u128) as u64);
                        c /= *p as u128;
                    }
                    out.push(Elem::Ext(v));
                }
                Ok(out)
            }
            _ => Err(FieldError::UnsupportedOp("enumerate over infinite field")),
        }
    }

    /// A seeded random element; char-0 fields sample small integers.
    pub fn random(&self, rng: &mut Rng) -> Elem {
        match self {
            Field::Prime { p } => Elem::Fp(rng.below(*p)),
            Field::Extension { p, modulus } => {
                Elem::Ext((0..modulus.len()).map(|_| rng.below(*p)).collect())
            }
            Field::Rationals => Elem::Rat(BigRational::from_integer(BigInt::from(rng.small_int(5)))),
            Field::Cyclotomic { modulus, .. } => Elem::Cyc(
                (0..modulus.len())
                    .map(|_| BigRational::from_integer(BigInt::from(rng.small_int(3))))
                    .collect(),
            ),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Field::Prime { p } => format!("GF({p})"),
            Field::Extension { p, modulus } => format!("GF({}^{})", p, modulus.len()),
            Field::Rationals => String::from("Q"),
            Field::Cyclotomic { n, .. } => format!("Q(zeta_{n})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Root-of-unity checks.

/// Does `t^n - 1` factor into linear factors over `field` (with multiplicity)?
///
/// Finite fields: strip roots by repeated division, scanning every element.
/// Characteristic zero: the only possible roots are the torsion units of the
/// field (powers of the defining root of unity and their negatives), a finite
/// candidate set, and `t^n - 1` is separable, so distinct-root counting works.
pub fn splits_completely(field: &Field, n: u64) -> bool {
    assert!(n >= 1);
    match field {
        Field::Prime { .. } | Field::Extension { .. } => {
            // f = t^n - 1 with coefficients in the field; divide out roots.
            let mut f: Vec<Elem> = vec![field.zero(); n as usize + 1];
            f[0] = field.neg(&field.one());
            f[n as usize] = field.one();
            let elems = field.enumerate().unwrap();
            for r in &elems {
                loop {
                    if f.len() == 1 {
                        return true;
                    }
                    // evaluate
                    let mut val = field.zero();
                    for c in f.iter().rev() {
                        val = field.add(&field.mul(&val, r), c);
                    }
                    if !field.is_zero(&val) {
                        break;
                    }
                    // synthetic division by (t - r)
                    let mut q = vec![field.zero(); f.len() - 1];
                    let mut carry = field.zero();
                    for i in (0..f.len() - 1).rev() {
                        let c = field.add(&f[i + 1], &carry);
                        carry = field.mul(&c, r);
                        q[i] = c;
                    }
                    f = q;
                }
            }
            f.len() == 1
        }
        Field::Rationals => n <= 2,
        Field::Cyclotomic { n: m, .. } => {
            // Torsion subgroup of Q(zeta_m)^* has order lcm(2, m); count the
            // distinct n-th roots of unity among +-zeta^k.
            let mut candidates: Vec<Elem> = Vec::new();
            let zeta = field.generator().unwrap();
            let mut z = field.one();
            for _ in 0..*m {
                candidates.push(z.clone());
                candidates.push(field.neg(&z));
                z = field.mul(&z, &zeta);
            }
            let mut roots: Vec<Elem> = Vec::new();
            for c in candidates {
                if field.is_zero(&field.sub(&field.pow(&c, n), &field.one()))
                    && !roots.contains(&c)
                {
                    roots.push(c);
                }
            }
            roots.len() as u64 == n
        }
    }
}

/// `K` has enough roots of unity for the symmetrizer diagonal `d` when
/// `t^(c_i) - 1` splits completely for every entry.
pub fn enough_roots_of_unity(field: &Field, symmetrizer_diag: &[u64]) -> bool {
    symmetrizer_diag.iter().all(|&c| {
        assert!(c >= 1);
        splits_completely(field, c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.enumerate().unwrap().len(), 2);
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn extension_field_order() {
        let f = Field::extension(3, 2).unwrap();
        assert_eq!(f.order(), Some(9));
        assert_eq!(f.enumerate().unwrap().len(), 9);
    }

    #[test]
    fn auto_modulus_is_smallest_irreducible() {
        // Over F_2, degree 2: the only irreducible is t^2 + t + 1.
        let f = Field::extension(2, 2).unwrap();
        match f {
            Field::Extension { modulus, .. } => assert_eq!(modulus, vec![1, 1]),
            _ => panic!("expected extension"),
        }
    }

    #[test]
    fn cyclotomic_4_has_square_root_of_minus_one() {
        let f = Field::cyclotomic(4).unwrap();
        let i = f.generator().unwrap();
        let m1 = f.neg(&f.one());
        assert_eq!(f.mul(&i, &i), m1);
    }

    #[test]
    fn cyclotomic_polynomials() {
        use num_bigint::BigInt;
        let to = |v: &[i64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
        assert_eq!(cyclotomic_polynomial(1), to(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), to(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), to(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), to(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), to(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), to(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn splits_examples() {
        // t^4 - 1 = (t+1)^4 over GF(2)
        assert!(splits_completely(&Field::prime(2).unwrap(), 4));
        assert!(!splits_completely(&Field::prime(3).unwrap(), 4));
        assert!(splits_completely(&Field::extension(3, 2).unwrap(), 4));
        assert!(splits_completely(&Field::rationals(), 2));
        assert!(!splits_completely(&Field::rationals(), 3));
        assert!(splits_completely(&Field::cyclotomic(3).unwrap(), 3));
        assert!(splits_completely(&Field::cyclotomic(3).unwrap(), 6));
        assert!(!splits_completely(&Field::cyclotomic(4).unwrap(), 3));
    }

    #[test]
    fn enough_roots_examples() {
        assert!(enough_roots_of_unity(&Field::prime(2).unwrap(), &[2, 1]));
        assert!(enough_roots_of_unity(&Field::rationals(), &[2, 1]));
        assert!(!enough_roots_of_unity(&Field::rationals(), &[3]));
    }

    #[test]
    fn multiplicative_group_order() {
        for f in [
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::extension(2, 3).unwrap(),
            Field::extension(3, 2).unwrap(),
        ] {
            let q = f.order().unwrap() as u64;
            for x in f.enumerate().unwrap() {
                if !f.is_zero(&x) {
                    assert_eq!(f.pow(&x, q - 1), f.one());
                }
            }
        }
    }

    #[test]
    fn inverses_in_extension() {
        let f = Field::extension(3, 2).unwrap();
        for x in f.enumerate().unwrap() {
            if f.is_zero(&x) {
                continue;
            }
            assert_eq!(f.mul(&x, &f.inv(&x)), f.one());
        }
    }

    #[test]
    fn inverses_in_cyclotomic() {
        let f = Field::cyclotomic(5).unwrap();
        let mut rng = crate::rng::Rng::new(3);
        for _ in 0..20 {
            let x = f.random(&mut rng);
            if f.is_zero(&x) {
                continue;
            }
            assert_eq!(f.mul(&x, &f.inv(&x)), f.one());
        }
    }

    #[test]
    fn splits_agrees_with_bruteforce_root_count() {
        // For all finite fields of order <= 81 and n <= 12, compare against
        // na\u{ef}ve root counting with multiplicity via repeated division.
        let mut fields = Vec::new();
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79] {
            fields.push(Field::prime(p).unwrap());
        }
        for (p, k) in [(2u64, 2u64), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (7, 2)] {
            fields.push(Field::extension(p, k).unwrap());
        }
        for f in &fields {
            if f.order().unwrap() > 81 {
                continue;
            }
            for n in 1..=12u64 {
                // brute force: count roots with multiplicity via division
                let mut count = 0u64;
                let mut poly: Vec<Elem> = vec![f.zero(); n as usize + 1];
                poly[0] = f.neg(&f.one());
                poly[n as usize] = f.one();
                for r in f.enumerate().unwrap() {
                    loop {
                        let mut val = f.zero();
                        for c in poly.iter().rev() {
                            val = f.add(&f.mul(&val, &r), c);
                        }
                        if !f.is_zero(&val) || poly.len() == 1 {
                            break;
                        }
                        let mut q = vec![f.zero(); poly.len() - 1];
                        let mut carry = f.zero();
                        for i in (0..poly.len() - 1).rev() {
                            let c = f.add(&poly[i + 1], &carry);
                            carry = f.mul(&c, &r);
                            q[i] = c;
                        }
                        poly = q;
                        count += 1;
                    }
                }
                assert_eq!(splits_completely(f, n), count == n, "field {} n={}", f.describe(), n);
            }
        }
    }
}
