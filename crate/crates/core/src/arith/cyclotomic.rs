//! Elements of cyclotomic fields Q(ζ_e) in the power basis modulo the e-th
//! cyclotomic polynomial, so that equality is coefficient equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::cyclotomic_polynomial;
use super::Rational;
use crate::error::{usage, Result};

/// Reduction data for one conductor.
#[derive(Debug)]
struct FieldData {
    degree: usize,
    /// ζ^k reduced to the power basis, for k in 0..e.
    powers: Vec<Vec<i64>>,
}

impl FieldData {
    fn new(e: u32) -> Self {
        let modulus = cyclotomic_polynomial(e);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce with x^degree = -Σ modulus[i] x^i
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..degree {
                next[i] -= top * modulus[i];
            }
            cur = next;
        }
        FieldData { degree, powers }
    }
}

fn field(e: u32) -> Arc<FieldData> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = fields.read().unwrap().get(&e) {
        return f.clone();
    }
    let f = Arc::new(FieldData::new(e));
    fields.write().unwrap().entry(e).or_insert(f).clone()
}

/// Degree of the field Q(ζ_e) over Q.
pub fn field_degree(e: u32) -> usize {
    field(e).degree
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let degree = field_degree(conductor);
        Cyclotomic { conductor, coeffs: vec![Rational::zero(); degree] }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_int(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(conductor: u32, q: Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    /// ζ_e^k for any integer k.
    pub fn root_power(conductor: u32, k: i64) -> Self {
        let f = field(conductor);
        let k = k.rem_euclid(conductor as i64) as usize;
        let coeffs = f.powers[k].iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        Cyclotomic { conductor, coeffs }
    }

    /// Builds Σ mult[k] ζ_e^k from integer multiplicities indexed by k in 0..e.
    pub fn from_root_multiplicities(conductor: u32, mult: &[i64]) -> Self {
        let f = field(conductor);
        let mut acc = vec![0i64; f.degree];
        for (k, &m) in mult.iter().enumerate() {
            if m != 0 {
                for (a, &p) in acc.iter_mut().zip(&f.powers[k % conductor as usize]) {
                    *a += m * p;
                }
            }
        }
        Cyclotomic { conductor, coeffs: acc.into_iter().map(|c| Rational::from_integer(c.into())).collect() }
    }

    /// Builds an element from raw power-basis coefficients (length must equal the field degree).
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if conductor == 0 {
            return Err(usage("conductor must be positive"));
        }
        if coeffs.len() != field_degree(conductor) {
            return Err(usage(format!("conductor {conductor} needs {} coefficients, got {}", field_degree(conductor), coeffs.len())));
        }
        Ok(Cyclotomic { conductor, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_integral_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Re-express in a larger field Q(ζ_target); `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if !target.is_multiple_of(self.conductor) {
            return Err(usage(format!("cannot embed conductor {} into {target}", self.conductor)));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let f = field(target);
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[(i * step) % target as usize]) {
                if p != 0 {
                    *o += c * Rational::from_integer(p.into());
                }
            }
        }
        Ok(Cyclotomic { conductor: target, coeffs: out })
    }

    /// Field automorphism ζ ↦ ζ^k; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let e = self.conductor as i64;
        if k.gcd(&e) != 1 {
            return Err(usage(format!("{k} is not a unit modulo {e}")));
        }
        let f = field(self.conductor);
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((i as i64) * k).rem_euclid(e) as usize;
            for (o, &p) in out.iter_mut().zip(&f.powers[idx]) {
                if p != 0 {
                    *o += c * Rational::from_integer(p.into());
                }
            }
        }
        Ok(Cyclotomic { conductor: self.conductor, coeffs: out })
    }

    /// Complex conjugation, ζ ↦ ζ^(e-1).
    pub fn conj(&self) -> Self {
        self.galois(self.conductor as i64 - 1).expect("e - 1 is always a unit")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { conductor: self.conductor, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(usage(format!("conductor mismatch: {} vs {}", self.conductor, other.conductor)));
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let f = field(self.conductor);
        let d = f.degree;
        let e = self.conductor as usize;
        if self.is_integral_coeffs() && other.is_integral_coeffs() {
            // integer fast path: skip per-term gcd normalisation
            let a: Vec<&BigInt> = self.coeffs.iter().map(|c| c.numer()).collect();
            let b: Vec<&BigInt> = other.coeffs.iter().map(|c| c.numer()).collect();
            let mut full = vec![BigInt::zero(); 2 * d - 1];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        full[i + j] += *x * *y;
                    }
                }
            }
            let mut out: Vec<BigInt> = full.drain(..d).collect();
            for (k, c) in full.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (o, &p) in out.iter_mut().zip(&f.powers[(k + d) % e]) {
                    if p != 0 {
                        *o += &c * p;
                    }
                }
            }
            return Cyclotomic { conductor: self.conductor, coeffs: out.into_iter().map(Rational::from_integer).collect() };
        }
        let mut full = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Rational> = full.drain(..d).collect();
        for (k, c) in full.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[(k + d) % e]) {
                if p != 0 {
                    *o += &c * Rational::from_integer(p.into());
                }
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs: out }
    }

    /// Image in F_p under ζ_e ↦ `root`, where `root` is a primitive e-th root of unity mod p.
    /// Denominators must be invertible mod p.
    pub fn reduce_mod(&self, p: u64, root: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        let mut pw = 1u64;
        for c in &self.coeffs {
            let num = c.numer().mod_floor(&pb);
            let den = c.denom().mod_floor(&pb);
            let num: u64 = num.try_into().ok()?;
            let den: u64 = den.try_into().ok()?;
            if den == 0 {
                return None;
            }
            let term = super::modp::mul_mod(num, super::modp::inv_mod(den, p), p);
            acc = (acc + super::modp::mul_mod(term, pw, p)) % p;
            pw = super::modp::mul_mod(pw, root, p);
        }
        Some(acc)
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Operator impls panic on conductor mismatch; use the checked_* forms when that is not an invariant.
impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{i}", self.conductor)?,
                (_, false) => write!(f, "{mag}*z{}^{i}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
