//! Exact arithmetic in GF(p^m).
//!
//! Elements are integer encodings whose base-`p` digits are the coefficients of
//! the representing polynomial, constant term first. Prime fields use direct
//! modular arithmetic; extension fields carry discrete-log tables built from the
//! smallest primitive element.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Integer-encoded field element.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Field operations accepted by [`FieldCtx::arith`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
    /// Raise the first operand to the exponent carried by the second operand's encoding.
    Pow,
}

/// The serializable description of a field: `{p, m, modulus}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

/// Discrete-log tables relative to a fixed primitive element.
#[derive(Debug)]
struct LogTables {
    /// `exp[i]` is the encoding of `g^i`, for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; entry 0 is unused.
    log: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<LogTables>,
    primitive: u32,
}

/// An immutable, cheaply clonable finite field context.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.inner.p)
            .field("m", &self.inner.m)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Conway polynomials for the small fields, coefficients constant term first.
/// GF(2^6) deliberately uses x^6 + x + 1 instead of its Conway polynomial.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

fn checked_order(p: u32, m: u32) -> Result<u32> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q *= p as u64;
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge { p, m });
        }
    }
    Ok(q as u32)
}

/// The built-in modulus for GF(p^m): a tabulated polynomial when present,
/// otherwise the first primitive polynomial in coefficient-counter order.
pub fn builtin_modulus(p: u32, m: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidParameters("extension degree must be at least 1".into()));
    }
    checked_order(p, m)?;
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    if let Some((_, _, coeffs)) = BUILTIN_MODULI.iter().find(|(bp, bm, _)| *bp == p && *bm == m) {
        return Ok(coeffs.to_vec());
    }
    let prime = FieldCtx::prime_field(p);
    poly::first_primitive_modulus(&prime, m as usize)
        .map(|c| c.into_iter().map(FieldElement::value).collect())
        .ok_or(Error::NoBuiltinModulus { p, m })
}

impl FieldCtx {
    /// Builds GF(p^m). When `modulus` is `None` the built-in modulus is used.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameters("extension degree must be at least 1".into()));
        }
        let q = checked_order(p, m)?;
        let modulus = match modulus {
            Some(c) => {
                validate_modulus(p, m, c)?;
                c.to_vec()
            }
            None => builtin_modulus(p, m)?,
        };
        if m == 1 {
            let mut inner = Inner { p, m, q, modulus, tables: None, primitive: 1 };
            inner.primitive = smallest_prime_root(p);
            return Ok(FieldCtx { inner: Arc::new(inner) });
        }
        let (tables, primitive) = build_tables(p, m, q, &modulus);
        Ok(FieldCtx { inner: Arc::new(Inner { p, m, q, modulus, tables: Some(tables), primitive }) })
    }

    /// GF(q) for a prime power `q`, using the built-in modulus.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, m, None)
    }

    /// The prime field GF(p); panics if `p` is not prime.
    pub(crate) fn prime_field(p: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        let inner = Inner { p, m: 1, q: p, modulus: vec![0, 1], tables: None, primitive: smallest_prime_root(p) };
        FieldCtx { inner: Arc::new(inner) }
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        Self::new(spec.p, spec.m, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.inner.p, m: self.inner.m, modulus: self.inner.modulus.clone() }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// `(exp, log)` tables for extension fields; `None` for prime fields.
    pub fn log_tables(&self) -> Option<(&[u32], &[u32])> {
        self.inner.tables.as_ref().map(|t| (t.exp.as_slice(), t.log.as_slice()))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Validates an integer encoding.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.inner.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.inner.q })
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if inner.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= inner.p { s - inner.p } else { s });
        }
        let p = inner.p;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 || a.0 == 0 {
            return a;
        }
        if inner.m == 1 {
            return FieldElement(inner.p - a.0);
        }
        let p = inner.p;
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            let d = x % p;
            out += ((p - d) % p) * place;
            place *= p;
            x /= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        match &inner.tables {
            None => FieldElement(((a.0 as u64 * b.0 as u64) % inner.p as u64) as u32),
            Some(t) => {
                let n = inner.q - 1;
                let e = t.log[a.0 as usize] + t.log[b.0 as usize];
                FieldElement(t.exp[(if e >= n { e - n } else { e }) as usize])
            }
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        Ok(match &inner.tables {
            None => self.pow(a, (inner.p - 2) as u64),
            Some(t) => {
                let n = inner.q - 1;
                let l = t.log[a.0 as usize];
                FieldElement(t.exp[((n - l) % n) as usize])
            }
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        match &inner.tables {
            Some(t) => {
                let n = (inner.q - 1) as u64;
                let l = t.log[a.0 as usize] as u64;
                FieldElement(t.exp[((l * (e % n)) % n) as usize])
            }
            None => {
                let p = inner.p as u64;
                let (mut base, mut acc, mut e) = (a.0 as u64 % p, 1u64, e);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                FieldElement(acc as u32)
            }
        }
    }

    /// Dispatches a single field operation by name.
    pub fn arith(&self, op: FieldOp, a: FieldElement, b: Option<FieldElement>) -> Result<FieldElement> {
        self.element(a.0)?;
        if let Some(b) = b {
            self.element(b.0)?;
        }
        let rhs = || b.ok_or(Error::MissingOperand);
        match op {
            FieldOp::Add => Ok(self.add(a, rhs()?)),
            FieldOp::Sub => Ok(self.sub(a, rhs()?)),
            FieldOp::Mul => Ok(self.mul(a, rhs()?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow => Ok(self.pow(a, rhs()?.0 as u64)),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut order = (self.inner.q - 1) as u64;
        for r in prime_factors(order) {
            while order.is_multiple_of(r) && self.pow(a, order / r) == FieldElement::ONE {
                order /= r;
            }
        }
        Ok(order)
    }

    /// The smallest encoding whose multiplicative order is q - 1.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement(self.inner.primitive)
    }

    /// Base-p digits of the encoding, constant term first, length m.
    pub fn element_to_vector(&self, a: FieldElement) -> Vec<u32> {
        let p = self.inner.p;
        let mut x = a.0;
        (0..self.inner.m)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    /// Inverse of [`FieldCtx::element_to_vector`].
    pub fn vector_to_element(&self, digits: &[u32]) -> Result<FieldElement> {
        let p = self.inner.p;
        if digits.len() != self.inner.m as usize {
            return Err(Error::ShapeMismatch(format!("expected {} digits, got {}", self.inner.m, digits.len())));
        }
        let mut out = 0u32;
        for &d in digits.iter().rev() {
            if d >= p {
                return Err(Error::ElementOutOfRange { value: d, q: p });
            }
            out = out * p + d;
        }
        Ok(FieldElement(out))
    }
}

/// `(p, m)` with `p^m = q`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn smallest_prime_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = (p - 1) as u64;
    let factors = prime_factors(n);
    let f = FieldCtx { inner: Arc::new(Inner { p, m: 1, q: p, modulus: vec![0, 1], tables: None, primitive: 1 }) };
    (2..p)
        .find(|&g| factors.iter().all(|r| f.pow(FieldElement(g), n / r) != FieldElement::ONE))
        .expect("every prime field has a primitive root")
}

fn validate_modulus(p: u32, m: u32, coeffs: &[u32]) -> Result<()> {
    if coeffs.len() != m as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients for degree {m}, got {}",
            m + 1,
            coeffs.len()
        )));
    }
    if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {c} not reduced mod {p}")));
    }
    if coeffs[m as usize] != 1 {
        return Err(Error::InvalidModulus("modulus is not monic".into()));
    }
    if m >= 2 {
        let prime = FieldCtx::prime_field(p);
        let f: Vec<FieldElement> = coeffs.iter().map(|&c| FieldElement(c)).collect();
        if !poly::is_irreducible(&prime, &f) {
            return Err(Error::InvalidModulus(format!("{coeffs:?} is reducible over GF({p})")));
        }
    }
    Ok(())
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> (LogTables, u32) {
    let prime = FieldCtx::prime_field(p);
    let f: Vec<FieldElement> = modulus.iter().map(|&c| FieldElement(c)).collect();
    let to_poly = |enc: u32| -> Vec<FieldElement> {
        let mut x = enc;
        let mut out: Vec<FieldElement> = (0..m)
            .map(|_| {
                let d = x % p;
                x /= p;
                FieldElement(d)
            })
            .collect();
        poly::trim(&mut out);
        out
    };
    let from_poly = |c: &[FieldElement]| -> u32 { c.iter().rev().fold(0u32, |acc, d| acc * p + d.0) };

    let n = (q - 1) as u64;
    let factors = prime_factors(n);
    let generator = (2..q)
        .find(|&g| {
            let gp = to_poly(g);
            factors.iter().all(|r| {
                let e = poly::pow_mod(&prime, &gp, n / r, &f);
                !(e.len() == 1 && e[0] == FieldElement::ONE)
            })
        })
        .expect("an irreducible modulus yields a cyclic multiplicative group");

    let gp = to_poly(generator);
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![0u32; q as usize];
    let mut cur = vec![FieldElement::ONE];
    for i in 0..n as u32 {
        let enc = from_poly(&cur);
        exp.push(enc);
        log[enc as usize] = i;
        cur = poly::mul_mod(&prime, &cur, &gp, &f);
    }
    (LogTables { exp, log }, generator)
}
