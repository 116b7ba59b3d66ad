//! Dense univariate polynomials over a [`FieldCtx`], coefficients constant term first.
//!
//! Only what field construction and spread construction need: reduction,
//! modular exponentiation, and irreducibility by trial division.

use crate::gf::{prime_factors, FieldCtx, FieldElement};

/// Drops trailing zero coefficients; the zero polynomial is empty.
pub fn trim(a: &mut Vec<FieldElement>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem(f: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]).expect("leading coefficient is nonzero");
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = f.mul(r[r.len() - 1], lead_inv);
        for (i, &bi) in b.iter().enumerate() {
            let t = f.mul(c, bi);
            r[shift + i] = f.sub(r[shift + i], t);
        }
        trim(&mut r);
    }
    r
}

pub fn mul(f: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub fn mul_mod(f: &FieldCtx, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Vec<FieldElement> {
    rem(f, &mul(f, a, b), m)
}

pub fn pow_mod(f: &FieldCtx, a: &[FieldElement], mut e: u64, m: &[FieldElement]) -> Vec<FieldElement> {
    let mut acc = rem(f, &[FieldElement::ONE], m);
    let mut base = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &base, m);
        }
        base = mul_mod(f, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// Monic polynomials of the given degree, lower coefficients counted with the
/// constant term least significant.
fn monic_of_degree(f: &FieldCtx, degree: usize) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
    let q = f.order() as u64;
    let count = q.pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut c = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            c.push(FieldElement((idx % q) as u32));
            idx /= q;
        }
        c.push(FieldElement::ONE);
        c
    })
}

/// Irreducibility of a polynomial of degree at least 1, by trial division with
/// every monic polynomial of degree at most half its degree.
pub fn is_irreducible(f: &FieldCtx, a: &[FieldElement]) -> bool {
    let mut a = a.to_vec();
    trim(&mut a);
    if a.len() < 2 {
        return false;
    }
    let d = a.len() - 1;
    for e in 1..=d / 2 {
        if monic_of_degree(f, e).any(|g| rem(f, &a, &g).is_empty()) {
            return false;
        }
    }
    true
}

/// First monic irreducible polynomial of the given degree over `f`.
pub fn first_irreducible(f: &FieldCtx, degree: usize) -> Option<Vec<FieldElement>> {
    monic_of_degree(f, degree).find(|g| is_irreducible(f, g))
}

/// First monic polynomial of degree `m` over the prime field `f` for which the
/// class of `x` generates the multiplicative group of the quotient field.
pub fn first_primitive_modulus(f: &FieldCtx, m: usize) -> Option<Vec<FieldElement>> {
    let order = (f.order() as u64).pow(m as u32) - 1;
    let factors = prime_factors(order);
    let x = [FieldElement::ZERO, FieldElement::ONE];
    monic_of_degree(f, m).find(|g| {
        !g[0].is_zero()
            && is_irreducible(f, g)
            && factors.iter().all(|r| {
                let e = pow_mod(f, &x, order / r, g);
                !(e.len() == 1 && e[0] == FieldElement::ONE)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Vec<FieldElement> {
        c.iter().map(|&v| FieldElement(v)).collect()
    }

    #[test]
    fn irreducibility_over_gf2() {
        let f = FieldCtx::prime_field(2);
        assert!(is_irreducible(&f, &p(&[1, 1, 1])));
        assert!(!is_irreducible(&f, &p(&[1, 0, 1])));
        assert!(is_irreducible(&f, &p(&[1, 1, 0, 0, 0, 0, 1])));
        // x^6 + x^3 + 1 is irreducible but not primitive (x has order 9)
        assert!(is_irreducible(&f, &p(&[1, 0, 0, 1, 0, 0, 1])));
        // (x^2 + x + 1)(x^3 + x + 1) = x^5 + x^4 + 1
        assert!(!is_irreducible(&f, &p(&[1, 0, 0, 0, 1, 1])));
    }

    #[test]
    fn first_irreducible_over_extension_field() {
        let f = FieldCtx::new(2, 2, None).unwrap();
        let g = first_irreducible(&f, 2).unwrap();
        assert_eq!(g.len(), 3);
        // no root in GF(4)
        for a in f.elements() {
            let val = g.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, a), c));
            assert!(!val.is_zero());
        }
    }

    #[test]
    fn remainder_matches_hand_division() {
        let f = FieldCtx::prime_field(5);
        // (x^2 + 1) mod (x + 2) = (-2)^2 + 1 = 5 = 0
        assert!(rem(&f, &p(&[1, 0, 1]), &p(&[2, 1])).is_empty());
        assert_eq!(rem(&f, &p(&[3, 0, 1]), &p(&[2, 1])), p(&[2]));
    }
}
