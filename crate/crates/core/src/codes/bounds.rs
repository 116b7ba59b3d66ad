//! Size bounds for t-intersecting codes and partial spreads.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::prime_power;
use crate::subspace::qbinom;

fn check_q(q: u64) -> Result<BigUint> {
    let ok = q >= 2 && u32::try_from(q).ok().and_then(prime_power).is_some();
    if !ok {
        return Err(Error::InvalidParameters(format!("q = {q} is not a prime power")));
    }
    Ok(BigUint::from(q))
}

/// Above this many words a t-intersecting code of dimension k is a sunflower:
/// `((q^k - q^t)/(q - 1))^2 + (q^k - q^t)/(q - 1) + 1`.
pub fn sunflower_bound(q: u64, k: u64, t: u64) -> Result<BigUint> {
    let qb = check_q(q)?;
    if t >= k {
        return Err(Error::InvalidParameters(format!("need t < k, got t = {t}, k = {k}")));
    }
    let w = (qb.pow(k as u32) - qb.pow(t as u32)) / (qb - 1u32);
    Ok(&w * &w + &w + 1u32)
}

/// Frankl–Wilson bound on families of k-subspaces pairwise meeting in dimension at least t.
pub fn fw_bound(q: u64, n: u64, k: u64, t: u64) -> Result<BigUint> {
    check_q(q)?;
    if !(t <= k && k <= n) {
        return Err(Error::InvalidParameters(format!("need t <= k <= n, got t = {t}, k = {k}, n = {n}")));
    }
    Ok(qbinom(n - t, k - t, q).max(qbinom(2 * k - t, k, q)))
}

/// Known bounds on the largest partial k-spread in F_q^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadBounds {
    pub lower: BigUint,
    pub upper: BigUint,
    /// Set only when a known result pins the value.
    pub exact: Option<BigUint>,
    /// Which results produced the numbers.
    pub attribution: String,
}

impl SpreadBounds {
    fn exact(value: BigUint, attribution: &str) -> Self {
        SpreadBounds { lower: value.clone(), upper: value.clone(), exact: Some(value), attribution: attribution.into() }
    }
}

/// `ceil(Ω)` where `2Ω = sqrt(1 + 4 q^k (q^k - q^c)) - (2q^k - 2q^c + 1)`; always `Ω >= 0`.
fn drake_freeman_omega_ceil(qk: &BigUint, qc: &BigUint) -> BigUint {
    let disc = BigUint::one() + BigUint::from(4u32) * qk * (qk - qc);
    let b = BigUint::from(2u32) * qk - BigUint::from(2u32) * qc + 1u32;
    let s = disc.sqrt();
    let twice_floor = &s - &b;
    let floor = &twice_floor / 2u32;
    let exact = &s * &s == disc && (&twice_floor % 2u32).is_zero();
    if exact {
        floor
    } else {
        floor + 1u32
    }
}

pub fn partial_spread_bounds(q: u64, n: u64, k: u64) -> Result<SpreadBounds> {
    let qb = check_q(q)?;
    if !(0 < k && k <= n) {
        return Err(Error::InvalidParameters(format!("need 0 < k <= n, got k = {k}, n = {n}")));
    }
    let qn = qb.pow(n as u32);
    let qk = qb.pow(k as u32);
    let r = n % k;
    if r == 0 {
        return Ok(SpreadBounds::exact((&qn - 1u32) / (&qk - 1u32), "k divides n: Desarguesian spread"));
    }
    if n < 2 * k {
        return Ok(SpreadBounds::exact(BigUint::one(), "2k > n: any two k-subspaces meet"));
    }
    if r == 1 {
        let v = (&qn - &qb) / (&qk - 1u32) - &qb + 1u32;
        return Ok(SpreadBounds::exact(v, "n = 1 mod k: Hong–Patel / Beutelspacher"));
    }
    if q == 2 && k == 3 {
        let c = BigUint::from(2u32).pow(r as u32);
        let v = (&qn - c) / 7u32 - BigUint::from(r);
        return Ok(SpreadBounds::exact(v, "q = 2, k = 3: El-Zanati et al."));
    }
    let qr = qb.pow(r as u32);
    let lower = (&qn - &qk * (&qr - 1u32) - 1u32) / (&qk - 1u32);
    let basic_upper = (&qn - 1u32) / (&qk - 1u32) - 1u32;
    let l = n / k;
    let sum: BigUint = (0..l).map(|i| qb.pow((i * k + r) as u32)).sum();
    let df_upper = sum - drake_freeman_omega_ceil(&qk, &qr) - 1u32;
    let upper = basic_upper.min(df_upper);
    Ok(SpreadBounds {
        lower,
        upper,
        exact: None,
        attribution: "lower: Beutelspacher construction; upper: min(floor((q^n-1)/(q^k-1)) - 1, Drake–Freeman)".into(),
    })
}

/// The largest t-intersecting sunflower in G_q(n, k) has the size of the
/// largest partial (k-t)-spread in G_q(n-t, k-t).
pub fn largest_sunflower_size(q: u64, n: u64, k: u64, t: u64) -> Result<SpreadBounds> {
    if !(t < k && k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k <= n, got t = {t}, k = {k}, n = {n}")));
    }
    partial_spread_bounds(q, n - t, k - t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn sunflower_thresholds() {
        assert_eq!(sunflower_bound(2, 3, 1).unwrap(), big(43));
        assert_eq!(sunflower_bound(2, 1, 0).unwrap(), big(3));
        for (q, k) in [(2u64, 4u64), (3, 3), (4, 2)] {
            let w = q.pow(k as u32 - 1);
            assert_eq!(sunflower_bound(q, k, k - 1).unwrap(), big(w * w + w + 1));
        }
        assert!(sunflower_bound(2, 3, 3).is_err());
        assert!(sunflower_bound(6, 3, 1).is_err());
    }

    #[test]
    fn frankl_wilson() {
        assert_eq!(fw_bound(2, 6, 3, 1).unwrap(), big(155));
        assert_eq!(fw_bound(2, 4, 2, 1).unwrap(), big(7));
        assert_eq!(fw_bound(3, 5, 2, 2).unwrap(), big(1));
        assert!(fw_bound(2, 3, 4, 1).is_err());
    }

    #[test]
    fn exact_spread_values() {
        let exact = |q, n, k| partial_spread_bounds(q, n, k).unwrap().exact.unwrap();
        assert_eq!(exact(2, 4, 2), big(5));
        assert_eq!(exact(2, 5, 2), big(9));
        assert_eq!(exact(2, 8, 3), big(34));
        assert_eq!(exact(2, 3, 2), big(1));
        assert_eq!(exact(2, 5, 3), big(1));
        assert_eq!(exact(3, 4, 2), big(10));
        assert_eq!(exact(2, 7, 3), big(17));
        // sum form of the n = 1 mod k value
        assert_eq!(exact(2, 7, 2), big(2u64.pow(3) + 2u64.pow(5) + 1));
    }

    #[test]
    fn general_case_against_floating_point_oracle() {
        let b = partial_spread_bounds(2, 11, 4).unwrap();
        assert_eq!(b.exact, None);
        assert_eq!(b.lower, big((2048 - 16 * 7 - 1) / 15));
        let (qk, qc) = (16f64, 8f64);
        let omega = ((1.0 + 4.0 * qk * (qk - qc)).sqrt() - (2.0 * qk - 2.0 * qc + 1.0)) / 2.0;
        let df = (136.0 - omega - 1.0).floor() as u64;
        assert_eq!(df, 132);
        assert_eq!(b.upper, big(df.min(2047 / 15 - 1)));
        assert!(b.lower <= b.upper);
    }

    #[test]
    fn omega_rounding() {
        // (q^k, q^c, ceil Ω); 25 and 9 are perfect squares giving Ω = 0 exactly
        for (qk, qc, want) in [(3u64, 1u64, 0u64), (2, 1, 0), (4, 2, 1), (9, 3, 1), (16, 8, 3)] {
            let disc = 1.0 + 4.0 * qk as f64 * (qk - qc) as f64;
            let omega = (disc.sqrt() - (2.0 * qk as f64 - 2.0 * qc as f64 + 1.0)) / 2.0;
            assert!((omega.ceil() as u64 == want) || omega.abs() < 1e-12);
            assert_eq!(drake_freeman_omega_ceil(&big(qk), &big(qc)), big(want));
        }
    }

    #[test]
    fn sunflower_reduction() {
        assert_eq!(largest_sunflower_size(2, 5, 3, 1).unwrap().exact, Some(big(5)));
        assert_eq!(largest_sunflower_size(2, 6, 3, 1).unwrap().exact, Some(big(9)));
        assert_eq!(largest_sunflower_size(3, 7, 3, 0).unwrap(), partial_spread_bounds(3, 7, 3).unwrap());
        assert!(largest_sunflower_size(2, 5, 3, 3).is_err());
    }
}
