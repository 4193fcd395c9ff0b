//! Exact truncated power-series arithmetic over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] is the finite prefix `c(0), ..., c(precision-1)` of a
//! formal power series in `q`. All arithmetic is exact `BigInt` arithmetic;
//! binary operations truncate to the *minimum* of the operand precisions and
//! never pad. Reading a coefficient past the stored precision is an error
//! ([`SeriesError::PrecisionExceeded`]), not a silent zero.
//!
//! Euler factors `(q^d; q^d)_inf` are generated sparsely from the pentagonal
//! number theorem
//!
//! ```text
//! (q; q)_inf = sum_{k in Z} (-1)^k q^{k(3k-1)/2}
//! ```
//!
//! so each factor has O(sqrt(precision)) nonzero terms. An eta quotient
//! `prod_{d | M} (q^d; q^d)_inf^{r_d}` is then assembled by dense convolution,
//! with negative exponents routed through series inversion of the positive
//! factor.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::divisors;

/// Errors from series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Inversion requires the constant term to be `1` or `-1`; eta factors
    /// always satisfy this, arbitrary integer series need not.
    #[error("constant term {0} is not a unit (expected 1 or -1)")]
    NonUnitConstantTerm(BigInt),
    /// A coefficient beyond the stored precision was requested.
    #[error("coefficient index {index} is outside series precision {precision}")]
    PrecisionExceeded { index: usize, precision: usize },
}

/// A power series known up to (excluding) `q^precision`, with exact integer
/// coefficients. Values are immutable after construction; every operation
/// returns a new series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Wrap an explicit coefficient prefix; precision is the vector length.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        TruncatedSeries {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// The multiplicative identity `1 + 0q + ... + 0q^{precision-1}`.
    pub fn one(precision: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); precision];
        if precision > 0 {
            coeffs[0] = BigInt::one();
        }
        TruncatedSeries { coeffs }
    }

    /// Number of known coefficients.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `q^n`. Fails loudly past the stored precision.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::PrecisionExceeded {
            index: n,
            precision: self.coeffs.len(),
        })
    }

    /// Multiplicative inverse at the same precision, via the recurrence
    /// `b_n = -a_0^{-1} * sum_{j=1..n} a_j b_{n-j}` (with `a_0^{-1} = a_0`
    /// since the constant term is `±1`).
    pub fn invert(&self) -> Result<TruncatedSeries, SeriesError> {
        let precision = self.coeffs.len();
        if precision == 0 {
            // The empty series is its own (vacuous) inverse.
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if !a0.magnitude().is_one() {
            return Err(SeriesError::NonUnitConstantTerm(a0.clone()));
        }
        let mut inv = Vec::with_capacity(precision);
        inv.push(a0.clone());
        for n in 1..precision {
            let mut acc = BigInt::zero();
            for j in 1..=n {
                let aj = &self.coeffs[j];
                if !aj.is_zero() {
                    acc += aj * &inv[n - j];
                }
            }
            inv.push(-a0 * acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Integer power by binary exponentiation; negative exponents invert
    /// first, so they require a unit constant term.
    pub fn pow(&self, e: i64) -> Result<TruncatedSeries, SeriesError> {
        if e == 0 {
            return Ok(TruncatedSeries::one(self.coeffs.len()));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = TruncatedSeries::one(self.coeffs.len());
        let mut power = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &power;
            }
            exp >>= 1;
            if exp > 0 {
                power = &power * &power;
            }
        }
        Ok(result)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated to the minimum operand precision.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let precision = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); precision];
        for (i, a) in self.coeffs.iter().enumerate().take(precision) {
            if a.is_zero() {
                continue;
            }
            for (b, o) in rhs.coeffs[..precision - i].iter().zip(out[i..].iter_mut()) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The Euler factor `(q^delta; q^delta)_inf` truncated to `precision`
/// coefficients, generated from the pentagonal number theorem: the nonzero
/// coefficients are `(-1)^k` at exponents `delta * k(3k-1)/2` for `k in Z`.
pub fn euler_factor(delta: u64, precision: usize) -> TruncatedSeries {
    assert!(delta >= 1, "Euler factor index must be positive");
    let mut coeffs = vec![BigInt::zero(); precision];
    if precision == 0 {
        return TruncatedSeries { coeffs };
    }
    coeffs[0] = BigInt::one();
    let limit = precision as u64;
    for k in 1u64.. {
        // gp(k) = k(3k-1)/2 and gp(-k) = k(3k+1)/2, both with sign (-1)^k.
        let gp_pos = k * (3 * k - 1) / 2;
        if gp_pos.checked_mul(delta).map_or(true, |e| e >= limit) {
            break;
        }
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        coeffs[(gp_pos * delta) as usize] = sign.clone();
        let gp_neg = k * (3 * k + 1) / 2;
        if let Some(e) = gp_neg.checked_mul(delta) {
            if e < limit {
                coeffs[e as usize] = sign;
            }
        }
    }
    TruncatedSeries { coeffs }
}

/// Integer exponents `r_d` indexed by the positive divisors `d` of a level
/// `M`; encodes the eta quotient `prod_{d | M} (q^d; q^d)_inf^{r_d}`.
///
/// Construction enforces that the key set is exactly the divisor set of the
/// level and that at least one exponent is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExponentVectorWire", into = "ExponentVectorWire")]
pub struct ExponentVector {
    level: u64,
    entries: BTreeMap<u64, i64>,
}

/// Construction errors for [`ExponentVector`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExponentVectorError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("expected {expected} exponents for the divisors of {level}, got {got}")]
    LengthMismatch { level: u64, expected: usize, got: usize },
    #[error("exponent keys must be exactly the divisors of {level}; offending key {key}")]
    KeyMismatch { level: u64, key: u64 },
    #[error("all exponents are zero; the empty eta quotient is rejected")]
    AllZero,
}

impl ExponentVector {
    /// Build from an explicit divisor -> exponent map.
    pub fn new(level: u64, entries: BTreeMap<u64, i64>) -> Result<Self, ExponentVectorError> {
        if level == 0 {
            return Err(ExponentVectorError::ZeroLevel);
        }
        let divs = divisors(level);
        for &key in entries.keys() {
            if !divs.contains(&key) {
                return Err(ExponentVectorError::KeyMismatch { level, key });
            }
        }
        for &d in &divs {
            if !entries.contains_key(&d) {
                return Err(ExponentVectorError::KeyMismatch { level, key: d });
            }
        }
        if entries.values().all(|&r| r == 0) {
            return Err(ExponentVectorError::AllZero);
        }
        Ok(ExponentVector { level, entries })
    }

    /// Build from exponents listed against the divisors of `level` in
    /// increasing order, e.g. `from_ordered(3, &[-3, 3])` for `(r_1, r_3)`.
    pub fn from_ordered(level: u64, exponents: &[i64]) -> Result<Self, ExponentVectorError> {
        if level == 0 {
            return Err(ExponentVectorError::ZeroLevel);
        }
        let divs = divisors(level);
        if divs.len() != exponents.len() {
            return Err(ExponentVectorError::LengthMismatch {
                level,
                expected: divs.len(),
                got: exponents.len(),
            });
        }
        Self::new(level, divs.into_iter().zip(exponents.iter().copied()).collect())
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// `(divisor, exponent)` pairs in increasing divisor order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.entries.iter().map(|(&d, &r)| (d, r))
    }

    /// The exponent attached to a divisor of the level.
    pub fn exponent(&self, delta: u64) -> i64 {
        *self
            .entries
            .get(&delta)
            .unwrap_or_else(|| panic!("{delta} is not a divisor of level {}", self.level))
    }

    /// Exponents in increasing divisor order.
    pub fn ordered(&self) -> Vec<i64> {
        self.entries.values().copied().collect()
    }

    /// `sum_d r_d`.
    pub fn exponent_sum(&self) -> i64 {
        self.entries.values().sum()
    }

    /// `sum_d d * r_d`, exact in `i128`.
    pub fn weighted_sum(&self) -> i128 {
        self.entries.iter().map(|(&d, &r)| d as i128 * r as i128).sum()
    }

    /// `prod_d d^{|r_d|}`, used by the 2-adic admissibility condition.
    pub fn abs_power_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&d, &r) in &self.entries {
            acc *= BigUint::from(d).pow(r.unsigned_abs() as u32);
        }
        acc
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.entries.values().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct ExponentVectorWire {
    level: String,
    entries: BTreeMap<String, String>,
}

impl From<ExponentVector> for ExponentVectorWire {
    fn from(v: ExponentVector) -> Self {
        ExponentVectorWire {
            level: v.level.to_string(),
            entries: v
                .entries
                .iter()
                .map(|(d, r)| (d.to_string(), r.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<ExponentVectorWire> for ExponentVector {
    type Error = String;

    fn try_from(w: ExponentVectorWire) -> Result<Self, String> {
        let level: u64 = w.level.parse().map_err(|_| format!("bad level {:?}", w.level))?;
        let mut entries = BTreeMap::new();
        for (d, r) in &w.entries {
            let d: u64 = d.parse().map_err(|_| format!("bad divisor {d:?}"))?;
            let r: i64 = r.parse().map_err(|_| format!("bad exponent {r:?}"))?;
            entries.insert(d, r);
        }
        ExponentVector::new(level, entries).map_err(|e| e.to_string())
    }
}

/// Expand `sum_n c_r(n) q^n = prod_{d | M} (q^d; q^d)_inf^{r_d}` to
/// `precision` coefficients. With `r = (-3, 3)` at level 3 this is the
/// generating function of 3-regular partitions in three colours.
pub fn eta_quotient(r: &ExponentVector, precision: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut acc = TruncatedSeries::one(precision);
    for (delta, exp) in r.iter() {
        if exp == 0 {
            continue;
        }
        let factor = euler_factor(delta, precision).pow(exp)?;
        acc = &acc * &factor;
    }
    Ok(acc)
}
