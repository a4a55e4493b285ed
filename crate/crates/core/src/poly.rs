//! Dense arbitrary-precision integer polynomials.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial stored highest degree first: `coeffs[k]` multiplies
/// `x^(deg - k)`. The zero polynomial has no coefficients; arithmetic results
/// never carry leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one)
    }

    /// Coefficient of `x^power` (zero beyond the degree).
    pub fn coeff_of_power(&self, power: usize) -> BigInt {
        match self.degree() {
            Some(d) if power <= d => self.coeffs[d - power].clone(),
            _ => BigInt::zero(),
        }
    }

    /// Multiplicity of the root 0, i.e. the number of trailing zero
    /// coefficients. Zero for the zero polynomial.
    pub fn root_zero_multiplicity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `x^s`. The low `s` coefficients must be zero.
    pub fn deflate(&self, s: usize) -> Self {
        assert!(s <= self.root_zero_multiplicity() || self.is_zero(), "x^{s} does not divide");
        let keep = self.coeffs.len().saturating_sub(s);
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Multiplies by `x^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(BigInt::zero()).take(s));
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let Some(d) = self.degree() else { return Self::zero() };
        Self::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(d - k))
                .collect(),
        )
    }

    /// Horner evaluation in complex double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Coefficients of `p(i t)` as Gaussian integers `(re, im)`, highest
    /// power of `t` first.
    pub fn on_imaginary_axis(&self) -> Vec<(BigInt, BigInt)> {
        let Some(d) = self.degree() else { return Vec::new() };
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| match (d - k) % 4 {
                0 => (c.clone(), BigInt::zero()),
                1 => (BigInt::zero(), c.clone()),
                2 => (-c, BigInt::zero()),
                _ => (BigInt::zero(), -c),
            })
            .collect()
    }

    /// The polynomial with absolute-valued coefficients, evaluated at `r`.
    /// Bounds `|p(z)|` for `|z| = r`.
    pub fn magnitude_bound(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .fold(0.0, |acc, c| acc * r + to_f64(c).abs())
    }
}

pub(crate) fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

fn aligned_op(a: &IntPolynomial, b: &IntPolynomial, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPolynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = BigInt::zero();
    let (pad_a, pad_b) = (len - a.coeffs.len(), len - b.coeffs.len());
    IntPolynomial::new(
        (0..len)
            .map(|k| {
                let x = if k < pad_a { &zero } else { &a.coeffs[k - pad_a] };
                let y = if k < pad_b { &zero } else { &b.coeffs[k - pad_b] };
                op(x, y)
            })
            .collect(),
    )
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        aligned_op(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        aligned_op(self, rhs, |x, y| x - y)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Expansion of `num(z) / den(z)` in powers of `1/z`: returns `c_0..c_{count-1}`
/// with `num/den = sum_k c_k z^(-k-1)`.
///
/// `den` must be monic and `deg num < deg den`; the division is then exact
/// over the integers.
pub fn laurent_at_infinity(num: &IntPolynomial, den: &IntPolynomial, count: usize) -> Result<Vec<BigInt>> {
    if !den.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = den.degree().unwrap_or(0);
    let top = |k: usize| -> BigInt {
        // coefficient of z^(d-1-k) in num
        match (d.checked_sub(1 + k), num.degree()) {
            (Some(power), Some(_)) => num.coeff_of_power(power),
            _ => BigInt::zero(),
        }
    };
    assert!(num.degree().map_or(true, |nd| nd < d), "numerator degree must be below denominator degree");
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut c = top(k);
        for j in 1..=k.min(d) {
            c -= &den.coeffs[j] * &out[k - j];
        }
        out.push(c);
    }
    Ok(out)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else { return f.write_str("0") };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = d - k;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            if !abs.is_one() || power == 0 {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
