//! Exact combinatorial primitives.
//!
//! Everything here works on unbounded naturals. Counts are obtained two
//! independent ways: by extracting a coefficient from a product of
//! truncated geometric series, and by the stars-and-bars closed form.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Unbounded non-negative integer used for every exact count.
pub type Natural = BigUint;

/// `n` choose `k`, exactly. Zero when `k > n`.
///
/// Uses the multiplicative formula; after step `i` the running value is
/// `C(n - k + i, i)`, so every division is exact.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let base = n - k;
    let mut acc = Natural::one();
    for i in 1..=k {
        acc *= base + i;
        acc /= i;
    }
    acc
}

/// Polynomial with natural coefficients, kept only up to `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    coefficients: Vec<Natural>,
}

impl TruncatedPolynomial {
    /// The zero polynomial truncated at `max_degree`.
    pub fn zero(max_degree: usize) -> Self {
        TruncatedPolynomial {
            coefficients: vec![Natural::zero(); max_degree + 1],
        }
    }

    /// The constant `1` truncated at `max_degree`.
    pub fn one(max_degree: usize) -> Self {
        let mut p = Self::zero(max_degree);
        p.coefficients[0] = Natural::one();
        p
    }

    /// Builds a polynomial from coefficients, padding or truncating to
    /// `max_degree + 1` entries.
    pub fn from_coefficients<I>(coefficients: I, max_degree: usize) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Natural>,
    {
        let mut coefficients: Vec<Natural> = coefficients
            .into_iter()
            .take(max_degree + 1)
            .map(Into::into)
            .collect();
        coefficients.resize(max_degree + 1, Natural::zero());
        TruncatedPolynomial { coefficients }
    }

    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficient of `x^degree`; zero past the truncation point.
    pub fn coefficient(&self, degree: usize) -> Natural {
        self.coefficients
            .get(degree)
            .cloned()
            .unwrap_or_else(Natural::zero)
    }

    pub fn coefficients(&self) -> &[Natural] {
        &self.coefficients
    }

    /// Product truncated at `max_degree`.
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero(max_degree);
        for (i, a) in self.coefficients.iter().enumerate().take(max_degree + 1) {
            if a.is_zero() {
                continue;
            }
            let reach = (max_degree - i).min(other.max_degree());
            for (j, b) in other.coefficients[..=reach].iter().enumerate() {
                if !b.is_zero() {
                    out.coefficients[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// Convolution of `a` and `b`, keeping degrees `0..=max_degree`.
pub fn poly_mul_truncated(
    a: &TruncatedPolynomial,
    b: &TruncatedPolynomial,
    max_degree: usize,
) -> TruncatedPolynomial {
    a.mul_truncated(b, max_degree)
}

/// `x^min_power + x^(min_power+1) + ... + x^max_degree`.
///
/// A `min_power` past `max_degree` yields the zero polynomial.
pub fn geometric_block(min_power: usize, max_degree: usize) -> TruncatedPolynomial {
    let mut p = TruncatedPolynomial::zero(max_degree);
    for c in p.coefficients.iter_mut().skip(min_power) {
        *c = Natural::one();
    }
    p
}

/// A factor `(x^min_power + ... )^multiplicity` in a generating-function
/// product.
///
/// `min_power = 0` models a gap that may be empty; `min_power = 1` a gap that
/// must hold at least one number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorBlock {
    pub min_power: usize,
    pub multiplicity: usize,
}

impl GeneratorBlock {
    pub fn new(min_power: usize, multiplicity: usize) -> Self {
        GeneratorBlock {
            min_power,
            multiplicity,
        }
    }
}

/// Coefficient of `x^target_degree` in the product of all `blocks`.
///
/// Each block's series is cut at `target_degree`: exponents are never
/// negative, so terms above the target cannot feed back into it.
/// Blocks with multiplicity zero contribute the constant `1`.
pub fn coefficient_of(blocks: &[GeneratorBlock], target_degree: usize) -> Natural {
    let mut product = TruncatedPolynomial::one(target_degree);
    for block in blocks {
        if block.multiplicity == 0 {
            continue;
        }
        let series = geometric_block(block.min_power, target_degree);
        let mut power = series.clone();
        let mut remaining = block.multiplicity;
        // square-and-multiply on the truncated ring
        loop {
            if remaining & 1 == 1 {
                product = product.mul_truncated(&power, target_degree);
            }
            remaining >>= 1;
            if remaining == 0 {
                break;
            }
            power = power.mul_truncated(&power, target_degree);
        }
    }
    product.coefficient(target_degree)
}

/// Number of integer solutions of `v_1 + ... + v_m = total` where
/// `free_vars` variables are `>= 0` and `positive_vars` variables are `>= 1`.
///
/// Stars and bars: shift each positive variable down by one, then
/// `C(total - positive_vars + m - 1, m - 1)` with `m = free_vars + positive_vars`.
/// Zero when the positives alone exceed `total` or when there are no variables
/// and `total > 0`.
pub fn composition_count(total: u64, free_vars: u64, positive_vars: u64) -> Natural {
    let vars = free_vars + positive_vars;
    if total < positive_vars {
        return Natural::zero();
    }
    let slack = total - positive_vars;
    if vars == 0 {
        return if slack == 0 {
            Natural::one()
        } else {
            Natural::zero()
        };
    }
    binomial(slack + vars - 1, vars - 1)
}

/// Natural logarithm of a natural, valid beyond the `f64` range.
pub(crate) fn ln_natural(value: &Natural) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = value.bits();
    if bits <= 1000 {
        return num_traits::ToPrimitive::to_f64(value)
            .expect("fits in f64")
            .ln();
    }
    let shift = bits - 64;
    let top: Natural = value >> shift;
    let top = num_traits::ToPrimitive::to_f64(&top).expect("64-bit head");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
