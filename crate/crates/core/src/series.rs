//! Generating functions for the summand counts `s_d`, and the complexity
//! numbers derived from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::RunComposition;
use crate::error::{Error, Result};

/// Dense integer polynomial in `u`; `coeffs[i]` is the coefficient of `u^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![c])
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    /// `a + b·u`.
    pub fn linear(a: i64, b: i64) -> Self {
        IntPolynomial::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, u: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(u)
                .and_then(|x| x.checked_add(c))
                .ok_or(Error::Overflow("polynomial evaluation"))
        })
    }

    pub fn add(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .ok_or(Error::Overflow("polynomial addition"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product keeping only powers `≤ max_power`.
    pub fn mul_truncated(&self, other: &IntPolynomial, max_power: usize) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_power.saturating_add(1));
        let mut out = vec![0i64; len];
        for (i, &a) in self.coeffs.iter().enumerate().take(len) {
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                let term = a.checked_mul(b).ok_or(Error::Overflow("polynomial product"))?;
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    pub fn scale(&self, c: i64) -> Result<IntPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::Overflow("polynomial scaling")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn pow(&self, e: u32) -> Result<IntPolynomial> {
        (0..e).try_fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// Exact division by an integer; fails if any coefficient is not divisible.
    pub fn div_exact(&self, c: i64) -> Result<IntPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                if c != 0 && a % c == 0 {
                    Ok(a / c)
                } else {
                    Err(Error::Internal(format!("{a} is not divisible by {c}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }

    /// Multiplicity of `u = 1` as a root.
    pub fn root_multiplicity_at_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain("zero polynomial has every root".into()));
        }
        let mut p = self.coeffs.clone();
        let mut mult = 0;
        loop {
            // Synthetic division by (u - 1): quotient and remainder p(1).
            let mut q = vec![0i64; p.len().saturating_sub(1)];
            let mut carry = 0i64;
            for i in (0..p.len()).rev() {
                carry = carry
                    .checked_add(p[i])
                    .ok_or(Error::Overflow("synthetic division"))?;
                if i > 0 {
                    q[i - 1] = carry;
                }
            }
            if carry != 0 {
                return Ok(mult);
            }
            mult += 1;
            p = q;
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "u")?,
                (1, _) => write!(f, "{a}u")?,
                (_, 1) => write!(f, "u^{i}")?,
                _ => write!(f, "{a}u^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The first `truncation + 1` coefficients of a power series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    pub coeffs: Vec<i64>,
    pub truncation: usize,
}

impl TruncatedSeries {
    fn from_poly(p: &IntPolynomial, truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=truncation).map(|i| p.coeff(i)).collect(),
            truncation,
        }
    }

    /// Product of two series truncated at the smaller order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let t = self.truncation.min(other.truncation);
        let p = IntPolynomial::new(self.coeffs.clone())
            .mul_truncated(&IntPolynomial::new(other.coeffs.clone()), t)?;
        Ok(TruncatedSeries::from_poly(&p, t))
    }

    /// Divides by `(1 − u)^m` as `m` rounds of prefix sums.
    pub fn divide_by_one_minus_u(&self, m: usize) -> Result<TruncatedSeries> {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..m {
            let mut acc = 0i64;
            for c in coeffs.iter_mut() {
                acc = acc.checked_add(*c).ok_or(Error::Overflow("series prefix sum"))?;
                *c = acc;
            }
        }
        Ok(TruncatedSeries {
            coeffs,
            truncation: self.truncation,
        })
    }
}

/// `f_0 = f_1 = 1`, `f_{2k} = (1−u)f_{2k−1} + u f_{2k−2}`,
/// `f_{2k+1} = f_{2k} + u f_{2k−1}`.
pub fn f_poly(r: usize) -> Result<IntPolynomial> {
    let one_minus_u = IntPolynomial::linear(1, -1);
    let u = IntPolynomial::linear(0, 1);
    let mut prev = IntPolynomial::one(); // f_{s-2}
    let mut cur = IntPolynomial::one(); // f_{s-1}
    if r < 2 {
        return Ok(IntPolynomial::one());
    }
    for s in 2..=r {
        let next = if s % 2 == 0 {
            one_minus_u.mul(&cur)?.add(&u.mul(&prev)?)?
        } else {
            cur.add(&u.mul(&prev)?)?
        };
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as i64
}

/// Closed form via `p(u) = 1 + 2u − 3u²`:
///
/// * `2^k f_{2k} = Σ_{i even} [C(k,i)(u+1) + C(k,i+1)(1−u)] (u+1)^{k−i−1} p^{i/2}`
/// * `2^k f_{2k+1} = Σ_{i even} C(k+1,i+1) (u+1)^{k−i} p^{i/2}`
///
/// At `i = k` in the even case the bracket reduces to `(u+1)`, cancelling the
/// negative power.
pub fn f_poly_closed(r: usize) -> Result<IntPolynomial> {
    let k = (r / 2) as u64;
    let p = IntPolynomial::new(vec![1, 2, -3]);
    let u_plus_1 = IntPolynomial::linear(1, 1);
    let one_minus_u = IntPolynomial::linear(1, -1);
    let mut sum = IntPolynomial::zero();
    for i in (0..=k).step_by(2) {
        let p_pow = p.pow((i / 2) as u32)?;
        let term = if r % 2 == 0 {
            let mut bracket = u_plus_1
                .pow((k - i) as u32)?
                .scale(binomial(k, i))?;
            if i < k {
                let second = one_minus_u
                    .mul(&u_plus_1.pow((k - i - 1) as u32)?)?
                    .scale(binomial(k, i + 1))?;
                bracket = bracket.add(&second)?;
            }
            bracket.mul(&p_pow)?
        } else {
            u_plus_1
                .pow((k - i) as u32)?
                .scale(binomial(k + 1, i + 1))?
                .mul(&p_pow)?
        };
        sum = sum.add(&term)?;
    }
    let two_k = 1i64
        .checked_shl(k as u32)
        .filter(|_| k < 63)
        .ok_or(Error::Overflow("2^k"))?;
    sum.div_exact(two_k)
        .map_err(|e| Error::Internal(format!("closed form for f_{r} not integral: {e}")))
}

/// `f_π = Π f_{π_i}`.
pub fn f_product(pi: &RunComposition) -> Result<IntPolynomial> {
    pi.parts()
        .iter()
        .try_fold(IntPolynomial::one(), |acc, &r| acc.mul(&f_poly(r)?))
}

/// `(n − o)/2 = Σ ⌊π_i/2⌋`.
pub fn pole_order(pi: &RunComposition) -> usize {
    pi.parts().iter().map(|&p| p / 2).sum()
}

/// `s_0, …, s_D` of `S_π(u) = f_π(u) / (1 − u)^{(n−o)/2}`.
pub fn series_coeffs(pi: &RunComposition, max_degree: usize) -> Result<TruncatedSeries> {
    let numerator = pi
        .parts()
        .iter()
        .try_fold(IntPolynomial::one(), |acc, &r| {
            acc.mul_truncated(&f_poly(r)?, max_degree)
        })?;
    TruncatedSeries::from_poly(&numerator, max_degree).divide_by_one_minus_u(pole_order(pi))
}

/// Growth rate of the summand counts: `(n − o)/2`.
pub fn z_complexity(pi: &RunComposition) -> usize {
    let n = pi.total();
    let o = pi.odd_parts();
    (n - o) / 2
}

fn check_parity(n: usize, o: usize) -> Result<()> {
    if o > n || (n - o) % 2 != 0 {
        return Err(Error::Domain(format!(
            "need 0 ≤ o ≤ n with n − o even (n={n}, o={o})"
        )));
    }
    Ok(())
}

/// `C(n,2) − C(o,2)`.
pub fn complexity(n: usize, o: usize) -> Result<usize> {
    check_parity(n, o)?;
    Ok(n * n.saturating_sub(1) / 2 - o * o.saturating_sub(1) / 2)
}

/// `l(2n − 2l − 1)`, the dimension of skew-symmetric `n × n` matrices of
/// rank at most `2l`.
pub fn rank_variety_dim(n: usize, l: usize) -> Result<usize> {
    if 2 * l > n {
        return Err(Error::Domain(format!("need 0 ≤ 2l ≤ n (n={n}, l={l})")));
    }
    if l == 0 {
        return Ok(0);
    }
    Ok(l * (2 * n - 2 * l - 1))
}

/// `(n − o)/2`.
pub fn f_support_dim(n: usize, o: usize) -> Result<usize> {
    check_parity(n, o)?;
    Ok((n - o) / 2)
}

/// Pole order of `S_π` at `u = 1` after cancelling common factors with the
/// numerator.
pub fn growth_exponent(pi: &RunComposition) -> Result<usize> {
    let cancelled = f_product(pi)?.root_multiplicity_at_one()?;
    Ok(pole_order(pi).saturating_sub(cancelled))
}
