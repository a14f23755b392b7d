//! Exact polynomials in one parameter `q` with integer coefficients.
//!
//! Coefficients are 64-bit and every operation is checked: an overflow
//! panics instead of wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::ParseError;

/// A polynomial in `q`, stored in ascending powers without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

/// Returned by [`QPoly::div_exact`] when the quotient is not a polynomial
/// with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("({dividend}) is not divisible by ({divisor})")]
pub struct NotDivisible {
    pub dividend: QPoly,
    pub divisor: QPoly,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("QPoly coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("QPoly coefficient overflow")
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The polynomial `c * q^e`.
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// `q` itself.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    /// `-q`.
    pub fn neg_q() -> Self {
        QPoly::monomial(-1, 1)
    }

    /// `1 - q`.
    pub fn one_minus_q() -> Self {
        QPoly::from_coeffs(vec![1, -1])
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        QPoly::from_coeffs(vec![-1, 1])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^e` (zero beyond the degree).
    pub fn coeff(&self, e: usize) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, v: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i64, |acc, &c| checked_add(checked_mul(acc, v), c))
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: i64) -> Self {
        QPoly::from_coeffs(self.coeffs.iter().map(|&a| checked_mul(a, c)).collect())
    }

    /// Exact division: returns `c` with `divisor * c == self`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, NotDivisible> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let fail = || NotDivisible {
            dividend: self.clone(),
            divisor: divisor.clone(),
        };
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(fail());
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return Err(fail());
            }
            let c = top / lead;
            quot[k] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = checked_add(rem[k + i], -checked_mul(c, d));
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return Err(fail());
        }
        Ok(QPoly::from_coeffs(quot))
    }
}

/// Gaussian binomial coefficient `[n, k]_q`, zero outside `0 <= k <= n`.
///
/// Built row by row from `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k as usize > n {
        return QPoly::zero();
    }
    let k = k as usize;
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[j - 1].clone() } else { QPoly::zero() };
            let right = if j < m {
                &QPoly::monomial(1, j) * &row[j]
            } else {
                QPoly::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k)
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs(
            (0..n)
                .map(|i| checked_add(self.coeff(i), rhs.coeff(i)))
                .collect(),
        )
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = checked_add(*a, b);
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self += &(-rhs);
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = checked_add(out[i + j], checked_mul(a, b));
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = ParseError;

    /// Accepts the rendering grammar: `1 - 2*q + q^2`, `-q`, `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| ParseError::new("polynomial", s, msg);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let bytes = compact.as_bytes();
        let mut acc = QPoly::zero();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = 1i64;
            match bytes[pos] {
                b'+' if !first => pos += 1,
                b'-' => {
                    sign = -1;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(err("expected '+' or '-' between terms")),
            }
            first = false;
            let end = compact[pos..]
                .find(['+', '-'])
                .map(|i| pos + i)
                .unwrap_or(bytes.len());
            let term = &compact[pos..end];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef, power) = match term.find('q') {
                None => (
                    term.parse::<i64>().map_err(|_| err("bad coefficient"))?,
                    0usize,
                ),
                Some(qi) => {
                    let head = term[..qi].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        1
                    } else {
                        head.parse::<i64>().map_err(|_| err("bad coefficient"))?
                    };
                    let tail = &term[qi + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else if let Some(p) = tail.strip_prefix('^') {
                        p.parse::<usize>().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("unexpected text after q"));
                    };
                    (coef, power)
                }
            };
            acc += &QPoly::monomial(checked_mul(sign, coef), power);
            pos = end;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, -1]) + p(&[0, 1]), QPoly::one());
        assert_eq!(QPoly::zero() + p(&[3, 0, 2]), p(&[3, 0, 2]));
        assert_eq!(p(&[1, -1]) + p(&[1, -1]), p(&[2, -2]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, -1]) * p(&[1, -1]), p(&[1, -2, 1]));
        assert_eq!(p(&[1, -1]) * p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(QPoly::neg_q().pow(2) * p(&[1, -1]), p(&[0, 0, 1, -1]));
    }

    #[test]
    fn power_examples() {
        assert_eq!(QPoly::q_minus_one().pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(p(&[4, 5]).pow(0), QPoly::one());
        assert_eq!(QPoly::neg_q().pow(2), p(&[0, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, -2, 1]).eval_int(1), 0);
        assert_eq!(p(&[1, -1]).eval_int(0), 1);
        assert_eq!(QPoly::monomial(1, 3).eval_int(2), 8);
    }

    /// Independent route: the factorial quotient `[n]! / ([k]! [n-k]!)`
    /// evaluated with exact division.
    fn q_binomial_by_factorials(n: usize, k: usize) -> QPoly {
        let qint = |i: usize| QPoly::from_coeffs(vec![1; i]);
        let fact = |m: usize| (1..=m).fold(QPoly::one(), |acc, i| &acc * &qint(i));
        let den = &fact(k) * &fact(n - k);
        fact(n).div_exact(&den).unwrap()
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 0), QPoly::one());
        assert_eq!(q_binomial(3, 4), QPoly::zero());
        assert_eq!(q_binomial(3, -1), QPoly::zero());
    }

    #[test]
    fn q_binomial_matches_factorial_quotient() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k as i64), q_binomial_by_factorials(n, k));
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_and_q_one() {
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        for n in 0..=10usize {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k as i64), q_binomial(n, (n - k) as i64));
                assert_eq!(
                    q_binomial(n, k as i64).eval_int(1) as u64,
                    binom(n as u64, k as u64)
                );
            }
        }
    }

    #[test]
    fn div_exact_examples() {
        let omq = QPoly::one_minus_q();
        assert_eq!(p(&[1, 0, -1]).div_exact(&omq).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, 1, -1]).div_exact(&omq).unwrap(), QPoly::q());
        assert!(QPoly::one().div_exact(&omq).is_err());
        assert!(p(&[1, 2]).div_exact(&p(&[0, 2])).is_err());
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "1 - 2*q + q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::neg_q().to_string(), "-q");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3*q^2");
        assert_eq!("1 - 2*q + q^2".parse::<QPoly>().unwrap(), p(&[1, -2, 1]));
        assert_eq!(" -q ".parse::<QPoly>().unwrap(), QPoly::neg_q());
        assert_eq!("0".parse::<QPoly>().unwrap(), QPoly::zero());
        assert!("1 + ".parse::<QPoly>().is_err());
        assert!("x".parse::<QPoly>().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let _ = QPoly::constant(i64::MAX) + QPoly::one();
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..=20, 0..=9).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn canonical_cancellation(a in small_poly()) {
            prop_assert!((&a + &(-&a)).coeffs().is_empty());
        }

        #[test]
        fn render_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
