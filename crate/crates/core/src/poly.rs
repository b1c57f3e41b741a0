//! Dense univariate polynomials with integer or rational coefficients,
//! stored low degree first with trailing zeros trimmed.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::exact::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 - z^k`
    pub fn one_minus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] -= 1;
        Self::new(c)
    }

    /// `1 + z + ... + z^(k-1)`
    pub fn geometric(k: usize) -> Self {
        Self::new(vec![BigInt::one(); k])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }

    /// Exact division; `None` if `divisor` is zero, the quotient leaves
    /// the integers, or the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let dlead = divisor.coefficients.last()?;
        let dn = divisor.coefficients.len();
        let mut rem = self.coefficients.clone();
        if rem.len() < dn {
            return self.is_zero().then(IntPolynomial::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % dlead).is_zero() {
                return None;
            }
            let q = top / dlead;
            for (i, d) in divisor.coefficients.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPolynomial::new(quot))
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coefficients.iter().map(|c| Rational::from_integer(c.clone())).collect(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".into()];
        }
        self.coefficients.iter().map(ToString::to_string).collect()
    }
}

fn write_terms<T: fmt::Display + Zero + Signed + One + PartialEq>(
    f: &mut fmt::Formatter<'_>,
    coefficients: &[T],
    var: &str,
) -> fmt::Result {
    if coefficients.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match i {
            0 => write!(f, "{abs}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                write!(f, "{var}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = f.alternate().then_some("z").unwrap_or("t");
        write_terms(f, &self.coefficients, var)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

impl<'a> std::iter::Product<&'a IntPolynomial> for IntPolynomial {
    fn product<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * p)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coefficients: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coefficients.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// `(x, y)` pairs (Lagrange form, expanded).
    pub fn interpolate(points: &[(Rational, Rational)]) -> RatPolynomial {
        let n = points.len();
        let mut result = vec![Rational::zero(); n];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis numerator ∏_{j≠i} (x - x_j), expanded
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let factor = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                result[k] += b * &factor;
            }
        }
        RatPolynomial::new(result)
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    pub fn to_strings(&self) -> Vec<String> {
        if self.coefficients.is_empty() {
            return vec!["0".into()];
        }
        self.coefficients.iter().map(crate::exact::format_rational).collect()
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coefficients, "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn arithmetic_and_trimming() {
        let p = IntPolynomial::from_i64(&[1, 1, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.pow(3), IntPolynomial::from_i64(&[1, 3, 3, 1]));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
        assert_eq!(IntPolynomial::one_minus_power(2), IntPolynomial::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn exact_division() {
        let num = IntPolynomial::one_minus_power(4);
        let den = IntPolynomial::from_i64(&[1, -1]);
        assert_eq!(num.div_exact(&den), Some(IntPolynomial::geometric(4)));
        assert_eq!(IntPolynomial::from_i64(&[1, 1]).div_exact(&den), None);
        assert_eq!(IntPolynomial::from_i64(&[1]).div_exact(&IntPolynomial::from_i64(&[2])), None);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let target = IntPolynomial::from_i64(&[1, 4, 6, 4]);
        let pts: Vec<_> = (0..4)
            .map(|t| (rat(t), Rational::from_integer(target.eval(&t.into()))))
            .collect();
        assert_eq!(RatPolynomial::interpolate(&pts).to_integer(), Some(target));
        let half = RatPolynomial::interpolate(&[(rat(0), rat(0)), (rat(2), rat(1))]);
        assert_eq!(half.coefficients(), &[rat(0), ratio(1, 2)]);
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[1, 3, 3]).to_string(), "1 + 3t + 3t^2");
        assert_eq!(format!("{:#}", IntPolynomial::from_i64(&[1, -1])), "1 - z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
