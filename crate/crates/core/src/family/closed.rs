use num::BigInt;

use super::check_n;
use crate::error::Result;
use crate::poly::IntPolynomial;

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `t^{n-1} + Σ_{i=0}^{n-2} (2^{n-i} - 2) C(n,i) t^i`, the f-polynomial of
/// `P_{n-1}` (coefficient `i` counts the `i`-dimensional faces).
pub fn f_polynomial(n: usize) -> Result<IntPolynomial> {
    check_n(n, 2)?;
    let mut c: Vec<BigInt> = (0..n - 1)
        .map(|i| ((BigInt::from(1) << (n - i)) - 2) * binomial(n, i))
        .collect();
    c.push(BigInt::from(1));
    Ok(IntPolynomial::new(c))
}

/// Number of permutations of `[k]` with exactly `i` descents.
pub fn eulerian_number(k: usize, i: usize) -> BigInt {
    eulerian_polynomial(k).map(|p| p.coefficient(i)).unwrap_or_default()
}

/// `A_k(t) = Σ_i A(k,i) t^i`, built from
/// `A(k,i) = (i+1) A(k-1,i) + (k-i) A(k-1,i-1)`.
pub fn eulerian_polynomial(k: usize) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(crate::Error::OutOfRange("Eulerian polynomials start at k = 1".into()));
    }
    let mut row = vec![BigInt::from(1)];
    for m in 2..=k {
        let mut next = vec![BigInt::from(0); m];
        for (i, slot) in next.iter_mut().enumerate() {
            if i < row.len() {
                *slot += &row[i] * (i + 1);
            }
            if i >= 1 {
                *slot += &row[i - 1] * (m - i);
            }
        }
        row = next;
    }
    Ok(IntPolynomial::new(row))
}

/// `L(t) = (t+1)^n - t^n`, whose coefficients are `C(n,k)` for `k < n`.
pub fn family_ehrhart(n: usize) -> Result<IntPolynomial> {
    check_n(n, 2)?;
    Ok(IntPolynomial::new((0..n).map(|k| binomial(n, k)).collect()))
}
