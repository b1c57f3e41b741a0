//! Exact rational scalars, vectors and dense matrices.
//!
//! Elimination is done fraction-free: every row is first cleared of
//! denominators and then reduced with Bareiss' integer-preserving update, so
//! the only rational arithmetic happens during back substitution.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A vector of exact rationals.
pub type RatVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_vector(values: &[i64]) -> RatVector {
    values.iter().map(|&v| rat(v)).collect()
}

/// Parses `"-9"`, `"1/2"`, `" 3 "` and the unicode minus sign `"−9"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned: String = text.trim().replace('\u{2212}', "-");
    if cleaned.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match cleaned.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = cleaned.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Canonical decimal string: `"3"`, `"-1/2"`.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vector(v: &[Rational], s: &Rational) -> RatVector {
    v.iter().map(|x| x * s).collect()
}

pub fn negate_vector(v: &[Rational]) -> RatVector {
    v.iter().map(|x| -x).collect()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Scales `v` to a primitive integer vector whose first nonzero entry is
/// positive. Returns `None` for the zero vector.
pub fn primitive(v: &[Rational]) -> Option<RatVector> {
    let first = v.iter().position(|x| !x.is_zero())?;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if ints[first].is_negative() {
        gcd = -gcd;
    }
    Some(ints.into_iter().map(|x| Rational::from_integer(x / &gcd)).collect())
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    /// An empty row list gives a `0 x cols` matrix only through [`RatMatrix::zeros`].
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| int_vector(r.as_ref())).collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, columns: &[RatVector]) -> Result<Self> {
        let mut m = Self::zeros(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::Shape(format!("column {} has length {}", j + 1, c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> RatVector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, columns.len());
        for r in 0..self.rows {
            for (k, &c) in columns.iter().enumerate() {
                m.set(r, k, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RatVector {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                m.set(r, c, acc);
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Parses a JSON array of arrays whose cells are fraction strings (plain
    /// JSON integers are accepted as well).
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("matrix must be a JSON array of rows".into()))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse("each matrix row must be a JSON array".into()))?;
            let mut out = Vec::with_capacity(cells.len());
            for cell in cells {
                let v = match cell {
                    serde_json::Value::String(s) => parse_rational(s)?,
                    serde_json::Value::Number(n) if n.is_i64() => rat(n.as_i64().unwrap()),
                    other => return Err(Error::Parse(format!("bad matrix cell {other}"))),
                };
                out.push(v);
            }
            parsed.push(out);
        }
        Self::from_rows(parsed)
    }

    /// Parses comma separated rows; blank lines and `#` comments are skipped.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|r| {
                    serde_json::Value::Array(
                        self.row(r)
                            .iter()
                            .map(|x| serde_json::Value::String(format_rational(x)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row echelon form over the integers, produced by Bareiss elimination.
#[derive(Clone, Debug)]
struct Echelon {
    cols: usize,
    /// One entry per nonzero echelon row.
    pivots: Vec<usize>,
    rows: Vec<Vec<BigInt>>,
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

fn echelon(m: &RatMatrix) -> Echelon {
    let mut a = integer_rows(m);
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let (v, rem) = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]).div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { cols: ncols, pivots, rows: a }
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn kernel(&self) -> Vec<RatVector> {
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![Rational::zero(); self.cols];
                x[free] = Rational::one();
                for (k, &p) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[k];
                    let mut acc = Rational::zero();
                    for j in p + 1..self.cols {
                        if !row[j].is_zero() && !x[j].is_zero() {
                            acc += Rational::from_integer(row[j].clone()) * &x[j];
                        }
                    }
                    x[p] = -acc / Rational::from_integer(row[p].clone());
                }
                primitive(&x).expect("kernel vector has a unit entry")
            })
            .collect()
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    echelon(m).rank()
}

/// Basis of `{λ : Mλ = 0}`, each vector primitive with a positive leading entry.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    echelon(m).kernel()
}

/// Rank of a list of vectors of equal length.
pub fn rank_of_vectors(vectors: &[RatVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&RatMatrix::from_rows(vectors.to_vec()).expect("vectors share a length"))
}

/// Basis of the row-space vectors whose coordinates vanish on `zero_on`.
pub fn rowspace_vanishing_basis(m: &RatMatrix, zero_on: &[usize]) -> Vec<RatVector> {
    assert!(
        zero_on.iter().all(|&j| j < m.cols()),
        "zero_on must index columns of the matrix"
    );
    let ech = echelon(m);
    let r = ech.rank();
    if r == 0 {
        return Vec::new();
    }
    // Coefficients c with (Σ c_k E_k)_j = 0 for j in zero_on.
    let mut constraint = RatMatrix::zeros(zero_on.len(), r);
    for (a, &j) in zero_on.iter().enumerate() {
        for k in 0..r {
            constraint.set(a, k, Rational::from_integer(ech.rows[k][j].clone()));
        }
    }
    kernel_basis(&constraint)
        .into_iter()
        .map(|coeffs| {
            let mut u = vec![Rational::zero(); m.cols()];
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, x) in ech.rows[k].iter().enumerate() {
                    if !x.is_zero() {
                        u[j] += c * Rational::from_integer(x.clone());
                    }
                }
            }
            primitive(&u).expect("echelon rows are independent")
        })
        .collect()
}

/// A nonzero vector of the row space vanishing on `zero_on`, if one exists.
pub fn solve_in_rowspace(m: &RatMatrix, zero_on: &[usize]) -> Option<RatVector> {
    rowspace_vanishing_basis(m, zero_on).into_iter().next()
}

/// Reduced row echelon form over the rationals, with the pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..ncols {
                let tmp = a.get(p, j).clone();
                a.set(p, j, a.get(r, j).clone());
                a.set(r, j, tmp);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..ncols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..nrows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..ncols {
                let v = a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A basis of the span of `vectors` (echelon rows, primitive).
pub fn span_basis(vectors: &[RatVector]) -> Vec<RatVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors.to_vec()).expect("vectors share a length");
    let ech = echelon(&m);
    ech.rows
        .iter()
        .map(|row| {
            let v: RatVector = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
            primitive(&v).expect("echelon rows are nonzero")
        })
        .collect()
}

/// The unique solution of `rows · x = rhs`, if the system is consistent and
/// has full column rank.
pub fn solve_unique(rows: &[RatVector], rhs: &[Rational], dim: usize) -> Option<RatVector> {
    assert_eq!(rows.len(), rhs.len());
    let augmented: Vec<RatVector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    if augmented.is_empty() {
        return (dim == 0).then(Vec::new);
    }
    let (red, pivots) = rref(&RatMatrix::from_rows(augmented).expect("rows share a length"));
    if pivots.contains(&dim) || pivots.len() != dim {
        return None;
    }
    Some((0..dim).map(|k| red.get(k, dim).clone()).collect())
}

/// Determinant of a square matrix.
pub fn determinant(m: &RatMatrix) -> Result<Rational> {
    if m.rows() != m.cols() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = Rational::one();
    for r in 0..n {
        let lcm = m.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= Rational::from_integer(lcm);
    }
    let mut a = integer_rows(m);
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(Rational::from_integer(sign * &a[n - 1][n - 1]) / scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_incidence() -> RatMatrix {
        RatMatrix::from_int_rows(&[[1, 1, 0], [-1, 0, 1], [0, -1, -1]]).unwrap()
    }

    fn signs(v: &[Rational]) -> Vec<i32> {
        v.iter()
            .map(|x| if x.is_positive() { 1 } else if x.is_negative() { -1 } else { 0 })
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::zeros(2, 4)), 0);
        assert_eq!(rank(&k3_incidence()), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
        let m = RatMatrix::from_int_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap();
        assert_eq!(kernel_basis(&m), vec![int_vector(&[1, 1, -1])]);
        let k = kernel_basis(&k3_incidence());
        assert_eq!(k.len(), 1);
        assert_eq!(signs(&k[0]), vec![1, -1, 1]);
    }

    #[test]
    fn rowspace_examples() {
        let one = RatMatrix::from_int_rows(&[[1]]).unwrap();
        assert_eq!(solve_in_rowspace(&one, &[]), Some(int_vector(&[1])));
        assert_eq!(solve_in_rowspace(&RatMatrix::identity(2), &[0, 1]), None);
        let u = solve_in_rowspace(&k3_incidence(), &[2]).unwrap();
        assert_eq!(signs(&u), vec![1, 1, 0]);
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("\u{2212}9").unwrap(), rat(-9));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("4/-8").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
    }

    #[test]
    fn parses_matrix_formats() {
        let j = RatMatrix::from_json_str(r#"[["1","-1/2"],["0", 3]]"#).unwrap();
        let c = RatMatrix::from_csv_str("1, -1/2\n# comment\n0,3\n").unwrap();
        assert_eq!(j, c);
        assert!(RatMatrix::from_json_str(r#"[["1"],["1","2"]]"#).is_err());
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let v = vec![ratio(0, 1), ratio(-2, 3), ratio(4, 3)];
        assert_eq!(primitive(&v), Some(int_vector(&[0, 1, -2])));
        assert_eq!(primitive(&[rat(0)]), None);
    }

    #[test]
    fn determinant_small() {
        let m = RatMatrix::from_int_rows(&[[2, 1], [1, 3]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), rat(5));
        let m = RatMatrix::from_rows(vec![vec![ratio(1, 2), rat(1)], vec![rat(1), rat(4)]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), rat(1));
        let m = RatMatrix::from_int_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), rat(-1));
    }
}
