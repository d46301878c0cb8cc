use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense exact matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| Rational::from_int(x)));
        }
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Column vector.
    pub fn column(entries: Vec<Rational>) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero entries of each row as (column, value).
    pub fn row_support(&self) -> Vec<Vec<(usize, &Rational)>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.data[j * self.rows + i] = v.clone();
                }
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let support = other.row_support();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let base = i * other.cols;
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &support[k] {
                    let t = a * b;
                    out.data[base + j] += &t;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// `tr(self·other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, i);
                if !b.is_zero() {
                    acc += &(a * b);
                }
            }
        }
        acc
    }

    /// True when `self == c·other` for `c = ±1`; returns the sign.
    pub fn sign_relative_to(&self, other: &Self) -> Option<i32> {
        if self == other {
            Some(1)
        } else if self.data.iter().zip(&other.data).all(|(a, b)| *a == -b) {
            Some(-1)
        } else {
            None
        }
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }

    /// Horizontal block `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Symmetric part test.
    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        *self == -&self.transpose()
    }

    /// Each row and column holds exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for i in 0..self.rows {
            let mut count = 0;
            for (j, v) in self.row(i).iter().enumerate() {
                if !v.is_zero() {
                    if col_seen[j] {
                        return false;
                    }
                    col_seen[j] = true;
                    count += 1;
                }
            }
            if count != 1 {
                return false;
            }
        }
        true
    }
}

/// Kronecker product. Row `(i,k)` maps to `i·rows(B) + k`, column `(j,l)` to `j·cols(B) + l`.
pub fn kronecker(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = RationalMatrix::zeros(rows, cols);
    let b_support = b.row_support();
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for (k, row) in b_support.iter().enumerate() {
                for &(l, y) in row {
                    out.set(i * b.rows + k, j * b.cols + l, x * y);
                }
            }
        }
    }
    out
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix shapes do not compose")
    }
}

impl Mul for RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: RationalMatrix) -> RationalMatrix {
        &self * &rhs
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        -&self
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        RationalMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_with_identity_is_block_diagonal() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let k = kronecker(&RationalMatrix::identity(2), &m);
        let expected =
            RationalMatrix::from_i64(&[&[1, 2, 0, 0], &[3, 4, 0, 0], &[0, 0, 1, 2], &[0, 0, 3, 4]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kronecker_scalar_and_shape() {
        let c = RationalMatrix::from_i64(&[&[3]]);
        let b = RationalMatrix::from_i64(&[&[1, -1], &[0, 2]]);
        assert_eq!(kronecker(&c, &b), b.scale(&Rational::from_int(3)));
        let a = RationalMatrix::zeros(2, 3);
        let d = RationalMatrix::zeros(4, 5);
        let k = kronecker(&a, &d);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn product_and_trace() {
        let a = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(&a * &a, -RationalMatrix::identity(2));
        assert_eq!(a.trace_of_product(&a), Rational::from_int(-2));
        assert!(a.is_skew());
        assert!(a.is_monomial());
    }

    #[test]
    fn serde_roundtrip() {
        let a =
            RationalMatrix::new(1, 2, vec![Rational::new(1, 2), Rational::from_int(-3)]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"[["1/2","-3"]]"#);
        let b: RationalMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
