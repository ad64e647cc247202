//! Dense quaternion matrices.
//!
//! All public indices are 1-based: `at(1, 1)` is the top-left entry, row and
//! column replacement use 1-based positions, and [`IndexSet`] members run
//! over `1..=n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactq::{Quaternion, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl QMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; the column count is taken from the first row.
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(m * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::shape(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            data.extend(row);
        }
        QMatrix::new(m, n, data)
    }

    /// Convenience constructor from integer `[w, x, y, z]` entries.
    pub fn from_int_rows(rows: &[Vec<[i64; 4]>]) -> Result<Self> {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&[w, x, y, z]| Quaternion::from_ints(w, x, y, z)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix::from_fn(n, n, |i, j| if i == j { Quaternion::one() } else { Quaternion::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn at(&self, i: usize, j: usize) -> &Quaternion {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i}, {j}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Quaternion) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    // 0-based access for hot loops.
    #[inline]
    pub(crate) fn el(&self, r: usize, c: usize) -> &Quaternion {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, i: usize) -> Vec<Quaternion> {
        assert!((1..=self.rows).contains(&i));
        self.data[(i - 1) * self.cols..i * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Quaternion> {
        assert!((1..=self.cols).contains(&j));
        (0..self.rows).map(|r| self.el(r, j - 1).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Quaternion::is_zero)
    }

    /// True when every entry lies in the complex subfield (zero j, k parts).
    pub fn is_complex(&self) -> bool {
        self.data.iter().all(Quaternion::is_complex)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (r..self.cols).all(|c| *self.el(r, c) == self.el(c, r).conj()))
    }

    /// Exact product; fails on inner-dimension mismatch.
    pub fn mat_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Quaternion::zero();
                for t in 0..self.cols {
                    let a = self.el(r, t);
                    let b = rhs.el(t, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                data.push(acc);
            }
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// `A^k`; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::shape(format!(
                "power of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    /// Replaces row or column `index` (1-based) with `v`.
    pub fn replace(&self, axis: Axis, index: usize, v: &[Quaternion]) -> Result<QMatrix> {
        let (bound, len) = match axis {
            Axis::Row => (self.rows, self.cols),
            Axis::Column => (self.cols, self.rows),
        };
        if !(1..=bound).contains(&index) {
            return Err(Error::shape(format!("{axis:?} index {index} out of 1..={bound}")));
        }
        if v.len() != len {
            return Err(Error::shape(format!(
                "replacement vector has length {}, expected {len}",
                v.len()
            )));
        }
        let mut out = self.clone();
        for (t, q) in v.iter().enumerate() {
            let pos = match axis {
                Axis::Row => (index - 1) * self.cols + t,
                Axis::Column => t * self.cols + (index - 1),
            };
            out.data[pos] = q.clone();
        }
        Ok(out)
    }

    /// Submatrix with rows from `rowsel` and columns from `colsel`.
    pub fn submatrix(&self, rowsel: &IndexSet, colsel: &IndexSet) -> Result<QMatrix> {
        if rowsel.ambient() != self.rows || colsel.ambient() != self.cols {
            return Err(Error::shape(format!(
                "selection over {}x{} does not fit a {}x{} matrix",
                rowsel.ambient(),
                colsel.ambient(),
                self.rows,
                self.cols
            )));
        }
        let mut data = Vec::with_capacity(rowsel.len() * colsel.len());
        for &r in rowsel.members() {
            for &c in colsel.members() {
                data.push(self.el(r - 1, c - 1).clone());
            }
        }
        QMatrix::new(rowsel.len(), colsel.len(), data)
    }

    /// `A_β^β`.
    pub fn principal_submatrix(&self, sel: &IndexSet) -> Result<QMatrix> {
        self.submatrix(sel, sel)
    }

    /// `[A | B]`.
    pub fn hstack(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::shape("hstack needs equal row counts"));
        }
        Ok(QMatrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j <= self.cols {
                self.at(i, j).clone()
            } else {
                rhs.at(i, j - self.cols).clone()
            }
        }))
    }

    /// `[A; B]`.
    pub fn vstack(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.cols {
            return Err(Error::shape("vstack needs equal column counts"));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        QMatrix::new(self.rows + rhs.rows, self.cols, data)
    }

    pub fn scale(&self, r: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| q.scale(r)).collect(),
        }
    }

    pub fn div_real(&self, r: &Rational) -> Result<QMatrix> {
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| q.div_real(r)).collect::<Result<_>>()?,
        })
    }

    /// Left scalar multiple `c·A`.
    pub fn left_scale(&self, c: &Quaternion) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| c * q).collect(),
        }
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Quaternion) -> Quaternion) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Quaternion>> {
        (1..=self.rows).map(|i| self.row(i)).collect()
    }
}

impl Mul<&QMatrix> for &QMatrix {
    type Output = QMatrix;

    /// Panics on shape mismatch; use [`QMatrix::mat_mul`] for a fallible product.
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.mat_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add<&QMatrix> for &QMatrix {
    type Output = QMatrix;

    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&QMatrix> for &QMatrix {
    type Output = QMatrix;

    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;

    fn neg(self) -> QMatrix {
        self.map(|q| -q)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Quaternion>>,
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            data: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.data.len() != raw.rows {
            return Err(D::Error::custom(format!(
                "declared {} rows but data has {}",
                raw.rows,
                raw.data.len()
            )));
        }
        let mut data = Vec::with_capacity(raw.rows * raw.cols);
        for (r, row) in raw.data.into_iter().enumerate() {
            if row.len() != raw.cols {
                return Err(D::Error::custom(format!(
                    "row {} has {} entries, declared {} columns",
                    r + 1,
                    row.len(),
                    raw.cols
                )));
            }
            data.extend(row);
        }
        Ok(QMatrix {
            rows: raw.rows,
            cols: raw.cols,
            data,
        })
    }
}

/// A strictly increasing selection of indices from `1..=n`: an element of `L_{k,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self> {
        if members.iter().any(|&m| m == 0 || m > n) {
            return Err(Error::shape(format!("index set {members:?} not within 1..={n}")));
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::shape(format!("index set {members:?} is not strictly increasing")));
        }
        Ok(IndexSet { n, members })
    }

    pub fn full(n: usize) -> Self {
        IndexSet {
            n,
            members: (1..=n).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        IndexSet { n, members: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// 1-based position of `i` inside the selection.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.members.binary_search(&i).ok().map(|p| p + 1)
    }
}
