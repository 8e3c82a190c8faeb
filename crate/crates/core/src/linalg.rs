//! Exact dense linear algebra over the rationals.
//!
//! Subspaces are always stored by their reduced row-echelon basis, so two
//! subspaces are equal exactly when their `Subspace` values compare equal.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact fraction, always kept in lowest terms with a positive denominator.
pub type Rational = num::BigRational;

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `acc += factor * v`
pub fn axpy(acc: &mut [Rational], factor: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if factor.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += factor * x;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(MatrixQ { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            entries: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from integer rows; handy in tests and constructors.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Self::from_rows(rows.len(), rows.first().map_or(0, Vec::len), &rows)
    }

    pub fn from_rows(n_rows: usize, n_cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        if rows.len() != n_rows {
            return Err(Error::DimensionMismatch {
                expected: n_rows,
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            if r.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    expected: n_cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(MatrixQ {
            rows: n_rows,
            cols: n_cols,
            entries,
        })
    }

    /// Matrix whose columns are the given vectors (each of length `n_rows`).
    pub fn from_columns(n_rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n_rows {
                return Err(Error::DimensionMismatch {
                    expected: n_rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = x.clone();
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

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let cols: Vec<Vec<Rational>> = (0..other.cols)
            .map(|j| self.mul_vec(&other.column(j)))
            .collect();
        Self::from_columns(self.rows, &cols)
    }

    pub fn transpose(&self) -> MatrixQ {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn inverse(&self) -> Option<MatrixQ> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(MatrixQ::identity(0));
        }
        let mut aug = MatrixQ::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = MatrixQ::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and pivot columns. Pivots are taken as the first
/// nonzero entry in column order; the zero rows end up at the bottom.
pub fn rref(m: &MatrixQ) -> (MatrixQ, Vec<usize>) {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..m.cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let factor = -row[col].clone();
                axpy(row, &factor, &pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
    }
    let entries = rows.into_iter().flatten().collect();
    (
        MatrixQ {
            rows: m.rows,
            cols: m.cols,
            entries,
        },
        pivots,
    )
}

/// Null space `{v : m v = 0}`.
pub fn kernel_basis(m: &MatrixQ) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = unit_vec(n, f);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f).clone();
        }
        v
    });
    Subspace::span_unchecked(n, vectors)
}

/// Solution space of the homogeneous system whose equations are `rows`.
pub fn solve_homogeneous<I>(n: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = Vec<Rational>>,
{
    let row_space = Subspace::span_unchecked(n, rows);
    let mut is_pivot = vec![false; n];
    for &p in row_space.pivots() {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = unit_vec(n, f);
        for (row, &p) in row_space.basis().iter().zip(row_space.pivots()) {
            v[p] = -row[f].clone();
        }
        v
    });
    Subspace::span_unchecked(n, vectors)
}

/// Incremental semi-echelon basis. Each stored row has a leading 1 at its
/// pivot and zeros at every pivot column that existed when it was inserted.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient_dim: usize,
    rows: BTreeMap<usize, Vec<Rational>>,
}

impl EchelonBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBuilder {
            ambient_dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        let mut b = Self::new(s.ambient_dim);
        for (p, row) in s.pivots.iter().zip(&s.basis) {
            b.rows.insert(*p, row.clone());
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the result vanishes on every pivot.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        for (&p, row) in &self.rows {
            if !v[p].is_zero() {
                let factor = -v[p].clone();
                axpy(&mut v, &factor, row);
            }
        }
        v
    }

    /// Adds `v` to the span. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.insert(lead, v);
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    pub fn finish(mut self) -> Subspace {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in &pivots {
            let pivot_row = self.rows[&p].clone();
            for (_, row) in self.rows.range_mut(..p) {
                if !row[p].is_zero() {
                    let factor = -row[p].clone();
                    axpy(row, &factor, &pivot_row);
                }
            }
        }
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: self.rows.into_values().collect(),
            pivots,
        }
    }
}

/// A subspace of `Q^n` stored by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given coordinate vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut b = EchelonBuilder::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            b.insert(v);
        }
        Ok(b.finish())
    }

    pub(crate) fn span_unchecked<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut b = EchelonBuilder::new(ambient_dim);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span_unchecked(ambient_dim, indices.into_iter().map(|i| unit_vec(ambient_dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis, read off at the pivots.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        let mut out = v.to_vec();
        for (p, row) in self.pivots.iter().zip(&self.basis) {
            if !v[*p].is_zero() {
                axpy(&mut out, &-v[*p].clone(), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = zero_vec(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, b);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = EchelonBuilder::from_subspace(self);
        for v in &other.basis {
            b.insert(v.clone());
        }
        Ok(b.finish())
    }

    /// Intersection, computed as the kernel of `self -> Q^n / other`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_subspace_of(other) {
            return Ok(self.clone());
        }
        let q = QuotientMap::new(other.clone());
        let images: Vec<Vec<Rational>> = self.basis.iter().map(|b| q.apply(b)).collect();
        let m = MatrixQ::from_columns(q.target_dim(), &images)?;
        let ker = kernel_basis(&m);
        Ok(Subspace::span_unchecked(
            self.ambient_dim,
            ker.basis.iter().map(|c| self.combine(c)),
        ))
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn image(&self, m: &MatrixQ) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        Ok(Subspace::span_unchecked(
            m.rows(),
            self.basis.iter().map(|b| m.mul_vec(b)),
        ))
    }

    /// Greedily picks the candidates that extend this subspace, in order.
    pub fn extension_by(&self, candidates: impl IntoIterator<Item = Vec<Rational>>) -> Vec<Vec<Rational>> {
        let mut b = EchelonBuilder::from_subspace(self);
        candidates
            .into_iter()
            .filter(|v| b.insert(v.clone()))
            .collect()
    }

    /// A complement of `self` inside `sup`, spanned by those echelon basis
    /// vectors of `sup` that extend `self`.
    pub fn complement_in(&self, sup: &Subspace) -> Result<Subspace> {
        self.check_ambient(sup)?;
        if !self.is_subspace_of(sup) {
            return Err(Error::InvalidArgument(
                "complement requested inside a space that does not contain the subspace".into(),
            ));
        }
        Ok(Subspace::span_unchecked(
            self.ambient_dim,
            self.extension_by(sup.basis.iter().cloned()),
        ))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, b) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let entries: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", entries.join(","))?;
        }
        write!(f, "}} in Q^{}", self.ambient_dim)
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersection(b)
}

pub fn quotient_map(ambient_dim: usize, w: &Subspace) -> Result<QuotientMap> {
    if w.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: w.ambient_dim(),
        });
    }
    Ok(QuotientMap::new(w.clone()))
}

/// The projection `Q^n -> Q^n / W`. The quotient is coordinatised by the
/// non-pivot columns of `W`'s echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    kernel: Subspace,
    free_cols: Vec<usize>,
}

impl QuotientMap {
    pub fn new(kernel: Subspace) -> Self {
        let mut is_pivot = vec![false; kernel.ambient_dim];
        for &p in &kernel.pivots {
            is_pivot[p] = true;
        }
        let free_cols = (0..kernel.ambient_dim).filter(|&c| !is_pivot[c]).collect();
        QuotientMap { kernel, free_cols }
    }

    pub fn source_dim(&self) -> usize {
        self.kernel.ambient_dim
    }

    pub fn target_dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Source coordinates that survive as the quotient basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free_cols
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.kernel.reduce(v);
        self.free_cols.iter().map(|&c| r[c].clone()).collect()
    }

    /// A preimage of the quotient vector `u`.
    pub fn lift(&self, u: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.target_dim());
        let mut v = zero_vec(self.source_dim());
        for (&c, x) in self.free_cols.iter().zip(u) {
            v[c] = x.clone();
        }
        v
    }

    pub fn matrix(&self) -> MatrixQ {
        let cols: Vec<Vec<Rational>> = (0..self.source_dim())
            .map(|j| self.apply(&unit_vec(self.source_dim(), j)))
            .collect();
        MatrixQ::from_columns(self.target_dim(), &cols).expect("columns have quotient length")
    }

    pub fn image_of(&self, s: &Subspace) -> Subspace {
        Subspace::span_unchecked(self.target_dim(), s.basis().iter().map(|b| self.apply(b)))
    }
}

/// Renders a vector as `a*x + b*y` using the given labels.
pub fn format_combination(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = x.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
