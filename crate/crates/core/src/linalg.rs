//! Dense exact linear algebra: row-reduced subspaces, kernels, images, preimages.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::Scalar;

pub type Vector = Vec<Scalar>;

fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi -= &(a * xi);
        }
    }
}

/// Row-major matrix of a linear map `K^cols -> K^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix domain");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let cols: Vec<Vector> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        Matrix::from_columns(self.rows, &cols)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_columns(self.cols, &(0..self.rows).map(|i| self.row(i).to_vec()).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row_space(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn kernel(&self) -> SubspaceBasis {
        let rs = self.row_space();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rs.pivots {
            is_pivot[p] = true;
        }
        let null = (0..self.cols).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (row, &p) in rs.rows.iter().zip(&rs.pivots) {
                v[p] = -&row[f];
            }
            v
        });
        SubspaceBasis::span(self.cols, null)
    }

    pub fn image(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.rows, (0..self.cols).map(|j| self.column(j)))
    }

    /// Image of a subspace of the domain.
    pub fn image_of(&self, s: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(s.ambient, self.cols);
        SubspaceBasis::span(self.rows, s.rows.iter().map(|r| self.apply(r)))
    }

    /// `{v : self·v ∈ target}`.
    pub fn preimage(&self, target: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(target.ambient, self.rows);
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.rows];
            for &p in &target.pivots {
                is_pivot[p] = true;
            }
            (0..self.rows).filter(|&i| !is_pivot[i]).collect()
        };
        let mut q = Matrix::zeros(free.len(), self.cols);
        for j in 0..self.cols {
            let r = target.reduce(&self.column(j));
            for (k, &i) in free.iter().enumerate() {
                q.set(k, j, r[i].clone());
            }
        }
        q.kernel()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<Vector> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vector> = (0..n).map(|i| Matrix::identity(n).row(i).to_vec()).collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c].inv().expect("nonzero pivot");
            for v in a[c].iter_mut().chain(inv[c].iter_mut()) {
                *v = &*v * &piv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    let (pa, pi) = (a[c].clone(), inv[c].clone());
                    axpy(&mut a[r], &f, &pa);
                    axpy(&mut inv[r], &f, &pi);
                }
            }
        }
        Ok(Matrix::from_rows(n, inv))
    }
}

/// Subspace of `K^ambient` kept in reduced row echelon form, pivots at the
/// first nonzero column of each row, rows sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis::coordinate(ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        SubspaceBasis::span(
            ambient,
            indices.into_iter().map(|k| {
                let mut v = vec![Scalar::zero(); ambient];
                v[k] = Scalar::one();
                v
            }),
        )
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = SubspaceBasis::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut r = self.reduce(&v);
        let Some(c) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = r[c].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &s;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[c].is_zero() {
                let f = row[c].clone();
                axpy(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, r);
        self.pivots.insert(at, c);
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coefficients of `v` in terms of the stored rows, if `v` lies in the span.
    pub fn coefficients(&self, v: &[Scalar]) -> Option<Vector> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Intersection via the kernel of `(x, y) ↦ Σ x_i a_i - Σ y_j b_j`.
    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return SubspaceBasis::zero(self.ambient);
        }
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(other.rows.iter().map(|r| r.iter().map(|x| -x).collect()));
        let k = Matrix::from_columns(self.ambient, &cols).kernel();
        let a = self.dim();
        SubspaceBasis::span(
            self.ambient,
            k.rows.iter().map(|x| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (xi, row) in x[..a].iter().zip(&self.rows) {
                    if !xi.is_zero() {
                        axpy(&mut v, &-xi, row);
                    }
                }
                v
            }),
        )
    }

    /// Canonical representatives of `self / sub`, assuming `sub ⊆ self`:
    /// the row-reduced remainders of `self`'s rows modulo `sub`.
    pub fn quotient_representatives(&self, sub: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, sub.ambient);
        SubspaceBasis::span(self.ambient, self.rows.iter().map(|r| sub.reduce(r)))
    }
}
