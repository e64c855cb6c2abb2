//! Exact linear algebra over the rationals.
//!
//! Everything downstream (radicals, centers, hom-spaces, tensor products) is
//! reduced to kernels and spans, so this module keeps a single canonical form:
//! reduced row echelon form over [`Q`]. Two [`Subspace`] values are equal iff
//! they are the same subspace.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Dense coefficient vector.
pub type Vector = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Renders a rational the way the text formats expect: `3`, `-1/2`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse row: strictly increasing column indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseRow(pub Vec<(usize, Q)>);

impl SparseRow {
    pub fn from_dense(v: &[Q]) -> Self {
        SparseRow(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    /// Builds a row from unsorted entries, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, Q)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Q)> = Vec::with_capacity(entries.len());
        for (i, x) in entries {
            match out.last_mut() {
                Some((j, y)) if *j == i => *y += x,
                _ => out.push((i, x)),
            }
        }
        out.retain(|(_, x)| !x.is_zero());
        SparseRow(out)
    }

    pub fn to_dense(&self, n: usize) -> Vector {
        let mut v = zero_vec(n);
        for (i, x) in &self.0 {
            v[*i] = x.clone();
        }
        v
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<usize> {
        self.0.first().map(|(i, _)| *i)
    }

    pub fn get(&self, col: usize) -> Option<&Q> {
        self.0
            .binary_search_by_key(&col, |(i, _)| *i)
            .ok()
            .map(|k| &self.0[k].1)
    }

    /// `self - c * other`
    fn sub_scaled(&self, c: &Q, other: &SparseRow) -> SparseRow {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() || b < other.0.len() {
            let ia = self.0.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.0.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.0[a].clone());
                a += 1;
            } else if ib < ia {
                out.push((ib, -(c * &other.0[b].1)));
                b += 1;
            } else {
                let x = &self.0[a].1 - c * &other.0[b].1;
                if !x.is_zero() {
                    out.push((ia, x));
                }
                a += 1;
                b += 1;
            }
        }
        SparseRow(out)
    }

    fn scale(&mut self, c: &Q) {
        for (_, x) in self.0.iter_mut() {
            *x *= c;
        }
    }
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut r = row.clone();
        let mut k = 0;
        while k < r.0.len() {
            let (col, ref c) = r.0[k];
            if let Some(p) = self.pivot_row[col] {
                let c = c.clone();
                r = r.sub_scaled(&c, &self.rows[p]);
                // entries before position k are untouched because pivot rows
                // have no entries in earlier pivot columns of r
                continue;
            }
            k += 1;
        }
        r
    }

    /// Inserts a row; returns `true` if it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(&row);
        let Some(lead) = r.lead() else {
            return false;
        };
        let inv = r.0[0].1.recip();
        r.scale(&inv);
        for other in self.rows.iter_mut() {
            if let Some(c) = other.get(lead).cloned() {
                *other = other.sub_scaled(&c, &r);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Q]) -> bool {
        self.insert(SparseRow::from_dense(v))
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().filter_map(SparseRow::lead).collect();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Rows sorted by pivot column.
    pub fn rows_sorted(&self) -> Vec<&SparseRow> {
        let mut rows: Vec<&SparseRow> = self.rows.iter().collect();
        rows.sort_by_key(|r| r.lead());
        rows
    }

    /// Basis of the null space `{x : row · x = 0 for every row}`.
    pub fn kernel(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = zero_vec(self.ncols);
            v[f] = Q::one();
            for r in &self.rows {
                if let Some(x) = r.get(f) {
                    v[r.lead().unwrap()] = -x.clone();
                }
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.ncols, basis)
    }

    pub fn into_subspace(self) -> Subspace {
        let ncols = self.ncols;
        let basis = self
            .rows_sorted()
            .into_iter()
            .map(|r| r.to_dense(ncols))
            .collect();
        Subspace {
            ambient: ncols,
            basis,
        }
    }
}

/// Solves the homogeneous system given by `rows` over `ncols` unknowns.
pub fn null_space<I>(ncols: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.kernel()
}

/// A linear subspace of `Q^ambient`, stored as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
        }
    }

    pub fn from_spanning<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            debug_assert_eq!(v.len(), ambient);
            e.insert_dense(&v);
        }
        e.into_subspace()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).unwrap())
            .collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient);
        for v in &self.basis {
            e.insert_dense(v);
        }
        e
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        let pivots = self.pivots();
        let c: Vector = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            add_scaled(&mut r, &-ci.clone(), b);
        }
        is_zero_vec(&r).then_some(c)
    }

    /// Reduces `v` modulo the subspace, leaving support only on non-pivot columns.
    pub fn reduce(&self, v: &[Q]) -> Vector {
        let mut r = v.to_vec();
        for (p, b) in self.pivots().into_iter().zip(&self.basis) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, b);
            }
        }
        r
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_spanning(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // v = Σ a_i u_i = Σ b_j w_j; solve for (a, b).
        let n = self.dim() + other.dim();
        if n == 0 {
            return Subspace::zero(self.ambient);
        }
        let rows = (0..self.ambient).map(|k| {
            let mut entries = Vec::new();
            for (i, u) in self.basis.iter().enumerate() {
                if !u[k].is_zero() {
                    entries.push((i, u[k].clone()));
                }
            }
            for (j, w) in other.basis.iter().enumerate() {
                if !w[k].is_zero() {
                    entries.push((self.dim() + j, -w[k].clone()));
                }
            }
            SparseRow::from_entries(entries)
        });
        let sol = null_space(n, rows);
        Subspace::from_spanning(
            self.ambient,
            sol.basis.iter().map(|s| {
                let mut v = zero_vec(self.ambient);
                for (i, u) in self.basis.iter().enumerate() {
                    add_scaled(&mut v, &s[i], u);
                }
                v
            }),
        )
    }

    /// Canonical complement: unit vectors on the non-pivot columns.
    pub fn complement(&self) -> Subspace {
        let pivots = self.pivots();
        Subspace {
            ambient: self.ambient,
            basis: (0..self.ambient)
                .filter(|c| !pivots.contains(c))
                .map(|c| unit_vec(self.ambient, c))
                .collect(),
        }
    }

    /// Extends `self` greedily by vectors of `candidates`, returning the ones used.
    pub fn extend_by<'a>(&self, candidates: &'a [Vector]) -> Vec<&'a Vector> {
        let mut e = self.echelon();
        candidates.iter().filter(|v| e.insert_dense(v)).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(fmt_q).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        write!(f, "}}")
    }
}

/// A fixed, linearly independent list of vectors with coordinate solving.
#[derive(Clone, Debug)]
pub struct Frame {
    ambient: usize,
    vectors: Vec<Vector>,
    /// echelon form of the rows `[v_i | e_i]`
    augmented: Echelon,
}

impl Frame {
    /// `None` if the vectors are dependent.
    pub fn new(ambient: usize, vectors: Vec<Vector>) -> Option<Self> {
        let k = vectors.len();
        let mut augmented = Echelon::new(ambient + k);
        for (i, v) in vectors.iter().enumerate() {
            let mut entries: Vec<(usize, Q)> = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect();
            entries.push((ambient + i, Q::one()));
            augmented.insert(SparseRow(entries));
            if augmented.pivots().iter().any(|&p| p >= ambient) {
                return None;
            }
        }
        Some(Frame {
            ambient,
            vectors,
            augmented,
        })
    }

    /// Greedy basis of `span(candidates)` drawn from `candidates` in order.
    pub fn greedy(ambient: usize, candidates: &[Vector]) -> Self {
        let picked = Subspace::zero(ambient)
            .extend_by(candidates)
            .into_iter()
            .cloned()
            .collect();
        Frame::new(ambient, picked).expect("greedy choice is independent")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn span(&self) -> Subspace {
        Subspace::from_spanning(self.ambient, self.vectors.iter().cloned())
    }

    /// Coordinates of `v` with respect to the frame, if `v` is in its span.
    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        let r = self.augmented.reduce(&SparseRow::from_dense(v));
        if r.lead().is_some_and(|c| c < self.ambient) {
            return None;
        }
        let mut c = zero_vec(self.vectors.len());
        for (j, x) in r.0 {
            c[j - self.ambient] = -x;
        }
        Some(c)
    }

    pub fn combine(&self, coeffs: &[Q]) -> Vector {
        let mut v = zero_vec(self.ambient);
        for (c, u) in coeffs.iter().zip(&self.vectors) {
            add_scaled(&mut v, c, u);
        }
        v
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Reshapes a flat vector in row-major order.
    pub fn from_flat(rows: usize, cols: usize, data: Vector) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn flat(&self) -> &[Q] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add_scaled_assign(&mut self, c: &Q, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        add_scaled(&mut self.data, c, &other.data);
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert_dense(self.row(i));
        }
        e.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Kronecker product; index `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Image of the column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.rows, (0..self.cols).map(|j| self.column(j)))
    }

    pub fn kernel(&self) -> Subspace {
        null_space(
            self.cols,
            (0..self.rows).map(|i| SparseRow::from_dense(self.row(i))),
        )
    }

    /// `true` if every entry is a non-negative integer.
    pub fn is_natural(&self) -> bool {
        self.data.iter().all(|x| x.is_integer() && !x.is_negative())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let parts: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "[{}]", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Subspace::from_spanning(3, vec![v(&[1, 2, 3]), v(&[2, 4, 7])]);
        let b = Subspace::from_spanning(3, vec![v(&[0, 0, 1]), v(&[3, 6, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[v(&[1, 2, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_rows(vec![v(&[1, 1, 1])]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            assert!(is_zero_vec(&m.mul_vec(b)));
        }
    }

    #[test]
    fn coords_and_reduce() {
        let s = Subspace::from_spanning(3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert_eq!(s.coords(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(s.coords(&v(&[2, 3, 4])), None);
        assert_eq!(s.reduce(&v(&[2, 3, 4])), v(&[0, 0, -1]));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_spanning(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(
            a.intersect(&b),
            Subspace::from_spanning(3, vec![v(&[0, 1, 0])])
        );
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.complement().basis(), &[v(&[0, 0, 1])]);
    }

    #[test]
    fn rank_and_invertibility() {
        let m = Matrix::from_rows(vec![v(&[1, 2]), v(&[2, 4])]);
        assert_eq!(m.rank(), 1);
        assert!(!m.is_invertible());
        assert!(Matrix::identity(4).is_invertible());
        let p = Matrix::from_rows(vec![v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(p.mul(&p), Matrix::identity(2));
    }

    #[test]
    fn sparse_rows_merge_duplicates() {
        let r = SparseRow::from_entries(vec![(3, q(1)), (1, q(2)), (3, q(-1))]);
        assert_eq!(r, SparseRow(vec![(1, q(2))]));
    }

    #[test]
    fn frame_coordinates() {
        let f = Frame::new(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(f.coords(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(f.coords(&v(&[1, 0, 0])), None);
        assert!(Frame::new(2, vec![v(&[1, 2]), v(&[2, 4])]).is_none());
        let g = Frame::greedy(2, &[v(&[1, 2]), v(&[2, 4]), v(&[0, 1])]);
        assert_eq!(g.vectors(), &[v(&[1, 2]), v(&[0, 1])]);
    }

    #[test]
    fn kronecker() {
        let a = Matrix::from_rows(vec![v(&[1, 2]), v(&[0, 1])]);
        let b = Matrix::identity(2);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 2), &q(2));
        assert_eq!(k.get(1, 3), &q(2));
        assert_eq!(k.get(2, 0), &q(0));
    }
}
