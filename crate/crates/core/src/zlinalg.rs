//! Exact integer and rational linear algebra underlying all lattice and cone
//! computations: Hermite normal form, lattice membership and coordinates,
//! primitivity tests, and rational linear solving.

use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix with row-major storage and arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nc = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), nc, "ragged rows");
                r.iter().map(|&v| Int::from(v))
            })
            .collect();
        IntMatrix::new(rows.len(), nc, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Int {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_scaled_row(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) - q * self.at(src, c);
            *self.at_mut(dst, c) = v;
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + self.at(i, k) * other.at(k, j);
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `H = U * m`, `U` unimodular, pivots positive,
/// entries above each pivot reduced into `[0, pivot)`, zero rows trailing.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let (nr, nc) = (m.rows(), m.cols());
    let mut pivot_row = 0;
    for col in 0..nc {
        if pivot_row == nr {
            break;
        }
        // Euclidean elimination below pivot_row in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..nr {
                if !h.at(r, col).is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) if h.at(r, col).abs() < h.at(b, col).abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut any_left = false;
            for r in pivot_row + 1..nr {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let (q, rem) = h.at(r, col).div_rem(h.at(pivot_row, col));
                h.sub_scaled_row(r, pivot_row, &q);
                u.sub_scaled_row(r, pivot_row, &q);
                if !rem.is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for r in 0..pivot_row {
            let q = h.at(r, col).div_floor(h.at(pivot_row, col));
            h.sub_scaled_row(r, pivot_row, &q);
            u.sub_scaled_row(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// A sublattice of ℤ^ambient_dim, stored as the nonzero rows of the row-style
/// Hermite normal form of its generator matrix. The basis is canonical: two
/// generating sets span the same lattice iff they produce equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    basis: Vec<Vec<Int>>,
}

impl LatticeBasis {
    pub fn from_generators(ambient_dim: usize, gens: &[Vec<Int>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), ambient_dim, "generator length mismatch");
        }
        let entries: Vec<Int> = gens.iter().flatten().cloned().collect();
        let m = IntMatrix::new(gens.len(), ambient_dim, entries);
        let (h, _) = hnf(&m);
        let basis = (0..h.rows())
            .map(|r| h.row(r).to_vec())
            .filter(|row| row.iter().any(|v| !v.is_zero()))
            .collect();
        LatticeBasis { ambient_dim, basis }
    }

    /// The zero lattice in ℤ^ambient_dim.
    pub fn empty(ambient_dim: usize) -> Self {
        LatticeBasis { ambient_dim, basis: Vec::new() }
    }

    /// The standard lattice ℤ^n inside itself.
    pub fn standard(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![Int::zero(); n];
                v[i] = Int::one();
                v
            })
            .collect();
        LatticeBasis { ambient_dim: n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is not in the
    /// lattice. Exact; relies on the HNF shape of the basis.
    pub fn coords(&self, v: &[Int]) -> Result<Option<Vec<Int>>, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector has length {}, ambient dimension is {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let pivot_col = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            let (q, rem) = residual[pivot_col].div_rem(&row[pivot_col]);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (res, b) in residual.iter_mut().zip(row) {
                *res -= &q * b;
            }
            coords.push(q);
        }
        if residual.iter().all(|x| x.is_zero()) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[Int]) -> Result<bool, Error> {
        Ok(self.coords(v)?.is_some())
    }

    /// True iff `v` is a primitive (indivisible) element of the lattice,
    /// i.e. the gcd of its coordinate vector is 1.
    pub fn is_primitive(&self, v: &[Int]) -> Result<bool, Error> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let coords = self.coords(v)?.ok_or(Error::NotInLattice)?;
        let g = coords.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        Ok(g.is_one())
    }

    /// The ambient vector with the given basis coordinates.
    pub fn from_coords(&self, coords: &[Int]) -> Vec<Int> {
        assert_eq!(coords.len(), self.basis.len());
        let mut out = vec![Int::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }
}

/// Rational vector, stored in lowest terms with positive denominators
/// (maintained by the underlying rational type).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVector {
    entries: Vec<Rat>,
}

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector { entries }
    }

    pub fn zero(n: usize) -> Self {
        RatVector { entries: vec![Rat::zero(); n] }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        RatVector { entries: values.iter().map(|&v| Rat::from_integer(Int::from(v))).collect() }
    }

    pub fn from_ints(values: &[Int]) -> Self {
        RatVector { entries: values.iter().map(|v| Rat::from_integer(v.clone())).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        assert_eq!(self.len(), other.len(), "dot of mismatched lengths");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len());
        RatVector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len());
        RatVector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> RatVector {
        RatVector::new(self.entries.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> RatVector {
        RatVector::new(self.entries.iter().map(|a| -a).collect())
    }

    /// Scales by a positive rational so that the entries become integers with
    /// gcd 1. Direction is preserved. Panics on the zero vector.
    pub fn primitive_integer(&self) -> Vec<Int> {
        assert!(!self.is_zero(), "primitive representative of the zero vector");
        let denom_lcm = self
            .entries
            .iter()
            .fold(Int::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<Int> = self.entries.iter().map(|e| e.numer() * &denom_lcm / e.denom()).collect();
        let g = ints.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|v| v / &g).collect()
    }

    /// The canonical primitive-integer form of a ray direction.
    pub fn canonical_ray(&self) -> RatVector {
        RatVector::from_ints(&self.primitive_integer())
    }
}

/// Exact solution of `A x = b` where the rows of `a` form the matrix.
///
/// Returns a particular solution (free variables set to 0), or `None` when
/// the system is inconsistent.
pub fn solve_rational(a: &[RatVector], b: &RatVector) -> Result<Option<RatVector>, Error> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {m} rows, right-hand side has length {}",
            b.len()
        )));
    }
    let n = a.first().map_or(0, |r| r.len());
    for row in a {
        if row.len() != n {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
    }
    // Augmented matrix, forward elimination with exact pivoting.
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.entries())
        .map(|(row, rhs)| {
            let mut r: Vec<Rat> = row.entries().to_vec();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for c in col..=n {
            aug[row][c] = &aug[row][c] * &inv;
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = &aug[r][c] - &f * &aug[row][c];
                    aug[r][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    // Inconsistency: a zero row with nonzero rhs.
    for r in row..m {
        if !aug[r][n].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[r][n].clone();
    }
    Ok(Some(RatVector::new(x)))
}

/// Rank of the set of rational vectors, by Gaussian elimination.
pub fn rank(vectors: &[RatVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    let mut rows: Vec<Vec<Rat>> = vectors.iter().map(|v| v.entries().to_vec()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..n {
                    let v = &rows[r][c] - &f * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
