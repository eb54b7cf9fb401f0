//! Exact integer and rational linear algebra kernels.
//!
//! Matrices hold arbitrary-precision integers and all eliminations are
//! fraction-free (Bareiss), so intermediates never round and never overflow.
//! These kernels back every other module: determinants, integer kernels in a
//! canonical echelon form, definiteness tests and exact linear solving.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must match dimensions");
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix::new(rows, cols, data)
    }

    /// Convenience constructor from machine-word rows.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// First index pair (i, j) with entry (i,j) != (j,i), if any.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc
            })
            .collect()
    }

    /// All entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.data
            .iter()
            .map(i64::try_from)
            .collect::<std::result::Result<_, _>>()
            .ok()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        bareiss_echelon(&mut work, self.cols).pivots.len()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dense rational matrix, used for exact solution sets.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        RatMatrix { rows, cols, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix::new(
            m.rows(),
            m.cols(),
            m.entries()
                .iter()
                .map(|e| BigRational::from(e.clone()))
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    /// Conversion to an integer matrix; requires every entry to be integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(BigRational::to_integer).collect(),
        ))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Canonical basis of the integer kernel of a matrix.
///
/// The vectors are the rows of the Hermite-reduced basis of the saturated
/// kernel lattice: positive leading entries, entries above each pivot reduced
/// into `[0, pivot)`. Two equal kernels therefore compare equal vector lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn is_trivial(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Exact solution set of a linear system `a · x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// The system has exactly one solution.
    Unique(RatMatrix),
    /// The system is inconsistent.
    NoSolution,
    /// The system is consistent with a positive-dimensional solution set.
    NonUnique,
}

struct Echelon {
    /// (row, col) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
    sign: i32,
}

/// Fraction-free (Bareiss) row echelon reduction in place.
///
/// Pivots are searched in the first `pivot_cols` columns only; remaining
/// columns are carried along, which is how augmented systems are solved.
/// Divisions by the previous pivot are exact by the Bareiss identity.
fn bareiss_echelon(m: &mut [Vec<BigInt>], pivot_cols: usize) -> Echelon {
    let rows = m.len();
    let total_cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for col in 0..pivot_cols {
        if pr >= rows {
            break;
        }
        let Some(pivot_row) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot_row != pr {
            m.swap(pivot_row, pr);
            sign = -sign;
        }
        for r in (pr + 1)..rows {
            // The update must run even when m[r][col] is zero: every entry
            // has to stay a minor of the input for later divisions to be
            // exact.
            for c in (col + 1)..total_cols {
                let num = &m[pr][col] * &m[r][c] - &m[r][col] * &m[pr][c];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pr][col].clone();
        pivots.push((pr, col));
        pr += 1;
    }
    Echelon { pivots, sign }
}

/// Exact determinant via fraction-free elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut work: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let ech = bareiss_echelon(&mut work, n);
    if ech.pivots.len() < n {
        return Ok(BigInt::zero());
    }
    let (r, c) = ech.pivots[n - 1];
    let last = work[r][c].clone();
    Ok(if ech.sign < 0 { -last } else { last })
}

/// Positive definiteness by exact leading principal minors.
///
/// Runs a single swap-free Bareiss sweep: the pivot produced at step `k`
/// equals the k-th leading principal minor, so the matrix is positive
/// definite iff every pivot is positive; a zero or negative pivot decides
/// immediately.
pub fn is_positive_definite(m: &IntMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if let Some((i, j)) = m.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j });
    }
    let n = m.rows();
    let mut work: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !work[k][k].is_positive() {
            return Ok(false);
        }
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let num = &work[k][k] * &work[r][c] - &work[r][k] * &work[k][c];
                work[r][c] = num / &prev;
            }
            work[r][k] = BigInt::zero();
        }
        prev = work[k][k].clone();
    }
    Ok(true)
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Row-style Hermite reduction with a unimodular transform: returns
/// `(h, u, rank)` with `u * a = h`, `u` unimodular, `h` in row echelon form
/// with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`.
pub(crate) fn row_hnf_with_transform(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let rows = a.rows();
    let cols = a.cols();
    let mut h: Vec<Vec<BigInt>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let mut row = vec![BigInt::zero(); rows];
            row[i] = BigInt::one();
            row
        })
        .collect();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr >= rows {
            break;
        }
        // Euclidean sweep: shrink entries below the pivot row until one
        // nonzero entry remains in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pr..rows {
                if !h[r][col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h[r][col].abs() < h[b][col].abs(),
                    };
                    if better {
                        best = Some(r);
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap(pr, b);
            u.swap(pr, b);
            let mut done = true;
            for r in (pr + 1)..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = floor_div(&h[r][col], &h[pr][col]);
                if !q.is_zero() {
                    for c in 0..cols {
                        let s = &h[pr][c] * &q;
                        h[r][c] -= s;
                    }
                    for c in 0..rows {
                        let s = &u[pr][c] * &q;
                        u[r][c] -= s;
                    }
                }
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pr][col].is_zero() {
            continue;
        }
        if h[pr][col].is_negative() {
            for c in 0..cols {
                h[pr][c] = -h[pr][c].clone();
            }
            for c in 0..rows {
                u[pr][c] = -u[pr][c].clone();
            }
        }
        for r in 0..pr {
            let q = floor_div(&h[r][col], &h[pr][col]);
            if !q.is_zero() {
                for c in 0..cols {
                    let s = &h[pr][c] * &q;
                    h[r][c] -= s;
                }
                for c in 0..rows {
                    let s = &u[pr][c] * &q;
                    u[r][c] -= s;
                }
            }
        }
        pr += 1;
    }
    let hm = IntMatrix::from_fn(rows, cols, |i, j| h[i][j].clone());
    let um = IntMatrix::from_fn(rows, rows, |i, j| u[i][j].clone());
    (hm, um, pr)
}

/// Canonical (Hermite-reduced) basis of the saturated integer kernel
/// `{ x in Z^cols : m · x = 0 }`.
pub fn integer_kernel(m: &IntMatrix) -> KernelBasis {
    let (_, u, rank) = row_hnf_with_transform(&m.transpose());
    let n = m.cols();
    if rank == n {
        return KernelBasis {
            vectors: Vec::new(),
        };
    }
    // Rows of `u` past the rank annihilate the transpose, i.e. are kernel
    // vectors of `m`; they form a basis of the full saturated kernel because
    // `u` is unimodular. Hermite-reduce once more for the canonical form.
    let raw = IntMatrix::from_fn(n - rank, n, |i, j| u.get(rank + i, j).clone());
    let (h, _, krank) = row_hnf_with_transform(&raw);
    debug_assert_eq!(krank, n - rank);
    let vectors = (0..krank).map(|i| h.row(i).to_vec()).collect();
    KernelBasis { vectors }
}

/// Exact solution set of `a · x = b` with a rational right-hand side.
pub fn solve_rational(a: &IntMatrix, b: &RatMatrix) -> LinearSolution {
    assert_eq!(a.rows(), b.rows(), "right-hand side row count must match");
    let m = a.rows();
    let n = a.cols();
    let k = b.cols();
    // Scale each augmented row to integers.
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut scale = BigInt::one();
        for j in 0..k {
            scale = scale.lcm(b.get(i, j).denom());
        }
        let mut row: Vec<BigInt> = Vec::with_capacity(n + k);
        for j in 0..n {
            row.push(a.get(i, j) * &scale);
        }
        for j in 0..k {
            let v = b.get(i, j);
            row.push(v.numer() * (&scale / v.denom()));
        }
        work.push(row);
    }
    let ech = bareiss_echelon(&mut work, n);
    let rank = ech.pivots.len();
    // Inconsistency: a zero row of the coefficient part with a nonzero tail.
    for row in work.iter().skip(rank) {
        if row[n..].iter().any(|v| !v.is_zero()) {
            return LinearSolution::NoSolution;
        }
    }
    if rank < n {
        return LinearSolution::NonUnique;
    }
    // rank == n: every column has a pivot, in order; back-substitute.
    let mut x = vec![vec![BigRational::zero(); k]; n];
    for col in 0..k {
        for i in (0..n).rev() {
            let mut acc = BigRational::from(work[i][n + col].clone());
            for j in (i + 1)..n {
                acc -= BigRational::from(work[i][j].clone()) * &x[j][col];
            }
            x[i][col] = acc / BigRational::from(work[i][i].clone());
        }
    }
    let data = (0..n).flat_map(|i| x[i].clone()).collect();
    LinearSolution::Unique(RatMatrix::new(n, k, data))
}

/// Convenience wrapper for integer right-hand sides.
pub fn solve_integer(a: &IntMatrix, b: &IntMatrix) -> LinearSolution {
    solve_rational(a, &RatMatrix::from_int(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn det_identity_case() {
        assert_eq!(det_exact(&m(&[vec![1]])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn det_two_by_two_by_hand_expansion() {
        // 2*2 - (-1)(-1) = 3
        assert_eq!(
            det_exact(&m(&[vec![2, -1], vec![-1, 2]])).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn det_repeated_rows_is_zero() {
        let all2 = m(&[vec![2, 2, 2], vec![2, 2, 2], vec![2, 2, 2]]);
        assert_eq!(det_exact(&all2).unwrap(), BigInt::from(0));
    }

    #[test]
    fn det_rejects_non_square() {
        let r = det_exact(&m(&[vec![1, 2]]));
        assert_eq!(r, Err(Error::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn kernel_of_nondegenerate_gram_is_trivial() {
        let k = integer_kernel(&m(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(k.rank(), 0);
        assert!(k.is_trivial());
    }

    #[test]
    fn kernel_of_all_two_matrix_is_canonical() {
        let k = integer_kernel(&m(&[vec![2, 2, 2], vec![2, 2, 2], vec![2, 2, 2]]));
        assert_eq!(k.rank(), 2);
        // Hermite-reduced canonical form of span{(1,-1,0),(0,1,-1)}.
        let expect: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 0.into(), (-1).into()],
            vec![0.into(), 1.into(), (-1).into()],
        ];
        assert_eq!(k.vectors(), expect.as_slice());
    }

    #[test]
    fn kernel_of_zero_one_by_one() {
        let k = integer_kernel(&m(&[vec![0]]));
        assert_eq!(k.rank(), 1);
        assert_eq!(k.vectors(), &[vec![BigInt::from(1)]]);
    }

    #[test]
    fn kernel_is_saturated_not_just_scaled() {
        // Kernel of (2 4) is Z·(2,-1); a naive clear-denominators basis
        // could produce (4,-2).
        let k = integer_kernel(&m(&[vec![2, 4]]));
        assert_eq!(k.vectors(), &[vec![BigInt::from(2), BigInt::from(-1)]]);
    }

    #[test]
    fn positive_definite_examples() {
        assert!(is_positive_definite(&m(&[vec![2]])).unwrap());
        assert!(is_positive_definite(&m(&[vec![2, -1], vec![-1, 2]])).unwrap());
        let all2 = m(&[vec![2, 2, 2], vec![2, 2, 2], vec![2, 2, 2]]);
        assert!(!is_positive_definite(&all2).unwrap());
    }

    #[test]
    fn positive_definite_rejects_non_symmetric() {
        let r = is_positive_definite(&m(&[vec![2, 1], vec![0, 2]]));
        assert_eq!(r, Err(Error::NotSymmetric { i: 0, j: 1 }));
    }

    #[test]
    fn solve_unique_system() {
        // x+y=2, x-y=0  =>  (1,1)
        let a = m(&[vec![1, 1], vec![1, -1]]);
        let b = m(&[vec![2], vec![0]]);
        match solve_integer(&a, &b) {
            LinearSolution::Unique(x) => {
                assert_eq!(x.get(0, 0), &BigRational::from(BigInt::from(1)));
                assert_eq!(x.get(1, 0), &BigRational::from(BigInt::from(1)));
            }
            other => panic!("expected unique solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent_system() {
        let a = m(&[vec![0]]);
        let b = m(&[vec![1]]);
        assert_eq!(solve_integer(&a, &b), LinearSolution::NoSolution);
    }

    #[test]
    fn solve_underdetermined_system() {
        let a = m(&[vec![1, 1]]);
        let b = m(&[vec![2]]);
        assert_eq!(solve_integer(&a, &b), LinearSolution::NonUnique);
    }

    #[test]
    fn hnf_transform_invariant() {
        let a = m(&[vec![4, 6, 2], vec![2, 2, 2], vec![6, 8, 4]]);
        let (h, u, rank) = row_hnf_with_transform(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(rank, a.rank());
        assert_eq!(det_exact(&u).unwrap().abs(), BigInt::one());
    }

    /// Independent determinant by recursive cofactor expansion.
    fn naive_det(mat: &IntMatrix) -> BigInt {
        let n = mat.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return mat.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor = IntMatrix::from_fn(n - 1, n - 1, |r, c| {
                mat.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = mat.get(0, j) * naive_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn leading_minor(mat: &IntMatrix, k: usize) -> IntMatrix {
        IntMatrix::from_fn(k, k, |i, j| mat.get(i, j).clone())
    }

    /// Exhaustive sign test over a bounded integer box; a necessary
    /// condition for definiteness used as a cross-check.
    fn definite_by_box_oracle(mat: &IntMatrix, bound: i64) -> bool {
        let n = mat.rows();
        let mut x = vec![-bound; n];
        loop {
            if x.iter().any(|&v| v != 0) {
                let xv: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
                let mx = mat.apply(&xv);
                let mut q = BigInt::zero();
                for i in 0..n {
                    q += &xv[i] * &mx[i];
                }
                if !q.is_positive() {
                    return false;
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    return true;
                }
                if x[i] < bound {
                    x[i] += 1;
                    break;
                }
                x[i] = -bound;
                i += 1;
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn det_is_multiplicative(a in small_matrix(3), b in small_matrix(3)) {
            let lhs = det_exact(&a.mul(&b)).unwrap();
            let rhs = det_exact(&a).unwrap() * det_exact(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn det_matches_cofactor_expansion(a in small_matrix(4)) {
            prop_assert_eq!(det_exact(&a).unwrap(), naive_det(&a));
        }

        #[test]
        fn kernel_vectors_annihilate(a in rect_matrix()) {
            let k = integer_kernel(&a);
            for v in k.vectors() {
                let image = a.apply(v);
                prop_assert!(image.iter().all(BigInt::is_zero));
            }
            prop_assert_eq!(k.rank() + a.rank(), a.cols());
        }

        #[test]
        fn definiteness_matches_sylvester_oracle(sym in small_symmetric(4)) {
            // Sylvester criterion recomputed with the independent cofactor
            // determinant.
            let oracle = (1..=sym.rows())
                .all(|k| naive_det(&leading_minor(&sym, k)).is_positive());
            let fast = is_positive_definite(&sym).unwrap();
            prop_assert_eq!(fast, oracle);
            if fast {
                prop_assert!(definite_by_box_oracle(&sym, 3));
                prop_assert!(integer_kernel(&sym).is_trivial());
                for i in 0..sym.rows() {
                    prop_assert!(sym.get(i, i).is_positive());
                }
            }
        }

        #[test]
        fn solve_roundtrip_on_square_systems(a in small_matrix(4), b in small_matrix_cols(4, 2)) {
            match solve_integer(&a, &b) {
                LinearSolution::Unique(x) => {
                    // a * x == b exactly, in rationals
                    for i in 0..4 {
                        for j in 0..2 {
                            let mut acc = BigRational::zero();
                            for k in 0..4 {
                                acc += BigRational::from(a.get(i, k).clone()) * x.get(k, j);
                            }
                            prop_assert_eq!(acc, BigRational::from(b.get(i, j).clone()));
                        }
                    }
                }
                LinearSolution::NonUnique | LinearSolution::NoSolution => {
                    prop_assert_eq!(det_exact(&a).unwrap(), BigInt::zero());
                }
            }
        }
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), n)
            .prop_map(|rows| IntMatrix::from_i64_rows(&rows))
    }

    fn small_matrix_cols(n: usize, k: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, k), n)
            .prop_map(|rows| IntMatrix::from_i64_rows(&rows))
    }

    fn rect_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
                .prop_map(|rows| IntMatrix::from_i64_rows(&rows))
        })
    }

    fn small_symmetric(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |vals| {
            let mut m = IntMatrix::zeros(n, n);
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = BigInt::from(it.next().unwrap());
                    m.set(i, j, v.clone());
                    m.set(j, i, v);
                }
            }
            m
        })
    }
}
