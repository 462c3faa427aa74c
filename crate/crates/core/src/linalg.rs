//! Exact linear systems: row reduction, kernels, and forced coordinates.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{ExactOrdering, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("row {0} has the wrong length")]
    Ragged(usize),
    #[error("right-hand side has {found} entries for {rows} rows")]
    RhsLength { rows: usize, found: usize },
    #[error("cannot decide whether a pivot candidate is zero")]
    UncertifiedPivot,
    #[error("solution failed back-substitution")]
    Uncertified,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<ExactScalar>),
    /// `particular + span(kernel)`.
    Family { particular: Vec<ExactScalar>, kernel: Vec<Vec<ExactScalar>> },
    Inconsistent,
}

impl Solution {
    pub fn particular(&self) -> Option<&[ExactScalar]> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Family { particular, .. } => Some(particular),
            Solution::Inconsistent => None,
        }
    }

    pub fn kernel_dimension(&self) -> usize {
        match self {
            Solution::Family { kernel, .. } => kernel.len(),
            _ => 0,
        }
    }
}

/// `A x = b` with named unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    pub coefficients: Vec<Vec<ExactScalar>>,
    pub rhs: Vec<ExactScalar>,
    pub labels: Vec<String>,
}

struct Reduced {
    rows: Vec<Vec<ExactScalar>>,
    pivots: Vec<usize>,
}

fn is_zero_certified(x: &ExactScalar) -> Result<bool, LinalgError> {
    match x.signum() {
        ExactOrdering::Equal => Ok(true),
        ExactOrdering::Uncertified => Err(LinalgError::UncertifiedPivot),
        _ => Ok(false),
    }
}

/// Reduced row echelon form of an augmented or plain matrix; pivots are
/// searched only among the first `cols` columns.
fn rref(mut rows: Vec<Vec<ExactScalar>>, cols: usize) -> Result<Reduced, LinalgError> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let mut found = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if !is_zero_certified(&row[c])? {
                found = Some(i);
                break;
            }
        }
        let Some(p) = found else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip().map_err(|_| LinalgError::UncertifiedPivot)?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let pivot_row = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(Reduced { rows, pivots })
}

fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl LinearSystem {
    pub fn new(
        coefficients: Vec<Vec<ExactScalar>>,
        rhs: Vec<ExactScalar>,
        labels: Vec<String>,
    ) -> Result<Self, LinalgError> {
        let cols = labels.len();
        if let Some(i) = coefficients.iter().position(|row| row.len() != cols) {
            return Err(LinalgError::Ragged(i));
        }
        if rhs.len() != coefficients.len() {
            return Err(LinalgError::RhsLength { rows: coefficients.len(), found: rhs.len() });
        }
        Ok(LinearSystem { coefficients, rhs, labels })
    }

    /// Homogeneous system.
    pub fn homogeneous(coefficients: Vec<Vec<ExactScalar>>, labels: Vec<String>) -> Result<Self, LinalgError> {
        let rhs = vec![ExactScalar::zero(); coefficients.len()];
        Self::new(coefficients, rhs, labels)
    }

    pub fn unknowns(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> Result<usize, LinalgError> {
        Ok(rref(self.coefficients.clone(), self.unknowns())?.pivots.len())
    }

    /// Solves exactly and certifies the result by substitution.
    pub fn solve(&self) -> Result<Solution, LinalgError> {
        let n = self.unknowns();
        let augmented: Vec<Vec<ExactScalar>> = self
            .coefficients
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| row.iter().cloned().chain(core::iter::once(b.clone())).collect())
            .collect();
        let Reduced { rows, pivots } = rref(augmented, n)?;
        // a zero row with nonzero right-hand side
        for row in rows.iter().skip(pivots.len()) {
            if !is_zero_certified(&row[n])? {
                return Ok(Solution::Inconsistent);
            }
        }
        let mut particular = vec![ExactScalar::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = rows[r][n].clone();
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let kernel: Vec<Vec<ExactScalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![ExactScalar::zero(); n];
                v[f] = ExactScalar::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -&rows[r][f];
                }
                v
            })
            .collect();
        self.certify(&particular, &kernel)?;
        Ok(if kernel.is_empty() {
            Solution::Unique(particular)
        } else {
            Solution::Family { particular, kernel }
        })
    }

    fn certify(&self, particular: &[ExactScalar], kernel: &[Vec<ExactScalar>]) -> Result<(), LinalgError> {
        for (row, b) in self.coefficients.iter().zip(&self.rhs) {
            if !(dot(row, particular) - b).is_zero() {
                return Err(LinalgError::Uncertified);
            }
            if kernel.iter().any(|k| !dot(row, k).is_zero()) {
                return Err(LinalgError::Uncertified);
            }
        }
        Ok(())
    }

    /// Weights `w` with `wᵀA = e_j`, when they exist. Then every solution has
    /// `x_j = wᵀb`, whatever the right-hand side.
    pub fn row_space_witness(&self, j: usize) -> Result<Option<Vec<ExactScalar>>, LinalgError> {
        let m = self.coefficients.len();
        let n = self.unknowns();
        let transposed: Vec<Vec<ExactScalar>> =
            (0..n).map(|c| (0..m).map(|r| self.coefficients[r][c].clone()).collect()).collect();
        let target: Vec<ExactScalar> =
            (0..n).map(|c| if c == j { ExactScalar::one() } else { ExactScalar::zero() }).collect();
        let labels = (0..m).map(|r| alloc::format!("w{r}")).collect();
        match LinearSystem::new(transposed, target, labels)?.solve()? {
            Solution::Inconsistent => Ok(None),
            s => Ok(s.particular().map(<[ExactScalar]>::to_vec)),
        }
    }

    /// The value unknown `j` takes in every solution, or `None` when it is not
    /// determined (or the system is inconsistent).
    pub fn forced_value(&self, j: usize) -> Result<Option<ExactScalar>, LinalgError> {
        if matches!(self.solve()?, Solution::Inconsistent) {
            return Ok(None);
        }
        Ok(self.row_space_witness(j)?.map(|w| dot(&w, &self.rhs)))
    }
}
