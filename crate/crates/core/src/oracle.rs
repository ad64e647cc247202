//! Reference implementations that never touch row or column determinants.
//!
//! Everything here is Gaussian elimination over the quaternions. Column-space
//! questions use column operations with right coefficients; row-space questions
//! use row operations with left coefficients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::Quaternion;
use crate::qmatrix::QMatrix;

// Row-major working copy for elimination.
fn grid(a: &QMatrix) -> Vec<Vec<Quaternion>> {
    a.to_rows()
}

/// Rank from column operations `col_c -= col_p · α`.
pub fn elim_rank(a: &QMatrix) -> usize {
    let (m, n) = a.shape();
    let mut g = grid(a);
    let mut used = vec![false; n];
    let mut rank = 0;
    for r in 0..m {
        let Some(p) = (0..n).find(|&c| !used[c] && !g[r][c].is_zero()) else {
            continue;
        };
        used[p] = true;
        rank += 1;
        let pinv = g[r][p].inv().expect("nonzero pivot");
        for c in 0..n {
            if used[c] || g[r][c].is_zero() {
                continue;
            }
            let alpha = &pinv * &g[r][c];
            for row in &mut g[r..m] {
                if !row[p].is_zero() {
                    let d = &row[p] * &alpha;
                    row[c] -= &d;
                }
            }
        }
    }
    rank
}

/// Rank from row operations `row_t -= α · row_p`.
pub fn row_rank(a: &QMatrix) -> usize {
    let (rref, _) = reduce_rows(a);
    (0..rref.len())
        .filter(|&r| rref[r].iter().any(|q| !q.is_zero()))
        .count()
}

// Reduced row echelon form by left row operations; returns the form and pivot columns.
fn reduce_rows(a: &QMatrix) -> (Vec<Vec<Quaternion>>, Vec<usize>) {
    let (m, n) = a.shape();
    let mut g = grid(a);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&t| !g[t][c].is_zero()) else {
            continue;
        };
        g.swap(r, p);
        let pinv = g[r][c].inv().expect("nonzero pivot");
        g[r] = g[r].iter().map(|q| &pinv * q).collect();
        let pivot = g[r].clone();
        for (t, row) in g.iter_mut().enumerate() {
            if t == r || row[c].is_zero() {
                continue;
            }
            let alpha = row[c].clone();
            for (dst, src) in row[c..n].iter_mut().zip(&pivot[c..n]) {
                if !src.is_zero() {
                    let d = &alpha * src;
                    *dst -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (g, pivots)
}

/// Full-rank factorization `A = F·G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFactorization {
    pub f: QMatrix,
    pub g: QMatrix,
}

impl RankFactorization {
    pub fn rank(&self) -> usize {
        self.f.cols()
    }
}

/// `F` holds the pivot columns of `A`, `G` the nonzero rows of its reduced echelon form.
pub fn rank_factorize(a: &QMatrix) -> Result<RankFactorization> {
    let (rref, pivots) = reduce_rows(a);
    let r = pivots.len();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let f = QMatrix::from_fn(a.rows(), r, |i, j| a.at(i, pivots[j - 1] + 1).clone());
    let g = QMatrix::from_rows(rref.into_iter().take(r).collect())?;
    Ok(RankFactorization { f, g })
}

/// Gauss-Jordan inverse of a square matrix.
pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::shape("inverse of a non-square matrix"));
    }
    let n = a.rows();
    let aug = a.hstack(&QMatrix::identity(n))?;
    let (rref, pivots) = reduce_rows(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(QMatrix::from_fn(n, n, |i, j| rref[i - 1][n + j - 1].clone()))
}

/// Moore-Penrose inverse `G*(F*AG*)^{-1}F*` from a rank factorization.
pub fn mp_oracle(a: &QMatrix) -> QMatrix {
    let Ok(RankFactorization { f, g }) = rank_factorize(a) else {
        return QMatrix::zeros(a.cols(), a.rows());
    };
    let fs = f.adjoint();
    let gs = g.adjoint();
    let core = &(&fs * a) * &gs;
    let core_inv = inverse(&core).expect("F*AG* is nonsingular for a rank factorization");
    &(&gs * &core_inv) * &fs
}

/// Index of a square matrix from elimination ranks of its powers.
pub fn oracle_index(a: &QMatrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::shape("index of a non-square matrix"));
    }
    let n = a.rows();
    let mut power = QMatrix::identity(n);
    let mut rank = n;
    for k in 0..=n {
        let next = &power * a;
        let next_rank = elim_rank(&next);
        if next_rank == rank {
            return Ok(k);
        }
        power = next;
        rank = next_rank;
    }
    unreachable!("rank sequence stabilises by step n")
}

/// Drazin inverse `A^k (A^{2k+1})† A^k` with `k = Ind A`.
pub fn drazin_oracle(a: &QMatrix) -> Result<QMatrix> {
    let k = oracle_index(a)?;
    let ak = a.pow(k)?;
    let b = a.pow(2 * k + 1)?;
    Ok(&(&ak * &mp_oracle(&b)) * &ak)
}

/// Group inverse, defined only for index at most one.
pub fn group_oracle(a: &QMatrix) -> Result<QMatrix> {
    let k = oracle_index(a)?;
    if k > 1 {
        return Err(Error::IndexTooLarge { index: k, max: 1 });
    }
    drazin_oracle(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum System {
    Penrose,
    Drazin,
    CoreRight,
    CoreLeft,
    CoreEpRight,
    CoreEpLeft,
    Dmp,
    Mpd,
    Cmp,
}

impl System {
    pub const ALL: [System; 9] = [
        System::Penrose,
        System::Drazin,
        System::CoreRight,
        System::CoreLeft,
        System::CoreEpRight,
        System::CoreEpLeft,
        System::Dmp,
        System::Mpd,
        System::Cmp,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// `lhs - rhs` for a failed matrix equation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<QMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub system: System,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn equation(&mut self, name: &str, lhs: QMatrix, rhs: &QMatrix) {
        let passed = &lhs == rhs;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            residual: (!passed).then(|| &lhs - rhs),
        });
    }

    fn condition(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            residual: None,
        });
    }
}

/// Optional precomputed ingredients for [`verify_with`]. Missing values are
/// computed with the oracles.
#[derive(Debug, Clone, Default)]
pub struct Aux {
    pub index: Option<usize>,
    pub core_part: Option<QMatrix>,
}

pub fn verify(system: System, a: &QMatrix, x: &QMatrix) -> Result<VerificationReport> {
    verify_with(system, a, x, &Aux::default())
}

/// Evaluates every equation of `system` for candidate `x`.
pub fn verify_with(system: System, a: &QMatrix, x: &QMatrix, aux: &Aux) -> Result<VerificationReport> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(Error::shape(format!(
            "candidate is {}x{}, expected {}x{}",
            x.rows(),
            x.cols(),
            a.cols(),
            a.rows()
        )));
    }
    if system != System::Penrose && !a.is_square() {
        return Err(Error::shape(format!("{system:?} system needs a square matrix")));
    }
    let mut rep = VerificationReport {
        system,
        checks: Vec::new(),
    };
    let ax = a * x;
    let xa = x * a;
    let index = || -> Result<usize> { aux.index.map_or_else(|| oracle_index(a), Ok) };
    match system {
        System::Penrose => {
            rep.equation("AXA = A", &ax * a, a);
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("(AX)* = AX", ax.adjoint(), &ax);
            rep.equation("(XA)* = XA", xa.adjoint(), &xa);
        }
        System::Drazin => {
            let k = index()?;
            let ak = a.pow(k)?;
            let ak1 = &ak * a;
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("AX = XA", ax.clone(), &xa);
            rep.equation("XA^(k+1) = A^k", x * &ak1, &ak);
            rep.equation("A^(k+1)X = A^k", &ak1 * x, &ak);
        }
        System::CoreRight => {
            let p = a * &mp_oracle(a);
            let ra = elim_rank(a);
            rep.equation("AX = P_A", ax, &p);
            rep.condition(
                "column space of X equals that of A",
                elim_rank(&a.hstack(x)?) == ra && elim_rank(x) == ra,
            );
        }
        System::CoreLeft => {
            let q = &mp_oracle(a) * a;
            let ra = row_rank(a);
            rep.equation("XA = Q_A", xa, &q);
            rep.condition(
                "row space of X equals that of A",
                row_rank(&a.vstack(x)?) == ra && row_rank(x) == ra,
            );
        }
        System::CoreEpRight => {
            let k = index()?;
            let ak = a.pow(k)?;
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("(AX)* = AX", ax.adjoint(), &ax);
            rep.equation("XA^(k+1) = A^k", x * &(&ak * a), &ak);
            rep.condition(
                "column space of X within that of A^k",
                elim_rank(&ak.hstack(x)?) == elim_rank(&ak),
            );
        }
        System::CoreEpLeft => {
            let k = index()?;
            let ak = a.pow(k)?;
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("(XA)* = XA", xa.adjoint(), &xa);
            rep.equation("A^(k+1)X = A^k", &(&ak * a) * x, &ak);
            rep.condition(
                "row space of X within that of A^k",
                row_rank(&ak.vstack(x)?) == row_rank(&ak),
            );
        }
        System::Dmp => {
            let k = index()?;
            let ak = a.pow(k)?;
            let ad = drazin_oracle(a)?;
            let ap = mp_oracle(a);
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("XA = A^dA", xa, &(&ad * a));
            rep.equation("A^kX = A^kA†", &ak * x, &(&ak * &ap));
        }
        System::Mpd => {
            let k = index()?;
            let ak = a.pow(k)?;
            let ad = drazin_oracle(a)?;
            let ap = mp_oracle(a);
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("AX = AA^d", ax, &(a * &ad));
            rep.equation("XA^k = A†A^k", x * &ak, &(&ap * &ak));
        }
        System::Cmp => {
            let a1 = match &aux.core_part {
                Some(c) => c.clone(),
                None => &(a * &drazin_oracle(a)?) * a,
            };
            let ap = mp_oracle(a);
            rep.equation("XAX = X", &xa * x, x);
            rep.equation("AXA = A1", &ax * a, &a1);
            rep.equation("AX = A1A†", ax, &(&a1 * &ap));
            rep.equation("XA = A†A1", xa, &(&ap * &a1));
        }
    }
    Ok(rep)
}
