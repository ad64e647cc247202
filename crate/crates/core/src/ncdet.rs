//! Row and column determinants of quaternion matrices and the minor sums
//! built from them.
//!
//! Every determinant is a sum over all `n!` permutations. Each permutation is
//! written in a canonical cycle form that fixes the order of the factors in
//! its product; that order matters because quaternion multiplication does not
//! commute.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactq::{Quaternion, Rational};
use crate::qmatrix::{IndexSet, QMatrix};

pub const DEFAULT_SIZE_CAP: usize = 7;
pub const SIZE_CAP_ENV: &str = "QUATINV_DET_CAP";

static SIZE_CAP: AtomicUsize = AtomicUsize::new(0);
static VERIFY: AtomicBool = AtomicBool::new(false);

/// Largest matrix order accepted by the determinantal routines.
///
/// Defaults to 7, or the value of `QUATINV_DET_CAP` when set.
pub fn size_cap() -> usize {
    match SIZE_CAP.load(Ordering::Relaxed) {
        0 => {
            let cap = std::env::var(SIZE_CAP_ENV)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
                .filter(|&c| c > 0)
                .unwrap_or(DEFAULT_SIZE_CAP);
            SIZE_CAP.store(cap, Ordering::Relaxed);
            cap
        }
        cap => cap,
    }
}

pub fn set_size_cap(cap: usize) {
    SIZE_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Enables exhaustive self-checks: every alternative form or method is
/// computed and compared.
pub fn set_verification(on: bool) {
    VERIFY.store(on, Ordering::Relaxed);
}

pub fn verification_enabled() -> bool {
    VERIFY.load(Ordering::Relaxed)
}

pub(crate) fn check_cap(order: usize) -> Result<()> {
    let cap = size_cap();
    if order > cap {
        Err(Error::SizeCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ordered {
    /// Left-ordered form used by `rdet_i`.
    Left,
    /// Right-ordered form used by `cdet_j`.
    Right,
}

/// A permutation of `1..=n` in canonical cycle form.
///
/// Cycles are stored as written: `(c0 c1 ... cm)` sends `c0 -> c1 -> ... -> cm -> c0`.
/// In the left-ordered form the first cycle starts with the anchor, the others start
/// with their minimum and appear in increasing order of it. In the right-ordered form
/// the last cycle ends with the anchor, the others end with their minimum and appear
/// in decreasing order of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePermutation {
    n: usize,
    cycles: Vec<Vec<usize>>,
    sign: i8,
    ordered: Ordered,
}

impl CyclePermutation {
    /// `images[t - 1] = σ(t)`, 1-based.
    pub fn left_ordered(images: &[usize], anchor: usize) -> Result<Self> {
        Self::build(images, anchor, Ordered::Left)
    }

    pub fn right_ordered(images: &[usize], anchor: usize) -> Result<Self> {
        Self::build(images, anchor, Ordered::Right)
    }

    fn build(images: &[usize], anchor: usize, ordered: Ordered) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::shape(format!("{images:?} is not a permutation of 1..={n}")));
            }
        }
        if !(1..=n).contains(&anchor) {
            return Err(Error::shape(format!("anchor {anchor} out of 1..={n}")));
        }
        // Walk each cycle from its start; `start` is the anchor or the minimum.
        let walk = |start: usize| {
            let mut cyc = vec![start];
            let mut x = images[start - 1];
            while x != start {
                cyc.push(x);
                x = images[x - 1];
            }
            cyc
        };
        let anchor_cycle = walk(anchor);
        let mut visited = vec![false; n + 1];
        for &x in &anchor_cycle {
            visited[x] = true;
        }
        let mut others = Vec::new();
        for m in 1..=n {
            if !visited[m] {
                let cyc = walk(m);
                for &x in &cyc {
                    visited[x] = true;
                }
                others.push(cyc);
            }
        }
        let r = others.len() + 1;
        let sign = if (n - r).is_multiple_of(2) { 1 } else { -1 };
        let cycles = match ordered {
            Ordered::Left => std::iter::once(anchor_cycle).chain(others).collect(),
            Ordered::Right => {
                // Rotate each cycle so its start sits at the right end.
                let rotate = |mut c: Vec<usize>| {
                    c.rotate_left(1);
                    c
                };
                others
                    .into_iter()
                    .rev()
                    .map(rotate)
                    .chain(std::iter::once(rotate(anchor_cycle)))
                    .collect()
            }
        };
        Ok(CyclePermutation {
            n,
            cycles,
            sign,
            ordered,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ordered(&self) -> Ordered {
        self.ordered
    }

    /// The `(row, column)` pairs of the term product, in multiplication order.
    pub fn factors(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n);
        for c in &self.cycles {
            let m = c.len();
            match self.ordered {
                Ordered::Left => {
                    for t in 0..m {
                        out.push((c[t], c[(t + 1) % m]));
                    }
                }
                Ordered::Right => {
                    // Starts at the right end of the written cycle.
                    out.push((c[m - 1], c[0]));
                    for t in 0..m - 1 {
                        out.push((c[t], c[t + 1]));
                    }
                }
            }
        }
        out
    }
}

/// One signed term of a determinant expansion, with 0-based factor positions.
struct Term {
    negative: bool,
    factors: Vec<(u8, u8)>,
}

type TermTable = Arc<Vec<Term>>;
type TermCache = Mutex<HashMap<(usize, usize, Ordered), TermTable>>;

fn term_table(n: usize, anchor: usize, ordered: Ordered) -> TermTable {
    static CACHE: OnceLock<TermCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(n, anchor, ordered)) {
        return Arc::clone(t);
    }
    let terms: Vec<Term> = (1..=n)
        .permutations(n)
        .map(|images| {
            let p = CyclePermutation::build(&images, anchor, ordered).expect("valid permutation");
            Term {
                negative: p.sign < 0,
                factors: p
                    .factors()
                    .into_iter()
                    .map(|(r, c)| ((r - 1) as u8, (c - 1) as u8))
                    .collect(),
            }
        })
        .collect();
    let table = Arc::new(terms);
    cache
        .lock()
        .unwrap()
        .insert((n, anchor, ordered), Arc::clone(&table));
    table
}

/// Evaluates a determinant of order `n` whose entries come from `entry(r, c)` (0-based).
fn expand<'a>(
    n: usize,
    anchor: usize,
    ordered: Ordered,
    entry: impl Fn(usize, usize) -> &'a Quaternion,
) -> Quaternion {
    if n == 0 {
        return Quaternion::one();
    }
    let table = term_table(n, anchor, ordered);
    let mut acc = Quaternion::zero();
    'terms: for term in table.iter() {
        let mut prod: Option<Quaternion> = None;
        for &(r, c) in &term.factors {
            let e = entry(r as usize, c as usize);
            if e.is_zero() {
                continue 'terms;
            }
            prod = Some(match prod {
                None => e.clone(),
                Some(p) => &p * e,
            });
        }
        let prod = prod.expect("non-empty product");
        if term.negative {
            acc -= &prod;
        } else {
            acc += prod;
        }
    }
    acc
}

fn square_order(a: &QMatrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::shape(format!(
            "determinant of non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

fn check_anchor(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::shape(format!("index {i} out of 1..={n}")))
    }
}

/// The `i`-th row determinant (1-based).
pub fn rdet(a: &QMatrix, i: usize) -> Result<Quaternion> {
    let n = square_order(a)?;
    check_anchor(i, n)?;
    check_cap(n)?;
    Ok(expand(n, i, Ordered::Left, |r, c| a.el(r, c)))
}

/// The `j`-th column determinant (1-based).
pub fn cdet(a: &QMatrix, j: usize) -> Result<Quaternion> {
    let n = square_order(a)?;
    check_anchor(j, n)?;
    check_cap(n)?;
    Ok(expand(n, j, Ordered::Right, |r, c| a.el(r, c)))
}

fn require_hermitian(a: &QMatrix) -> Result<()> {
    if a.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian)
    }
}

fn real_part(q: Quaternion) -> Result<Rational> {
    if q.is_real() {
        Ok(q.w)
    } else {
        Err(Error::InternalInconsistency(format!(
            "Hermitian determinant has non-real value {q}"
        )))
    }
}

/// Determinant of a Hermitian matrix.
///
/// Debug builds and verification mode compare all `2n` row and column determinants.
pub fn hdet(a: &QMatrix) -> Result<Rational> {
    require_hermitian(a)?;
    check_cap(a.rows())?;
    hdet_unchecked(a, cfg!(debug_assertions) || verification_enabled())
}

fn hdet_unchecked(a: &QMatrix, cross_check: bool) -> Result<Rational> {
    let n = a.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let value = expand(n, 1, Ordered::Left, |r, c| a.el(r, c));
    if cross_check {
        for t in 1..=n {
            for ordered in [Ordered::Left, Ordered::Right] {
                let other = expand(n, t, ordered, |r, c| a.el(r, c));
                if other != value {
                    return Err(Error::InternalInconsistency(format!(
                        "Hermitian determinant mismatch: {ordered:?} anchor {t} gives {other}, rdet_1 gives {value}"
                    )));
                }
            }
        }
    }
    real_part(value)
}

/// Anchored or unanchored families of strictly increasing index sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorFamily {
    pub n: usize,
    pub r: usize,
    pub anchor: Option<usize>,
}

impl MinorFamily {
    pub fn new(n: usize, r: usize, anchor: Option<usize>) -> Self {
        MinorFamily { n, r, anchor }
    }

    pub fn sets(&self) -> Vec<IndexSet> {
        if self.r > self.n {
            return Vec::new();
        }
        match self.anchor {
            None => (1..=self.n)
                .combinations(self.r)
                .map(|m| IndexSet::new(self.n, m).expect("sorted combination"))
                .collect(),
            Some(a) => {
                if self.r == 0 || !(1..=self.n).contains(&a) {
                    return Vec::new();
                }
                (1..=self.n)
                    .filter(|&t| t != a)
                    .combinations(self.r - 1)
                    .map(|mut m| {
                        m.push(a);
                        m.sort_unstable();
                        IndexSet::new(self.n, m).expect("sorted combination")
                    })
                    .collect()
            }
        }
    }
}

/// Sum of all principal minors of order `r` of a Hermitian matrix.
pub fn minor_sum(m: &QMatrix, r: usize) -> Result<Rational> {
    require_hermitian(m)?;
    let n = m.rows();
    if r > n {
        return Err(Error::shape(format!("minor order {r} exceeds {n}")));
    }
    check_cap(n)?;
    if r == 0 {
        return Ok(Rational::one());
    }
    let cross = verification_enabled();
    MinorFamily::new(n, r, None)
        .sets()
        .par_iter()
        .map(|beta| hdet_unchecked(&m.principal_submatrix(beta)?, cross))
        .try_reduce(Rational::zero, |a, b| Ok(a + b))
}

fn anchored_sum(m: &QMatrix, anchor: usize, b: &[Quaternion], r: usize, ordered: Ordered) -> Result<Quaternion> {
    let n = square_order(m)?;
    check_anchor(anchor, n)?;
    if b.len() != n {
        return Err(Error::shape(format!("vector of length {} for order {n}", b.len())));
    }
    if !(1..=n).contains(&r) {
        return Err(Error::shape(format!("minor order {r} out of 1..={n}")));
    }
    check_cap(n)?;
    Ok(anchored_sum_raw(m, anchor - 1, b, r, ordered))
}

// 0-based anchor; inputs already validated.
fn anchored_sum_raw(m: &QMatrix, anchor: usize, b: &[Quaternion], r: usize, ordered: Ordered) -> Quaternion {
    let mut acc = Quaternion::zero();
    for beta in MinorFamily::new(m.rows(), r, Some(anchor + 1)).sets() {
        let idx: Vec<usize> = beta.members().iter().map(|x| x - 1).collect();
        let local = beta.position(anchor + 1).expect("anchored set");
        let entry = |rr: usize, cc: usize| -> &Quaternion {
            let (gr, gc) = (idx[rr], idx[cc]);
            match ordered {
                Ordered::Right if gc == anchor => &b[gr],
                Ordered::Left if gr == anchor => &b[gc],
                _ => m.el(gr, gc),
            }
        };
        acc += expand(r, local, ordered, entry);
    }
    acc
}

/// `Σ_{β ∋ i} cdet_i` of the `β`-principal submatrix of `m` with column `i` replaced by `b`.
pub fn anchored_cdet_sum(m: &QMatrix, i: usize, b: &[Quaternion], r: usize) -> Result<Quaternion> {
    anchored_sum(m, i, b, r, Ordered::Right)
}

/// `Σ_{α ∋ j} rdet_j` of the `α`-principal submatrix of `m` with row `j` replaced by `b`.
pub fn anchored_rdet_sum(m: &QMatrix, j: usize, b: &[Quaternion], r: usize) -> Result<Quaternion> {
    anchored_sum(m, j, b, r, Ordered::Left)
}

/// Matrix of column-replacement numerators: entry `(i, j)` is
/// `anchored_cdet_sum(m, i, column j of rhs, r)`.
///
/// Right-linear in `rhs`: `cdet_numerators(m, R·C, r) = cdet_numerators(m, R, r)·C`.
pub fn cdet_numerators(m: &QMatrix, rhs: &QMatrix, r: usize) -> Result<QMatrix> {
    let n = square_order(m)?;
    if rhs.rows() != n {
        return Err(Error::shape(format!(
            "right-hand side has {} rows, expected {n}",
            rhs.rows()
        )));
    }
    if r == 0 || r > n {
        return Err(Error::shape(format!("minor order {r} out of 1..={n}")));
    }
    check_cap(n)?;
    let p = rhs.cols();
    let cols: Vec<Vec<Quaternion>> = (1..=p).map(|j| rhs.col(j)).collect();
    let data: Vec<Quaternion> = (0..n * p)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / p, idx % p);
            anchored_sum_raw(m, i, &cols[j], r, Ordered::Right)
        })
        .collect();
    QMatrix::new(n, p, data)
}

/// Matrix of row-replacement numerators: entry `(i, j)` is
/// `anchored_rdet_sum(m, j, row i of lhs, r)`.
///
/// Left-linear in `lhs`: `rdet_numerators(m, C·L, r) = C·rdet_numerators(m, L, r)`.
pub fn rdet_numerators(m: &QMatrix, lhs: &QMatrix, r: usize) -> Result<QMatrix> {
    let n = square_order(m)?;
    if lhs.cols() != n {
        return Err(Error::shape(format!(
            "left-hand side has {} columns, expected {n}",
            lhs.cols()
        )));
    }
    if r == 0 || r > n {
        return Err(Error::shape(format!("minor order {r} out of 1..={n}")));
    }
    check_cap(n)?;
    let p = lhs.rows();
    let rows: Vec<Vec<Quaternion>> = (1..=p).map(|i| lhs.row(i)).collect();
    let data: Vec<Quaternion> = (0..p * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            anchored_sum_raw(m, j, &rows[i], r, Ordered::Left)
        })
        .collect();
    QMatrix::new(p, n, data)
}

/// Largest order of a nonzero principal minor of the smaller Gram matrix of `a`.
pub fn det_rank(a: &QMatrix) -> Result<usize> {
    let gram = if a.cols() <= a.rows() {
        &a.adjoint() * a
    } else {
        a * &a.adjoint()
    };
    let n = gram.rows();
    check_cap(n)?;
    let cross = verification_enabled();
    for r in (1..=n).rev() {
        let sets = MinorFamily::new(n, r, None).sets();
        let nonzero = sets.par_iter().any(|beta| {
            let sub = gram.principal_submatrix(beta).expect("in range");
            hdet_unchecked(&sub, cross).map_or(true, |d| !d.is_zero())
        });
        if nonzero {
            return Ok(r);
        }
    }
    Ok(0)
}

/// Smallest `k >= 0` with `rank(A^{k+1}) = rank(A^k)`.
pub fn matrix_index(a: &QMatrix) -> Result<usize> {
    let n = square_order(a)?;
    let mut power = QMatrix::identity(n);
    let mut rank = n;
    for k in 0..=n {
        let next = &power * a;
        let next_rank = det_rank(&next)?;
        if next_rank == rank {
            return Ok(k);
        }
        power = next;
        rank = next_rank;
    }
    Err(Error::InternalInconsistency(
        "rank sequence of powers did not stabilise".into(),
    ))
}

/// Rank of `a^k` together with the power itself.
pub(crate) fn power_rank(a: &QMatrix, k: usize) -> Result<(QMatrix, usize)> {
    let p = a.pow(k)?;
    let r = det_rank(&p)?;
    Ok((p, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::Axis;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn m(rows: &[Vec<[i64; 4]>]) -> QMatrix {
        QMatrix::from_int_rows(rows).unwrap()
    }

    fn example() -> QMatrix {
        m(&[
            vec![[0; 4], [0, 0, 0, 1], [0; 4]],
            vec![[0, 1, 0, 0], [0; 4], [0, 0, -1, 0]],
            vec![[0; 4], [0, 0, 1, 0], [0; 4]],
        ])
    }

    #[test]
    fn left_ordered_form() {
        // σ = 1->3->2->1, 4 fixed; anchor 2.
        let p = CyclePermutation::left_ordered(&[3, 1, 2, 4], 2).unwrap();
        assert_eq!(p.cycles(), &[vec![2, 1, 3], vec![4]]);
        assert_eq!(p.sign(), 1);
        assert_eq!(p.factors(), vec![(2, 1), (1, 3), (3, 2), (4, 4)]);
        let t = CyclePermutation::left_ordered(&[2, 1, 4, 3], 3).unwrap();
        assert_eq!(t.cycles(), &[vec![3, 4], vec![1, 2]]);
        assert_eq!(t.sign(), 1);
    }

    #[test]
    fn right_ordered_form() {
        let p = CyclePermutation::right_ordered(&[2, 1, 3, 4], 3).unwrap();
        assert_eq!(p.cycles(), &[vec![4], vec![2, 1], vec![3]]);
        assert_eq!(p.sign(), -1);
        assert_eq!(p.factors(), vec![(4, 4), (1, 2), (2, 1), (3, 3)]);
        // τ = 1->2->3->1 anchored at 2 is written (3 1 2).
        let c = CyclePermutation::right_ordered(&[2, 3, 1], 2).unwrap();
        assert_eq!(c.cycles(), &[vec![3, 1, 2]]);
        assert_eq!(c.factors(), vec![(2, 3), (3, 1), (1, 2)]);
    }

    #[test]
    fn two_by_two_expansions() {
        let a = QMatrix::from_rows(vec![vec![q(0, 1, 0, 0), q(0, 0, 1, 0)], vec![q(0, 0, 0, 1), q(1, 1, 0, 0)]]).unwrap();
        let (a11, a12, a21, a22) = (a.at(1, 1), a.at(1, 2), a.at(2, 1), a.at(2, 2));
        assert_eq!(rdet(&a, 1).unwrap(), &(a11 * a22) - &(a12 * a21));
        assert_eq!(rdet(&a, 2).unwrap(), &(a22 * a11) - &(a21 * a12));
        assert_eq!(cdet(&a, 1).unwrap(), &(a22 * a11) - &(a12 * a21));
        assert_eq!(cdet(&a, 2).unwrap(), &(a11 * a22) - &(a21 * a12));
    }

    #[test]
    fn worked_values() {
        let a = m(&[vec![[0, 0, 0, -2], [0; 4]], vec![[0; 4], [2, 0, 0, 0]]]);
        assert_eq!(rdet(&a, 1).unwrap(), q(0, 0, 0, -4));
        let b = m(&[vec![[2, 0, 0, 0], [0, 2, 0, 0]], vec![[0, -2, 0, 0], [2, 0, 0, 0]]]);
        assert_eq!(rdet(&b, 1).unwrap(), Quaternion::zero());
        // The anchor cycle comes last, so cdet_1 of diag(a, d) is d·a.
        let d = m(&[vec![[0, 1, 0, 0], [0; 4]], vec![[0; 4], [0, 0, 1, 0]]]);
        assert_eq!(cdet(&d, 1).unwrap(), q(0, 0, 1, 0) * q(0, 1, 0, 0));
        assert_eq!(rdet(&d, 1).unwrap(), q(0, 1, 0, 0) * q(0, 0, 1, 0));
        let c = m(&[vec![[2, 1, 0, 0], [0; 4]], vec![[0; 4], [0, 3, 0, 0]]]);
        assert_eq!(cdet(&c, 1).unwrap(), q(2, 1, 0, 0) * q(0, 3, 0, 0));
        for n in 1..=4 {
            let id = QMatrix::identity(n);
            for t in 1..=n {
                assert!(rdet(&id, t).unwrap().is_one());
                assert!(cdet(&id, t).unwrap().is_one());
            }
        }
    }

    #[test]
    fn hermitian_determinants() {
        let a = example();
        let gram = &a.adjoint() * &a;
        assert_eq!(hdet(&gram).unwrap(), Rational::zero());
        // [[1, k], [k, 1]] is not Hermitian, although its first row determinant is 2.
        let h = m(&[vec![[1, 0, 0, 0], [0, 0, 0, 1]], vec![[0, 0, 0, 1], [1, 0, 0, 0]]]);
        assert_eq!(rdet(&h, 1).unwrap(), Quaternion::from_int(2));
        assert_eq!(hdet(&h), Err(Error::NotHermitian));
        let h = m(&[vec![[1, 0, 0, 0], [0, 0, 0, 1]], vec![[0, 0, 0, -1], [1, 0, 0, 0]]]);
        assert_eq!(hdet(&h).unwrap(), Rational::from_integer(0.into()));
        assert_eq!(hdet(&QMatrix::identity(4)).unwrap(), Rational::one());
        assert_eq!(hdet(&a), Err(Error::NotHermitian));
    }

    #[test]
    fn minor_sums() {
        let a = example();
        let gram = &a.adjoint() * &a;
        // Principal 2x2 minors of A*A are 2, 0 and 2.
        assert_eq!(minor_sum(&gram, 2).unwrap(), Rational::from_integer(4.into()));
        assert_eq!(minor_sum(&gram, 0).unwrap(), Rational::one());
        assert_eq!(minor_sum(&QMatrix::identity(4), 2).unwrap(), Rational::from_integer(6.into()));
    }

    #[test]
    fn anchored_sums() {
        let a = example();
        let gram = &a.adjoint() * &a;
        let zero = vec![Quaternion::zero(); 3];
        assert!(anchored_cdet_sum(&gram, 1, &zero, 2).unwrap().is_zero());
        assert!(anchored_rdet_sum(&gram, 3, &zero, 2).unwrap().is_zero());
        // Replacing with the matrix's own column sums the principal minors through the anchor.
        let own = anchored_cdet_sum(&gram, 2, &gram.col(2), 2).unwrap();
        assert_eq!(own, Quaternion::from_int(4));
        let col = a.adjoint().col(1);
        assert!(anchored_cdet_sum(&gram, 1, &col, 2).unwrap().is_zero());
        let aa = &a * &a.adjoint();
        let row = a.adjoint().row(2);
        // 4·(A†)_21 with A†_21 = -k/2.
        assert_eq!(anchored_rdet_sum(&aa, 1, &row, 2).unwrap(), q(0, 0, 0, -2));
        // Explicit replacement agrees with the fused evaluation.
        let replaced = gram.replace(Axis::Column, 1, &col).unwrap();
        let mut explicit = Quaternion::zero();
        for beta in MinorFamily::new(3, 2, Some(1)).sets() {
            let sub = replaced.principal_submatrix(&beta).unwrap();
            explicit += cdet(&sub, beta.position(1).unwrap()).unwrap();
        }
        assert!(explicit.is_zero());
    }

    #[test]
    fn families() {
        assert_eq!(MinorFamily::new(5, 2, None).sets().len(), 10);
        assert_eq!(MinorFamily::new(5, 3, Some(2)).sets().len(), 6);
        assert!(MinorFamily::new(5, 3, Some(2)).sets().iter().all(|s| s.contains(2)));
    }

    #[test]
    fn ranks_and_indices() {
        assert_eq!(det_rank(&example()).unwrap(), 2);
        assert_eq!(det_rank(&QMatrix::zeros(2, 3)).unwrap(), 0);
        assert_eq!(det_rank(&QMatrix::identity(3)).unwrap(), 3);
        assert_eq!(matrix_index(&example()).unwrap(), 1);
        assert_eq!(matrix_index(&QMatrix::identity(3)).unwrap(), 0);
        let nil = m(&[vec![[0; 4], [1, 0, 0, 0]], vec![[0; 4], [0; 4]]]);
        assert_eq!(matrix_index(&nil).unwrap(), 2);
        assert!(matches!(matrix_index(&QMatrix::zeros(2, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let big = QMatrix::identity(size_cap() + 1);
        assert!(matches!(rdet(&big, 1), Err(Error::SizeCapExceeded { .. })));
    }
}
