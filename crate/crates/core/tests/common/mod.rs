//! Shared fixtures and independent reference computations for integration tests.
//!
//! The complex references here rely only on commutativity: cofactor expansion for
//! determinants and the Faddeev-LeVerrier recurrence (Decell's formula) for the
//! Moore-Penrose inverse. Neither touches the library's elimination or
//! determinant code.

#![allow(dead_code)]

use quatinv::{QMatrix, Quaternion, Rational};

pub fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    Quaternion::from_ints(w, x, y, z)
}

pub fn half(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    let h = Rational::new(1.into(), 2.into());
    q(w, x, y, z).scale(&h)
}

/// `A = [[0, k, 0], [i, 0, -j], [0, j, 0]]`.
pub fn example() -> QMatrix {
    QMatrix::from_int_rows(&[
        vec![[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
        vec![[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]],
        vec![[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    ])
    .unwrap()
}

pub fn nilpotent2() -> QMatrix {
    QMatrix::from_int_rows(&[vec![[0, 0, 0, 0], [1, 0, 0, 0]], vec![[0, 0, 0, 0], [0, 0, 0, 0]]]).unwrap()
}

/// Classical determinant by cofactor expansion along the first row. Only
/// meaningful when all entries commute.
pub fn cofactor_det(m: &QMatrix) -> Quaternion {
    let n = m.rows();
    if n == 0 {
        return Quaternion::one();
    }
    if n == 1 {
        return m.at(1, 1).clone();
    }
    let mut acc = Quaternion::zero();
    for c in 1..=n {
        let entry = m.at(1, c);
        if entry.is_zero() {
            continue;
        }
        let minor = QMatrix::from_fn(n - 1, n - 1, |i, j| m.at(i + 1, if j < c { j } else { j + 1 }).clone());
        let term = entry * &cofactor_det(&minor);
        if c % 2 == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn trace(m: &QMatrix) -> Quaternion {
    (1..=m.rows()).map(|i| m.at(i, i).clone()).sum()
}

fn add_scalar(m: &QMatrix, c: &Quaternion) -> QMatrix {
    let mut out = m.clone();
    for i in 1..=m.rows() {
        out.set(i, i, m.at(i, i) + c);
    }
    out
}

fn scalar_times(c: &Quaternion, m: &QMatrix) -> QMatrix {
    m.map(|e| c * e)
}

/// Moore-Penrose inverse of a complex matrix via Decell's formula:
/// `A† = -(1/a_r) M_r A*` with `M_1 = I`, `M_k = B M_{k-1} + a_{k-1} I`,
/// `a_k = -tr(B M_k)/k`, `B = A*A`, and `r` the last nonzero coefficient.
pub fn complex_mp(a: &QMatrix) -> QMatrix {
    assert!(a.is_complex(), "reference only valid for complex input");
    let astar = a.adjoint();
    let b = &astar * a;
    let n = b.rows();
    let mut ms = vec![QMatrix::identity(n)];
    let mut coeffs = vec![-trace(&b)];
    for k in 2..=n {
        let prev = ms.last().unwrap();
        let mk = add_scalar(&(&b * prev), &coeffs[k - 2]);
        let inv_k = Rational::new(1.into(), (k as i64).into());
        let ak = (-trace(&(&b * &mk))).scale(&inv_k);
        ms.push(mk);
        coeffs.push(ak);
    }
    match coeffs.iter().rposition(|c| !c.is_zero()) {
        None => QMatrix::zeros(a.cols(), a.rows()),
        Some(r) => {
            let factor = -coeffs[r].inv().unwrap();
            scalar_times(&factor, &(&ms[r] * &astar))
        }
    }
}

/// Rank of a complex matrix as the number of nonzero characteristic
/// coefficients of `A*A`.
pub fn complex_rank(a: &QMatrix) -> usize {
    let p = complex_mp(a);
    // rank A = trace(A† A), which is a nonnegative integer for a projector.
    let t = trace(&(&p * a));
    assert!(t.is_real() && t.w.is_integer());
    t.w.to_integer().try_into().unwrap()
}

pub fn complex_index(a: &QMatrix) -> usize {
    let mut k = 0;
    let mut pk = QMatrix::identity(a.rows());
    loop {
        let next = &pk * a;
        if complex_rank(&pk) == complex_rank(&next) {
            return k;
        }
        pk = next;
        k += 1;
    }
}

/// `A^d = A^k (A^{2k+1})† A^k`.
pub fn complex_drazin(a: &QMatrix) -> QMatrix {
    let k = complex_index(a);
    let ak = a.pow(k).unwrap();
    let b = a.pow(2 * k + 1).unwrap();
    &(&ak * &complex_mp(&b)) * &ak
}

pub fn complex_core_right(a: &QMatrix) -> QMatrix {
    &(&complex_drazin(a) * a) * &complex_mp(a)
}

pub fn complex_core_left(a: &QMatrix) -> QMatrix {
    &(&complex_mp(a) * a) * &complex_drazin(a)
}

pub fn complex_dmp(a: &QMatrix) -> QMatrix {
    complex_core_right(a)
}

pub fn complex_mpd(a: &QMatrix) -> QMatrix {
    complex_core_left(a)
}

pub fn complex_cmp(a: &QMatrix) -> QMatrix {
    let p = complex_mp(a);
    &(&(&(&p * a) * &complex_drazin(a)) * a) * &p
}

/// Adds one to the real part of entry `(i, j)`.
pub fn bump(x: &QMatrix, i: usize, j: usize) -> QMatrix {
    let mut y = x.clone();
    y.set(i, j, x.at(i, j) + &Quaternion::one());
    y
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
