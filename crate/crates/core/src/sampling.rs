//! Seeded random matrices with small integer quaternion entries.
//!
//! Components are drawn from `-2..=2`. The shapes cover dense, sparse,
//! rank-deficient, nilpotent-heavy, Hermitian and complex matrices so that
//! suites hit every index and rank regime.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactq::Quaternion;
use crate::qmatrix::QMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Dense,
    Sparse,
    /// A row is a left multiple of another by a unit.
    RowDependent,
    /// A column is a right multiple of another by a unit.
    ColumnDependent,
    /// Strictly upper triangular plus a small invertible corner, giving high index.
    Nilpotent,
    Hermitian,
    Complex,
}

impl Shape {
    pub const ALL: [Shape; 7] = [
        Shape::Dense,
        Shape::Sparse,
        Shape::RowDependent,
        Shape::ColumnDependent,
        Shape::Nilpotent,
        Shape::Hermitian,
        Shape::Complex,
    ];
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn component(&mut self) -> i64 {
        self.rng.gen_range(-2..=2)
    }

    pub fn quaternion(&mut self) -> Quaternion {
        let c: [i64; 4] = std::array::from_fn(|_| self.component());
        Quaternion::from_ints(c[0], c[1], c[2], c[3])
    }

    fn complex_entry(&mut self) -> Quaternion {
        Quaternion::from_ints(self.component(), self.component(), 0, 0)
    }

    fn unit(&mut self) -> Quaternion {
        let units = [
            Quaternion::one(),
            -Quaternion::one(),
            Quaternion::i(),
            -Quaternion::i(),
            Quaternion::j(),
            -Quaternion::j(),
            Quaternion::k(),
            -Quaternion::k(),
        ];
        units.choose(&mut self.rng).expect("non-empty").clone()
    }

    pub fn dense(&mut self, m: usize, n: usize) -> QMatrix {
        QMatrix::from_fn(m, n, |_, _| self.quaternion())
    }

    pub fn sparse(&mut self, m: usize, n: usize) -> QMatrix {
        QMatrix::from_fn(m, n, |_, _| {
            if self.rng.gen_bool(0.4) {
                self.quaternion()
            } else {
                Quaternion::zero()
            }
        })
    }

    pub fn complex(&mut self, m: usize, n: usize) -> QMatrix {
        QMatrix::from_fn(m, n, |_, _| self.complex_entry())
    }

    pub fn hermitian(&mut self, n: usize) -> QMatrix {
        let mut a = QMatrix::zeros(n, n);
        for i in 1..=n {
            a.set(i, i, Quaternion::from_int(self.component()));
            for j in i + 1..=n {
                let q = self.quaternion();
                a.set(j, i, q.conj());
                a.set(i, j, q);
            }
        }
        a
    }

    pub fn row_dependent(&mut self, n: usize) -> QMatrix {
        let mut a = self.dense(n, n);
        if n >= 2 {
            let src = self.rng.gen_range(1..=n);
            let dst = (src % n) + 1;
            let u = self.unit();
            let row: Vec<Quaternion> = a.row(src).iter().map(|q| &u * q).collect();
            for (c, q) in row.into_iter().enumerate() {
                a.set(dst, c + 1, q);
            }
        }
        a
    }

    pub fn column_dependent(&mut self, n: usize) -> QMatrix {
        let mut a = self.dense(n, n);
        if n >= 2 {
            let src = self.rng.gen_range(1..=n);
            let dst = (src % n) + 1;
            let u = self.unit();
            let col: Vec<Quaternion> = a.col(src).iter().map(|q| q * &u).collect();
            for (r, q) in col.into_iter().enumerate() {
                a.set(r + 1, dst, q);
            }
        }
        a
    }

    /// Block upper triangular: a strictly triangular block of random size and an
    /// optional invertible-ish diagonal corner.
    pub fn nilpotent_heavy(&mut self, n: usize) -> QMatrix {
        let nil = self.rng.gen_range(1..=n);
        QMatrix::from_fn(n, n, |i, j| {
            if i <= nil && j <= nil {
                if j > i {
                    self.quaternion()
                } else {
                    Quaternion::zero()
                }
            } else if (i > nil && j > nil) || (i <= nil && j > nil && self.rng.gen_bool(0.5)) {
                self.quaternion()
            } else {
                Quaternion::zero()
            }
        })
    }

    pub fn square(&mut self, shape: Shape, n: usize) -> QMatrix {
        match shape {
            Shape::Dense => self.dense(n, n),
            Shape::Sparse => self.sparse(n, n),
            Shape::RowDependent => self.row_dependent(n),
            Shape::ColumnDependent => self.column_dependent(n),
            Shape::Nilpotent => self.nilpotent_heavy(n),
            Shape::Hermitian => self.hermitian(n),
            Shape::Complex => self.complex(n, n),
        }
    }
}

/// `count` square matrices with orders from `sizes`, cycling through all shapes.
pub fn square_suite(seed: u64, count: usize, sizes: &[usize]) -> Vec<QMatrix> {
    let mut s = Sampler::new(seed);
    (0..count)
        .map(|t| {
            let shape = Shape::ALL[t % Shape::ALL.len()];
            let n = sizes[(t / Shape::ALL.len()) % sizes.len()];
            s.square(shape, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_shaped() {
        assert_eq!(square_suite(7, 20, &[2, 3]), square_suite(7, 20, &[2, 3]));
        let mut s = Sampler::new(1);
        assert!(s.hermitian(4).is_hermitian());
        assert!(s.complex(3, 3).is_complex());
        let nil = s.nilpotent_heavy(4);
        assert!(nil.at(1, 1).is_zero());
    }
}
