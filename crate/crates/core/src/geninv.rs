//! Moore-Penrose, Drazin and group inverses, and the two orthogonal projectors,
//! from their determinantal representations.
//!
//! Every entry is a ratio: a sum of row or column determinants of principal
//! submatrices with one row or column replaced, over a sum of principal minors
//! of a Hermitian matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncdet::{self, cdet_numerators, check_cap, minor_sum, rdet_numerators, verification_enabled};
use crate::qmatrix::QMatrix;
use crate::exactq::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSelector {
    /// Column determinants of `A*A`-type Gram matrices.
    Column,
    /// Row determinants of `AA*`-type Gram matrices.
    Row,
    /// Column determinants of powers of a Hermitian `A`.
    HermitianColumn,
    /// Row determinants of powers of a Hermitian `A`.
    HermitianRow,
    /// Hermitian column form on Hermitian input, otherwise the column form.
    #[default]
    Auto,
}

impl FormSelector {
    pub const ALL: [FormSelector; 4] = [
        FormSelector::Column,
        FormSelector::Row,
        FormSelector::HermitianColumn,
        FormSelector::HermitianRow,
    ];

    pub(crate) fn resolve(self, a: &QMatrix) -> Result<FormSelector> {
        match self {
            FormSelector::Auto if a.is_hermitian() => Ok(FormSelector::HermitianColumn),
            FormSelector::Auto => Ok(FormSelector::Column),
            FormSelector::HermitianColumn | FormSelector::HermitianRow if !a.is_hermitian() => {
                Err(Error::NotHermitian)
            }
            f => Ok(f),
        }
    }

    pub fn is_hermitian(self) -> bool {
        matches!(self, FormSelector::HermitianColumn | FormSelector::HermitianRow)
    }

    pub(crate) fn alternatives(a: &QMatrix) -> Vec<FormSelector> {
        if a.is_hermitian() {
            FormSelector::ALL.to_vec()
        } else {
            vec![FormSelector::Column, FormSelector::Row]
        }
    }
}

/// Divides by a denominator that the theory guarantees to be positive.
pub(crate) fn divide(num: QMatrix, den: &Rational) -> Result<QMatrix> {
    if den.is_zero() {
        return Err(Error::InternalInconsistency(
            "vanishing minor sum at the computed rank".into(),
        ));
    }
    num.div_real(den)
}

pub(crate) fn square(a: &QMatrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::shape(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

// Recomputes with every other applicable form and insists on agreement.
fn cross_check(
    a: &QMatrix,
    value: &QMatrix,
    used: FormSelector,
    what: &str,
    f: impl Fn(FormSelector) -> Result<QMatrix>,
) -> Result<()> {
    if !verification_enabled() {
        return Ok(());
    }
    for form in FormSelector::alternatives(a) {
        if form != used && &f(form)? != value {
            return Err(Error::InternalInconsistency(format!(
                "{what}: {used:?} and {form:?} forms disagree"
            )));
        }
    }
    Ok(())
}

/// Moore-Penrose inverse.
pub fn mp_inverse(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    let form = form.resolve(a)?;
    let value = mp_with(a, form)?;
    cross_check(a, &value, form, "Moore-Penrose inverse", |f| mp_with(a, f))?;
    Ok(value)
}

pub(crate) fn mp_with(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    check_cap(a.rows().max(a.cols()))?;
    let r = ncdet::det_rank(a)?;
    if r == 0 {
        return Ok(QMatrix::zeros(a.cols(), a.rows()));
    }
    let astar = a.adjoint();
    match form {
        FormSelector::Column | FormSelector::Auto => {
            let g = &astar * a;
            divide(cdet_numerators(&g, &astar, r)?, &minor_sum(&g, r)?)
        }
        FormSelector::Row => {
            let g = a * &astar;
            divide(rdet_numerators(&g, &astar, r)?, &minor_sum(&g, r)?)
        }
        FormSelector::HermitianColumn => {
            let a2 = a * a;
            divide(cdet_numerators(&a2, a, r)?, &minor_sum(&a2, r)?)
        }
        FormSelector::HermitianRow => {
            let a2 = a * a;
            divide(rdet_numerators(&a2, a, r)?, &minor_sum(&a2, r)?)
        }
    }
}

/// `Q_A = A†A`, from column determinants of `A*A`.
pub fn projector_q(a: &QMatrix) -> Result<QMatrix> {
    check_cap(a.rows().max(a.cols()))?;
    let r = ncdet::det_rank(a)?;
    if r == 0 {
        return Ok(QMatrix::zeros(a.cols(), a.cols()));
    }
    let g = &a.adjoint() * a;
    divide(cdet_numerators(&g, &g, r)?, &minor_sum(&g, r)?)
}

/// `P_A = AA†`, from row determinants of `AA*`.
pub fn projector_p(a: &QMatrix) -> Result<QMatrix> {
    check_cap(a.rows().max(a.cols()))?;
    let r = ncdet::det_rank(a)?;
    if r == 0 {
        return Ok(QMatrix::zeros(a.rows(), a.rows()));
    }
    let g = a * &a.adjoint();
    divide(rdet_numerators(&g, &g, r)?, &minor_sum(&g, r)?)
}

/// Drazin inverse; `k = Ind A` and the minor order is `rank A^k`.
pub fn drazin(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    square(a)?;
    let form = form.resolve(a)?;
    let k = ncdet::matrix_index(a)?;
    let value = drazin_with(a, k, form)?;
    cross_check(a, &value, form, "Drazin inverse", |f| drazin_with(a, k, f))?;
    Ok(value)
}

/// Group inverse: the Drazin formulas at `k = 1`.
pub fn group_inverse(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    square(a)?;
    let form = form.resolve(a)?;
    let index = ncdet::matrix_index(a)?;
    if index > 1 {
        return Err(Error::IndexTooLarge { index, max: 1 });
    }
    let value = drazin_with(a, 1, form)?;
    cross_check(a, &value, form, "group inverse", |f| drazin_with(a, 1, f))?;
    Ok(value)
}

/// Drazin formulas evaluated with power `k`, valid for any `k >= Ind A`.
pub(crate) fn drazin_with(a: &QMatrix, k: usize, form: FormSelector) -> Result<QMatrix> {
    let n = square(a)?;
    check_cap(n)?;
    let ak = a.pow(k)?;
    let r = ncdet::det_rank(&ak)?;
    if r == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    match form {
        FormSelector::Column | FormSelector::Auto => {
            let b = a.pow(2 * k + 1)?;
            let bs = b.adjoint();
            let g = &bs * &b;
            let num = cdet_numerators(&g, &(&bs * &ak), r)?;
            divide(&ak * &num, &minor_sum(&g, r)?)
        }
        FormSelector::Row => {
            let b = a.pow(2 * k + 1)?;
            let bs = b.adjoint();
            let g = &b * &bs;
            let num = rdet_numerators(&g, &(&ak * &bs), r)?;
            divide(&num * &ak, &minor_sum(&g, r)?)
        }
        FormSelector::HermitianColumn => {
            let ak1 = &ak * a;
            divide(cdet_numerators(&ak1, &ak, r)?, &minor_sum(&ak1, r)?)
        }
        FormSelector::HermitianRow => {
            let ak1 = &ak * a;
            divide(rdet_numerators(&ak1, &ak, r)?, &minor_sum(&ak1, r)?)
        }
    }
}
