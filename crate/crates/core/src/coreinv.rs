//! Core, core-EP, DMP, MPD and CMP inverses.
//!
//! Each inverse has a determinantal representation and a composition in terms of
//! the Moore-Penrose and Drazin inverses. The compositions can use either the
//! determinantal [`geninv`](crate::geninv) routines or the elimination oracles,
//! which gives independent routes for cross-checking.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geninv::{self, divide, square, FormSelector};
use crate::ncdet::{self, cdet_numerators, check_cap, minor_sum, rdet_numerators, verification_enabled};
use crate::oracle;
use crate::qmatrix::QMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Right,
    Left,
}

/// How a core inverse is computed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreMethod {
    /// Determinantal formula built on `A³` and the Gram matrices of `A`.
    #[default]
    Determinantal,
    /// The core-EP formula at `k = 1`, built on `A²`.
    ViaCoreEp,
    /// `A^# A A†` (right) or `A† A A^#` (left).
    Composition,
}

impl CoreMethod {
    pub const ALL: [CoreMethod; 3] = [CoreMethod::Determinantal, CoreMethod::ViaCoreEp, CoreMethod::Composition];
}

/// Which ingredients the composition formulas use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionRoute {
    #[default]
    Determinantal,
    Oracle,
}

/// Powers of `A` inside the DMP, MPD and CMP auxiliary matrices.
///
/// `Derived` uses the powers that follow from substituting the Drazin
/// representation into the composition formula. `Literal` uses the lower powers
/// displayed with the theorems; the two coincide when `Ind A <= 1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    Literal,
    #[default]
    Derived,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetForm {
    #[default]
    Cdet,
    Rdet,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Specialization {
    #[default]
    General,
    Hermitian,
}

/// Selects one of the CMP representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmpVariant {
    /// 1 builds on the row-determinant matrix `U`, 2 on the column-determinant matrix `G`.
    pub l: u8,
    pub form: DetForm,
    pub specialization: Specialization,
}

impl Default for CmpVariant {
    fn default() -> Self {
        CmpVariant {
            l: 1,
            form: DetForm::Cdet,
            specialization: Specialization::General,
        }
    }
}

impl CmpVariant {
    pub fn new(l: u8, form: DetForm, specialization: Specialization) -> Self {
        CmpVariant { l, form, specialization }
    }

    /// All variants applicable to `a`.
    pub fn all_for(a: &QMatrix) -> Vec<CmpVariant> {
        let mut specs = vec![Specialization::General];
        if a.is_hermitian() {
            specs.push(Specialization::Hermitian);
        }
        let mut out = Vec::new();
        for s in specs {
            for l in [1, 2] {
                for form in [DetForm::Cdet, DetForm::Rdet] {
                    out.push(CmpVariant::new(l, form, s));
                }
            }
        }
        out
    }
}

fn require_core_invertible(a: &QMatrix) -> Result<()> {
    square(a)?;
    check_cap(a.rows())?;
    let index = ncdet::matrix_index(a)?;
    if index > 1 {
        return Err(Error::IndexTooLarge { index, max: 1 });
    }
    Ok(())
}

fn agree(what: &str, reference: &QMatrix, label: &str, other: &QMatrix) -> Result<()> {
    if reference == other {
        Ok(())
    } else {
        Err(Error::MethodDisagreement(format!("{what}: {label} gives a different matrix")))
    }
}

fn mp(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    match route {
        CompositionRoute::Determinantal => geninv::mp_inverse(a, FormSelector::Auto),
        CompositionRoute::Oracle => Ok(oracle::mp_oracle(a)),
    }
}

fn drazin(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    match route {
        CompositionRoute::Determinantal => geninv::drazin(a, FormSelector::Auto),
        CompositionRoute::Oracle => oracle::drazin_oracle(a),
    }
}

fn group(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    match route {
        CompositionRoute::Determinantal => geninv::group_inverse(a, FormSelector::Auto),
        CompositionRoute::Oracle => oracle::group_oracle(a),
    }
}

/// Right core inverse; exists iff `Ind A <= 1`.
pub fn right_core(a: &QMatrix, method: CoreMethod) -> Result<QMatrix> {
    core(a, Side::Right, method)
}

/// Left core inverse; exists iff `Ind A <= 1`.
pub fn left_core(a: &QMatrix, method: CoreMethod) -> Result<QMatrix> {
    core(a, Side::Left, method)
}

pub fn core(a: &QMatrix, side: Side, method: CoreMethod) -> Result<QMatrix> {
    require_core_invertible(a)?;
    let value = core_unchecked(a, side, method)?;
    if verification_enabled() {
        for other in CoreMethod::ALL {
            if other != method {
                agree("core inverse", &value, &format!("{other:?}"), &core_unchecked(a, side, other)?)?;
            }
        }
        agree("core inverse", &value, "oracle composition", &core_composition(a, side, CompositionRoute::Oracle)?)?;
    }
    Ok(value)
}

fn core_unchecked(a: &QMatrix, side: Side, method: CoreMethod) -> Result<QMatrix> {
    match method {
        CoreMethod::Determinantal => core_determinantal(a, side),
        CoreMethod::ViaCoreEp => core_ep_determinantal(a, side, 1),
        CoreMethod::Composition => core_composition(a, side, CompositionRoute::Determinantal),
    }
}

fn core_determinantal(a: &QMatrix, side: Side) -> Result<QMatrix> {
    let n = a.rows();
    let s = ncdet::det_rank(a)?;
    if s == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    let a2 = a * a;
    let a3 = &a2 * a;
    let a3s = a3.adjoint();
    let astar = a.adjoint();
    match side {
        Side::Right => {
            let g3 = &a3 * &a3s;
            let u = rdet_numerators(&g3, &(a * &a3s), s)?;
            let ut = &(&u * &a2) * &astar;
            let g1 = a * &astar;
            divide(rdet_numerators(&g1, &ut, s)?, &(minor_sum(&g3, s)? * minor_sum(&g1, s)?))
        }
        Side::Left => {
            let g3 = &a3s * &a3;
            let v = cdet_numerators(&g3, &(&a3s * a), s)?;
            let vt = &(&astar * &a2) * &v;
            let g1 = &astar * a;
            divide(cdet_numerators(&g1, &vt, s)?, &(minor_sum(&g1, s)? * minor_sum(&g3, s)?))
        }
    }
}

/// `A^# A A†` or `A† A A^#`.
pub fn core_composition(a: &QMatrix, side: Side, route: CompositionRoute) -> Result<QMatrix> {
    let g = group(a, route)?;
    let p = mp(a, route)?;
    Ok(match side {
        Side::Right => &(&g * a) * &p,
        Side::Left => &(&p * a) * &g,
    })
}

/// Right or left core-EP inverse with `k = Ind A`.
pub fn core_ep(a: &QMatrix, side: Side) -> Result<QMatrix> {
    square(a)?;
    check_cap(a.rows())?;
    let k = ncdet::matrix_index(a)?;
    let value = core_ep_determinantal(a, side, k)?;
    if verification_enabled() {
        for route in [CompositionRoute::Determinantal, CompositionRoute::Oracle] {
            agree("core-EP inverse", &value, &format!("{route:?} composition"), &core_ep_composition(a, side, route)?)?;
        }
    }
    Ok(value)
}

fn core_ep_determinantal(a: &QMatrix, side: Side, k: usize) -> Result<QMatrix> {
    let n = a.rows();
    let ak = a.pow(k)?;
    let s = ncdet::det_rank(&ak)?;
    if s == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    let c = &ak * a;
    let cs = c.adjoint();
    match side {
        Side::Right => {
            let g = &c * &cs;
            divide(rdet_numerators(&g, &(&ak * &cs), s)?, &minor_sum(&g, s)?)
        }
        Side::Left => {
            let g = &cs * &c;
            divide(cdet_numerators(&g, &(&cs * &ak), s)?, &minor_sum(&g, s)?)
        }
    }
}

/// `A^k (A^{k+1})†` or `(A^{k+1})† A^k`.
pub fn core_ep_composition(a: &QMatrix, side: Side, route: CompositionRoute) -> Result<QMatrix> {
    let k = match route {
        CompositionRoute::Determinantal => ncdet::matrix_index(a)?,
        CompositionRoute::Oracle => oracle::oracle_index(a)?,
    };
    let ak = a.pow(k)?;
    let p = mp(&(&ak * a), route)?;
    Ok(match side {
        Side::Right => &ak * &p,
        Side::Left => &p * &ak,
    })
}

// Shared setup for DMP, MPD and CMP: index, ranks and powers.
struct Powers {
    n: usize,
    k: usize,
    s: usize,
    s1: usize,
    ak: QMatrix,
}

fn powers(a: &QMatrix) -> Result<Powers> {
    let n = square(a)?;
    check_cap(n)?;
    let k = ncdet::matrix_index(a)?;
    let s = ncdet::det_rank(a)?;
    let (ak, s1) = ncdet::power_rank(a, k)?;
    Ok(Powers { n, k, s, s1, ak })
}

fn hermitian_or_general(a: &QMatrix, form: FormSelector) -> Result<bool> {
    Ok(form.resolve(a)?.is_hermitian())
}

/// DMP inverse `A^d A A†`.
pub fn dmp(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    dmp_with_reading(a, form, Reading::Derived)
}

pub fn dmp_with_reading(a: &QMatrix, form: FormSelector, reading: Reading) -> Result<QMatrix> {
    let value = dmp_unchecked(a, form, reading)?;
    if verification_enabled() {
        for f in FormSelector::alternatives(a) {
            agree("DMP inverse", &value, &format!("{f:?} form"), &dmp_unchecked(a, f, reading)?)?;
        }
        for route in [CompositionRoute::Determinantal, CompositionRoute::Oracle] {
            agree("DMP inverse", &value, &format!("{route:?} composition"), &dmp_composition(a, route)?)?;
        }
    }
    Ok(value)
}

fn dmp_unchecked(a: &QMatrix, form: FormSelector, reading: Reading) -> Result<QMatrix> {
    let Powers { n, k, s, s1, ak } = powers(a)?;
    if s1 == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    let form = form.resolve(a)?;
    if form.is_hermitian() {
        let a2 = a * a;
        let ak1 = &ak * a;
        let ak2 = &ak1 * a;
        let den = minor_sum(&ak1, s1)? * minor_sum(&a2, s)?;
        return match form {
            FormSelector::HermitianRow => {
                let v = cdet_numerators(&ak1, &ak2, s1)?;
                divide(rdet_numerators(&a2, &v, s)?, &den)
            }
            _ => {
                let u = rdet_numerators(&a2, &ak2, s)?;
                divide(cdet_numerators(&ak1, &u, s1)?, &den)
            }
        };
    }
    let b = a.pow(2 * k + 1)?;
    let bs = b.adjoint();
    let astar = a.adjoint();
    let (left, tail) = match reading {
        Reading::Derived => (ak.clone(), &ak * a),
        Reading::Literal => (a.clone(), a * a),
    };
    let gb = &b * &bs;
    let u = rdet_numerators(&gb, &(&left * &bs), s1)?;
    let ut = &(&u * &tail) * &astar;
    let ga = a * &astar;
    divide(rdet_numerators(&ga, &ut, s)?, &(minor_sum(&gb, s1)? * minor_sum(&ga, s)?))
}

pub fn dmp_composition(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    Ok(&(&drazin(a, route)? * a) * &mp(a, route)?)
}

/// MPD inverse `A† A A^d`.
pub fn mpd(a: &QMatrix, form: FormSelector) -> Result<QMatrix> {
    mpd_with_reading(a, form, Reading::Derived)
}

pub fn mpd_with_reading(a: &QMatrix, form: FormSelector, reading: Reading) -> Result<QMatrix> {
    let value = mpd_unchecked(a, form, reading)?;
    if verification_enabled() {
        for f in FormSelector::alternatives(a) {
            agree("MPD inverse", &value, &format!("{f:?} form"), &mpd_unchecked(a, f, reading)?)?;
        }
        for route in [CompositionRoute::Determinantal, CompositionRoute::Oracle] {
            agree("MPD inverse", &value, &format!("{route:?} composition"), &mpd_composition(a, route)?)?;
        }
    }
    Ok(value)
}

fn mpd_unchecked(a: &QMatrix, form: FormSelector, reading: Reading) -> Result<QMatrix> {
    let Powers { n, k, s, s1, ak } = powers(a)?;
    if s1 == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    if hermitian_or_general(a, form)? {
        let a2 = a * a;
        let ak1 = &ak * a;
        let ak2 = &ak1 * a;
        let den = minor_sum(&a2, s)? * minor_sum(&ak1, s1)?;
        return match form.resolve(a)? {
            FormSelector::HermitianRow => {
                let u = cdet_numerators(&a2, &ak2, s)?;
                divide(rdet_numerators(&ak1, &u, s1)?, &den)
            }
            _ => {
                let v = rdet_numerators(&ak1, &ak2, s1)?;
                divide(cdet_numerators(&a2, &v, s)?, &den)
            }
        };
    }
    let b = a.pow(2 * k + 1)?;
    let bs = b.adjoint();
    let astar = a.adjoint();
    let (right, head) = match reading {
        Reading::Derived => (ak.clone(), &ak * a),
        Reading::Literal => (a.clone(), a * a),
    };
    let gb = &bs * &b;
    let v = cdet_numerators(&gb, &(&bs * &right), s1)?;
    let vt = &(&astar * &head) * &v;
    let ga = &astar * a;
    divide(cdet_numerators(&ga, &vt, s)?, &(minor_sum(&ga, s)? * minor_sum(&gb, s1)?))
}

pub fn mpd_composition(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    Ok(&(&mp(a, route)? * a) * &drazin(a, route)?)
}

/// CMP inverse `Q_A A^d P_A = A† A₁ A†`.
pub fn cmp(a: &QMatrix, variant: CmpVariant) -> Result<QMatrix> {
    cmp_with_reading(a, variant, Reading::Derived)
}

pub fn cmp_with_reading(a: &QMatrix, variant: CmpVariant, reading: Reading) -> Result<QMatrix> {
    let value = cmp_unchecked(a, variant, reading)?;
    if verification_enabled() {
        for v in CmpVariant::all_for(a) {
            agree("CMP inverse", &value, &format!("{v:?}"), &cmp_unchecked(a, v, reading)?)?;
        }
        for route in [CompositionRoute::Determinantal, CompositionRoute::Oracle] {
            agree("CMP inverse", &value, &format!("{route:?} composition"), &cmp_composition(a, route)?)?;
        }
    }
    Ok(value)
}

fn cmp_unchecked(a: &QMatrix, variant: CmpVariant, reading: Reading) -> Result<QMatrix> {
    if !matches!(variant.l, 1 | 2) {
        return Err(Error::shape(format!("CMP variant l must be 1 or 2, got {}", variant.l)));
    }
    let Powers { n, k: m, s, s1, ak } = powers(a)?;
    if s1 == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    let am1 = &ak * a;
    if variant.specialization == Specialization::Hermitian {
        if !a.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let a2 = a * a;
        let am2 = &am1 * a;
        let h = if variant.l == 1 {
            &rdet_numerators(&am1, &am2, s1)? * &a2
        } else {
            &a2 * &cdet_numerators(&am1, &am2, s1)?
        };
        let ms = minor_sum(&a2, s)?;
        let den = &ms * &ms * minor_sum(&am1, s1)?;
        return match variant.form {
            DetForm::Cdet => divide(cdet_numerators(&a2, &rdet_numerators(&a2, &h, s)?, s)?, &den),
            DetForm::Rdet => divide(rdet_numerators(&a2, &cdet_numerators(&a2, &h, s)?, s)?, &den),
        };
    }
    let b = a.pow(2 * m + 1)?;
    let bs = b.adjoint();
    let astar = a.adjoint();
    let mid = match reading {
        Reading::Derived => am1.clone(),
        Reading::Literal => a * a,
    };
    let (h, gb) = if variant.l == 1 {
        let gb = &b * &bs;
        let u = rdet_numerators(&gb, &(&(&astar * &am1) * &bs), s1)?;
        (&(&u * &am1) * &astar, gb)
    } else {
        let gb = &bs * &b;
        let g = cdet_numerators(&gb, &(&(&bs * &mid) * &astar), s1)?;
        (&(&astar * &mid) * &g, gb)
    };
    let ga = &astar * a;
    let gr = a * &astar;
    let ms = minor_sum(&ga, s)?;
    let den = &ms * &ms * minor_sum(&gb, s1)?;
    match variant.form {
        DetForm::Cdet => divide(cdet_numerators(&ga, &rdet_numerators(&gr, &h, s)?, s)?, &den),
        DetForm::Rdet => divide(rdet_numerators(&gr, &cdet_numerators(&ga, &h, s)?, s)?, &den),
    }
}

pub fn cmp_composition(a: &QMatrix, route: CompositionRoute) -> Result<QMatrix> {
    let p = mp(a, route)?;
    let q = &p * a;
    let pa = a * &p;
    Ok(&(&q * &drazin(a, route)?) * &pa)
}

/// `A = A₁ + A₂` with `A₁ = A A^d A` the core part and `A₂` nilpotent.
pub fn core_nilpotent_split(a: &QMatrix) -> Result<(QMatrix, QMatrix)> {
    let d = geninv::drazin(a, FormSelector::Auto)?;
    let a1 = &(a * &d) * a;
    let a2 = a - &a1;
    if verification_enabled() {
        let zero = QMatrix::zeros(a.rows(), a.rows());
        let nil = a2.pow(a.rows())?;
        if &a1 * &a2 != zero || &a2 * &a1 != zero || nil != zero || ncdet::matrix_index(&a1)? > 1 {
            return Err(Error::InternalInconsistency("core-nilpotent split failed its checks".into()));
        }
    }
    Ok((a1, a2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::Quaternion;

    fn m(rows: &[Vec<[i64; 4]>]) -> QMatrix {
        QMatrix::from_int_rows(rows).unwrap()
    }

    fn h(s: &str) -> Quaternion {
        let parts: Vec<&str> = s.split_whitespace().collect();
        Quaternion::from_strs(&parts).unwrap()
    }

    fn example() -> QMatrix {
        m(&[
            vec![[0; 4], [0, 0, 0, 1], [0; 4]],
            vec![[0, 1, 0, 0], [0; 4], [0, 0, -1, 0]],
            vec![[0; 4], [0, 0, 1, 0], [0; 4]],
        ])
    }

    fn nilpotent() -> QMatrix {
        m(&[vec![[0; 4], [1, 0, 0, 0]], vec![[0; 4], [0; 4]]])
    }

    // Index 2 with a nonzero core part and quaternion entries.
    fn index_two() -> QMatrix {
        m(&[
            vec![[0; 4], [0, 1, 0, 0], [1, 0, 0, 0]],
            vec![[0; 4], [0; 4], [0, 0, 1, 0]],
            vec![[0; 4], [0; 4], [1, 0, 0, 1]],
        ])
    }

    #[test]
    fn core_inverses_of_example() {
        let z = Quaternion::zero;
        let right = QMatrix::from_rows(vec![
            vec![z(), h("0 -1/2 0 1/2"), z()],
            vec![h("0 0 0 -1/2"), z(), h("0 0 -1/2 0")],
            vec![z(), h("-1/2 0 1/2 0"), z()],
        ])
        .unwrap();
        let left = QMatrix::from_rows(vec![
            vec![z(), h("0 -1/2 0 0"), z()],
            vec![h("0 1/2 0 -1/2"), z(), h("1/2 0 -1/2 0")],
            vec![z(), h("0 0 1/2 0"), z()],
        ])
        .unwrap();
        for method in CoreMethod::ALL {
            assert_eq!(right_core(&example(), method).unwrap(), right, "{method:?}");
            assert_eq!(left_core(&example(), method).unwrap(), left, "{method:?}");
        }
        assert_eq!(core_ep(&example(), Side::Right).unwrap(), right);
        assert_eq!(core_ep(&example(), Side::Left).unwrap(), left);
    }

    #[test]
    fn nilpotent_cases() {
        let nil = nilpotent();
        for method in CoreMethod::ALL {
            assert!(matches!(right_core(&nil, method), Err(Error::IndexTooLarge { index: 2, max: 1 })));
            assert!(matches!(left_core(&nil, method), Err(Error::IndexTooLarge { .. })));
        }
        assert!(core_ep(&nil, Side::Right).unwrap().is_zero());
        assert!(dmp(&nil, FormSelector::Auto).unwrap().is_zero());
        assert!(mpd(&nil, FormSelector::Row).unwrap().is_zero());
        assert!(cmp(&nil, CmpVariant::default()).unwrap().is_zero());
        let (a1, a2) = core_nilpotent_split(&nil).unwrap();
        assert!(a1.is_zero());
        assert_eq!(a2, nil);
    }

    #[test]
    fn identity_cases() {
        let id = QMatrix::identity(3);
        for method in CoreMethod::ALL {
            assert_eq!(right_core(&id, method).unwrap(), id);
            assert_eq!(left_core(&id, method).unwrap(), id);
        }
        for side in [Side::Right, Side::Left] {
            assert_eq!(core_ep(&id, side).unwrap(), id);
        }
        for form in FormSelector::ALL {
            assert_eq!(dmp(&id, form).unwrap(), id);
            assert_eq!(mpd(&id, form).unwrap(), id);
        }
        for v in CmpVariant::all_for(&id) {
            assert_eq!(cmp(&id, v).unwrap(), id);
        }
        assert_eq!(core_nilpotent_split(&id).unwrap(), (id, QMatrix::zeros(3, 3)));
    }

    #[test]
    fn example_compositions() {
        let a = example();
        for route in [CompositionRoute::Determinantal, CompositionRoute::Oracle] {
            assert_eq!(dmp(&a, FormSelector::Column).unwrap(), dmp_composition(&a, route).unwrap());
            assert_eq!(mpd(&a, FormSelector::Column).unwrap(), mpd_composition(&a, route).unwrap());
            for v in CmpVariant::all_for(&a) {
                assert_eq!(cmp(&a, v).unwrap(), cmp_composition(&a, route).unwrap(), "{v:?}");
            }
        }
        assert_eq!(core_nilpotent_split(&a).unwrap(), (a.clone(), QMatrix::zeros(3, 3)));
    }

    #[test]
    fn index_two_compositions() {
        let a = index_two();
        assert_eq!(ncdet::matrix_index(&a).unwrap(), 2);
        let route = CompositionRoute::Oracle;
        for side in [Side::Right, Side::Left] {
            assert_eq!(core_ep(&a, side).unwrap(), core_ep_composition(&a, side, route).unwrap());
        }
        assert_eq!(dmp(&a, FormSelector::Auto).unwrap(), dmp_composition(&a, route).unwrap());
        assert_eq!(mpd(&a, FormSelector::Auto).unwrap(), mpd_composition(&a, route).unwrap());
        for v in CmpVariant::all_for(&a) {
            assert_eq!(cmp(&a, v).unwrap(), cmp_composition(&a, route).unwrap(), "{v:?}");
        }
        let (a1, a2) = core_nilpotent_split(&a).unwrap();
        assert!(!a1.is_zero());
        assert!((&a1 * &a2).is_zero() && (&a2 * &a1).is_zero());
        assert!(a2.pow(2).unwrap().is_zero());
    }

    #[test]
    fn hermitian_specializations() {
        let a = m(&[
            vec![[1, 0, 0, 0], [0, 1, 1, 0], [0; 4]],
            vec![[0, -1, -1, 0], [2, 0, 0, 0], [0, 0, 0, 1]],
            vec![[0; 4], [0, 0, 0, -1], [0; 4]],
        ]);
        assert!(a.is_hermitian());
        let route = CompositionRoute::Oracle;
        for form in FormSelector::ALL {
            assert_eq!(dmp(&a, form).unwrap(), dmp_composition(&a, route).unwrap(), "{form:?}");
            assert_eq!(mpd(&a, form).unwrap(), mpd_composition(&a, route).unwrap(), "{form:?}");
        }
        for v in CmpVariant::all_for(&a) {
            assert_eq!(cmp(&a, v).unwrap(), cmp_composition(&a, route).unwrap(), "{v:?}");
        }
    }
}
