// DMP, MPD and CMP inverses, checked against their compositions.

use quatinv::coreinv::{self, CmpVariant, CompositionRoute};
use quatinv::geninv::FormSelector;
use quatinv::oracle::{self, System};
use quatinv::{QMatrix, Result};

pub fn run_example() -> Result<QMatrix> {
    let a = QMatrix::from_int_rows(&[
        vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
        vec![[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
        vec![[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    ])?;
    let (core_part, nilpotent) = coreinv::core_nilpotent_split(&a)?;
    println!("core part =\n{core_part}\nnilpotent part =\n{nilpotent}");

    let dmp = coreinv::dmp(&a, FormSelector::Auto)?;
    let mpd = coreinv::mpd(&a, FormSelector::Auto)?;
    assert_eq!(dmp, coreinv::dmp_composition(&a, CompositionRoute::Oracle)?);
    assert_eq!(mpd, coreinv::mpd_composition(&a, CompositionRoute::Oracle)?);
    assert!(oracle::verify(System::Dmp, &a, &dmp)?.passed());
    assert!(oracle::verify(System::Mpd, &a, &mpd)?.passed());
    println!("DMP =\n{dmp}\nMPD =\n{mpd}");

    let cmp = coreinv::cmp(&a, CmpVariant::default())?;
    for v in CmpVariant::all_for(&a) {
        assert_eq!(coreinv::cmp(&a, v)?, cmp);
    }
    assert!(oracle::verify(System::Cmp, &a, &cmp)?.passed());
    println!("CMP =\n{cmp}");
    Ok(cmp)
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}
