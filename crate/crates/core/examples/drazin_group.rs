// Drazin and group inverses, including a matrix of index two.

use quatinv::geninv::{self, FormSelector};
use quatinv::oracle::{self, System};
use quatinv::{ncdet, Error, QMatrix, Result};

pub fn run_example() -> Result<QMatrix> {
    let a = QMatrix::from_int_rows(&[
        vec![[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
        vec![[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        vec![[0, 0, 0, 0], [0, 1, 0, 0], [1, 0, 0, 1]],
    ])?;
    let k = ncdet::matrix_index(&a)?;
    println!("Ind A = {k}");

    let ad = geninv::drazin(&a, FormSelector::Column)?;
    assert_eq!(ad, geninv::drazin(&a, FormSelector::Row)?);
    assert!(oracle::verify(System::Drazin, &a, &ad)?.passed());
    println!("A^d =\n{ad}");

    match geninv::group_inverse(&a, FormSelector::Auto) {
        Err(Error::IndexTooLarge { index, .. }) => println!("no group inverse: index {index}"),
        other => println!("group inverse: {other:?}"),
    }
    Ok(ad)
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}
