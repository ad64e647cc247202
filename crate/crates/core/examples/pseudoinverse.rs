// Moore-Penrose inverse by column and row determinants, plus the two projectors.

use quatinv::geninv::{self, FormSelector};
use quatinv::oracle::{self, System};
use quatinv::{QMatrix, Result};

pub fn run_example() -> Result<QMatrix> {
    // A 2x3 matrix of rank 1: the second row is the first times j on the left.
    let a = QMatrix::from_int_rows(&[
        vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        vec![[0, 0, 1, 0], [0, 0, 0, -1], [0, 1, 0, 0]],
    ])?;
    let by_columns = geninv::mp_inverse(&a, FormSelector::Column)?;
    let by_rows = geninv::mp_inverse(&a, FormSelector::Row)?;
    assert_eq!(by_columns, by_rows);

    let report = oracle::verify(System::Penrose, &a, &by_columns)?;
    assert!(report.passed());

    println!("A =\n{a}\nA† =\n{by_columns}");
    println!("Q_A = A†A =\n{}", geninv::projector_q(&a)?);
    println!("P_A = AA† =\n{}", geninv::projector_p(&a)?);
    Ok(by_columns)
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}
