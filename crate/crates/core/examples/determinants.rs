// Row, column and Hermitian determinants of a quaternion matrix.

use quatinv::ncdet::{self, CyclePermutation};
use quatinv::{QMatrix, Result};

pub fn run_example() -> Result<()> {
    let a = QMatrix::from_int_rows(&[
        vec![[1, 0, 0, 0], [0, 1, 0, 0]],
        vec![[0, 0, 1, 0], [0, 0, 0, 1]],
    ])?;
    for i in 1..=2 {
        println!("rdet_{i} = {}", ncdet::rdet(&a, i)?);
        println!("cdet_{i} = {}", ncdet::cdet(&a, i)?);
    }

    // Cycle forms used by the expansions.
    let left = CyclePermutation::left_ordered(&[3, 1, 2, 4], 2)?;
    let right = CyclePermutation::right_ordered(&[3, 1, 2, 4], 2)?;
    println!("left-ordered cycles {:?}, right-ordered cycles {:?}", left.cycles(), right.cycles());

    // Every row and column determinant of a Hermitian matrix is the same real number.
    let h = QMatrix::from_int_rows(&[
        vec![[2, 0, 0, 0], [0, 1, 1, 0], [1, 0, 0, 0]],
        vec![[0, -1, -1, 0], [3, 0, 0, 0], [0, 0, 0, 1]],
        vec![[1, 0, 0, 0], [0, 0, 0, -1], [1, 0, 0, 0]],
    ])?;
    let value = ncdet::hdet(&h)?;
    println!("hdet = {}", quatinv::exactq::format_rational(&value));
    println!("rank = {}, index = {}", ncdet::det_rank(&h)?, ncdet::matrix_index(&h)?);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
