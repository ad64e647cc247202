// Right and left core inverses and their index-k generalization, core-EP.

use quatinv::coreinv::{self, CompositionRoute, CoreMethod, Side};
use quatinv::oracle::{self, System};
use quatinv::{QMatrix, Result};

pub fn run_example() -> Result<(QMatrix, QMatrix)> {
    let a = QMatrix::from_int_rows(&[
        vec![[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
        vec![[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]],
        vec![[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    ])?;
    let right = coreinv::right_core(&a, CoreMethod::Determinantal)?;
    let left = coreinv::left_core(&a, CoreMethod::Determinantal)?;
    for method in CoreMethod::ALL {
        assert_eq!(coreinv::right_core(&a, method)?, right);
        assert_eq!(coreinv::left_core(&a, method)?, left);
    }
    assert_eq!(right, coreinv::core_composition(&a, Side::Right, CompositionRoute::Oracle)?);
    assert!(oracle::verify(System::CoreRight, &a, &right)?.passed());
    assert!(oracle::verify(System::CoreLeft, &a, &left)?.passed());
    println!("right core =\n{right}\nleft core =\n{left}");

    // Core-EP handles any index.
    let b = QMatrix::from_int_rows(&[
        vec![[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]],
        vec![[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]],
        vec![[0, 0, 0, 0], [0, 0, 0, 0], [2, 0, 0, 0]],
    ])?;
    assert_eq!(quatinv::ncdet::matrix_index(&b)?, 2);
    let ep = coreinv::core_ep(&b, Side::Right)?;
    assert!(oracle::verify(System::CoreEpRight, &b, &ep)?.passed());
    println!("core-EP of an index-2 matrix =\n{ep}");
    Ok((right, left))
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}
