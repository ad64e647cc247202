// Checking a candidate inverse against a defining system, and a seeded sweep.

use quatinv::geninv::{self, FormSelector};
use quatinv::oracle::{self, System};
use quatinv::sampling::square_suite;
use quatinv::{QMatrix, Quaternion, Result};

pub fn run_example() -> Result<usize> {
    let a = QMatrix::from_int_rows(&[
        vec![[1, 1, 0, 0], [0, 0, 2, 0]],
        vec![[0, 0, 0, 1], [1, 0, 0, 0]],
    ])?;
    let mut x = geninv::mp_inverse(&a, FormSelector::Auto)?;
    println!("{}", serde_json::to_string_pretty(&oracle::verify(System::Penrose, &a, &x)?).unwrap());

    x.set(1, 1, x.at(1, 1) + &Quaternion::one());
    let report = oracle::verify(System::Penrose, &a, &x)?;
    for check in report.failures() {
        println!("perturbed candidate fails: {}", check.name);
    }

    let mut checked = 0;
    for m in square_suite(2024, 21, &[2, 3]) {
        let d = geninv::drazin(&m, FormSelector::Auto)?;
        assert_eq!(d, oracle::drazin_oracle(&m)?);
        checked += 1;
    }
    println!("{checked} random Drazin inverses match the elimination oracle");
    Ok(checked)
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}
