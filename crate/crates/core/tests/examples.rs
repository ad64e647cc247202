//! Every runnable example also runs as a test.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(pseudoinverse, "pseudoinverse.rs");
example!(determinants, "determinants.rs");
example!(drazin_group, "drazin_group.rs");
example!(core_inverses, "core_inverses.rs");
example!(dmp_mpd_cmp, "dmp_mpd_cmp.rs");
example!(verify_candidates, "verify_candidates.rs");
example!(worked_example, "worked_example.rs");

#[test]
fn pseudoinverse_runs() {
    let x = pseudoinverse::run_example().unwrap();
    assert_eq!(x.shape(), (3, 2));
}

#[test]
fn determinants_runs() {
    determinants::run_example().unwrap();
}

#[test]
fn drazin_group_runs() {
    assert!(!drazin_group::run_example().unwrap().is_zero());
}

#[test]
fn core_inverses_run() {
    let (right, left) = core_inverses::run_example().unwrap();
    assert_ne!(right, left);
}

#[test]
fn dmp_mpd_cmp_runs() {
    dmp_mpd_cmp::run_example().unwrap();
}

#[test]
fn verify_candidates_runs() {
    assert_eq!(verify_candidates::run_example().unwrap(), 21);
}

#[test]
fn worked_example_runs() {
    assert!(worked_example::run_example().unwrap());
}
