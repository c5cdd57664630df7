//! Every crate example must keep running.

#[path = "../examples/egf_identities.rs"]
mod egf_identities;
#[path = "../examples/eulerian_triangles.rs"]
mod eulerian_triangles;
#[path = "../examples/permutation_oracles.rs"]
mod permutation_oracles;
#[path = "../examples/real_roots.rs"]
mod real_roots;
#[path = "../examples/verify_suite.rs"]
mod verify_suite;
#[path = "../examples/xxd_operator.rs"]
mod xxd_operator;
#[path = "../examples/yz_expansion.rs"]
mod yz_expansion;

#[test]
fn yz_expansion_runs() {
    yz_expansion::run_example().unwrap();
}

#[test]
fn eulerian_triangles_runs() {
    eulerian_triangles::run_example().unwrap();
}

#[test]
fn permutation_oracles_runs() {
    permutation_oracles::run_example().unwrap();
}

#[test]
fn xxd_operator_runs() {
    xxd_operator::run_example().unwrap();
}

#[test]
fn egf_identities_runs() {
    egf_identities::run_example().unwrap();
}

#[test]
fn real_roots_runs() {
    real_roots::run_example().unwrap();
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().unwrap();
}
