//! Long-running checks, excluded from the default run.
//!
//! `cargo test --release -p axial-core --test extended -- --ignored`

use std::time::{Duration, Instant};

use axial_core::catalog::build_default;
use axial_core::extension::cocycle_space;

#[test]
#[ignore]
fn albert_cocycles_are_coboundaries() {
    let start = Instant::now();
    let e = build_default("Albert").unwrap();
    let alg = &e.algebra;
    assert_eq!(alg.dim(), 27);
    let set = e.axis_set("standard").unwrap();
    assert!(set.axes.iter().all(|a| alg.is_idempotent(a)));
    let law = e.law(&set.law).unwrap();
    let cs = cocycle_space(alg, &set.axes, law).unwrap();
    assert_eq!(cs.quotient_dim, 0, "dim Z = {}, dim B = {}", cs.z.dim(), cs.b.dim());
    assert!(start.elapsed() < Duration::from_secs(300));
}
