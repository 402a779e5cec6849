//! The full core suite at certification radius, with the runtime budget the
//! downstream tooling assumes.

use std::time::{Duration, Instant};

#[test]
fn core_suite_radius_eight_is_clean_and_fast() {
    let t0 = Instant::now();
    let reports = roots_galleries::lemma_suite_core(8).unwrap();
    assert_eq!(reports.len(), 7);
    for rep in &reports {
        assert!(rep.passed(), "{}: {:?}", rep.name, rep.failures);
        assert!(rep.instances > 0, "{} never fired", rep.name);
    }
    assert!(
        t0.elapsed() < Duration::from_secs(120),
        "suite took {:?}",
        t0.elapsed()
    );
}
