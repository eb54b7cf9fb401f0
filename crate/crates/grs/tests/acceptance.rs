//! Acceptance suite: runs every criterion and prints one pass/fail line
//! per criterion. `grs selftest` drives the same checks.

#[test]
fn acceptance_criteria() {
    let results = grs::selftest::run_all_streaming(|r| println!("{}", r.line()));
    let failed: Vec<&grs::selftest::CriterionResult> =
        results.iter().filter(|r| !r.passed).collect();
    assert!(
        failed.is_empty(),
        "{} criterion(s) failed:\n{}",
        failed.len(),
        failed
            .iter()
            .map(|r| r.line())
            .collect::<Vec<_>>()
            .join("\n")
    );
}
