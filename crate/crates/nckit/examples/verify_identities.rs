//! Replays every identity check at a small bound and prints one verdict
//! per identity, the same routines `nckit verify` runs one at a time.

use nckit::checks;

fn main() {
    let mut all_ok = true;
    for &name in checks::IDENTITIES {
        let report = checks::run(name, Some(4)).expect("known identity");
        let ok = report.all_pass();
        all_ok &= ok;
        println!(
            "{name:<24} {:>3} equations  {}",
            report.rows.len(),
            if ok { "ok" } else { "FAIL" }
        );
    }
    assert!(all_ok);
}
