//! Runs every brute-force verifier suite on all three types and prints
//! the report lines.

use biclosed::oracle::run_all;
use biclosed::roots::RootSystemType;

fn main() {
    let mut all_passed = true;
    for ty in RootSystemType::ALL {
        for rep in run_all(ty, 8, 0) {
            let verdict = if rep.passed() { "ok" } else { "FAILED" };
            println!("{:>2} {:<18} cases={:<5} {}", ty.name(), rep.suite, rep.cases, verdict);
            for f in rep.failures.iter().take(3) {
                println!("      {}: {}", f.case, f.detail);
            }
            all_passed &= rep.passed();
        }
    }
    assert!(all_passed, "verifier suites found counterexamples");
    println!("\nall suites passed");
}
