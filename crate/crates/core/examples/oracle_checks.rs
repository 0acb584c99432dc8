// The self-test's oracle comparisons, callable from code.

use std::error::Error;

use ionpair::cli::run_checks;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for check in run_checks() {
        let status = if check.passed() { "ok" } else { "FAILED" };
        println!("{:<22} {:.2e} (tol {:.0e}) {status}", check.name, check.deviation, check.tolerance);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
