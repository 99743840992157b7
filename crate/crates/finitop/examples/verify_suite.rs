//! Run the bundled verification suite and print its table.

use finitop::verify::{run_suite, Caps};

fn main() {
    let report = run_suite(0, &Caps::default());
    print!("{}", report.render());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
