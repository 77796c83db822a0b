//! Running the lemma catalogue with a custom configuration.
//!
//!     cargo run --release --example property_suite [CASES]

use nes::properties::{exhaustive_aeq_oracle, property_names, run_property};
use nes::{atom, GenConfig};

fn main() {
    let cases = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let config = GenConfig {
        cases,
        max_size: 16,
        // a small pool makes binders collide often
        atom_pool: vec![atom("a"), atom("b"), atom("c")],
        seed: 1,
    };
    for name in property_names() {
        let report = run_property(name, &config).unwrap();
        print!("{report}");
    }
    let oracle = exhaustive_aeq_oracle(4, &[atom("x"), atom("y")]);
    println!(
        "exhaustive aeq/nameless agreement on {} pairs: {} disagreements",
        oracle.cases_run, oracle.failures
    );
}
