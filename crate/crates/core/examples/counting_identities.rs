//! Block counts behind GM and WQH switching, checked by enumerating the
//! blocks for small part sizes.
//!
//! ```text
//! cargo run --example counting_identities
//! ```

use design_switching::catalog::{counting_identities, gm64_design, gm64_uniform_rule};

fn main() {
    for c in 2..=6 {
        let report = counting_identities(c);
        println!("c = {c}: {}", if report.all_hold() { "all hold" } else { "MISMATCH" });
        for check in &report.checks {
            println!("  {:<40} {:>8} {:>8}", check.name, check.brute_force, check.closed_form);
        }
    }

    let fixed = gm64_design().validate().expect("a design");
    println!("\nten-point GM design: r = {}, lambda = {}", fixed.r, fixed.lambda);
    match gm64_uniform_rule().validate() {
        Ok(p) => println!("uniform rule: r = {}, lambda = {}", p.r, p.lambda),
        Err(e) => println!("uniform rule: {e}"),
    }
}
