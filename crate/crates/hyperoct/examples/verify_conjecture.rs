//! Exhaustive check of the signed distribution identity
//! `sum_{D(w) ⊆ I} (-1)^l(w) X^L(w) = f_{n,I}(X)` over every subset
//! `I ⊆ [n-1]_0` for all degrees up to 6.
//!
//! Run with `cargo run --release --example verify_conjecture`.

use hyperoct::genfun::verify_all;

fn main() {
    for n in 1..=6 {
        let reports = verify_all(n);
        let failures: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        println!(
            "n = {n}: {} subsets checked, {} failures",
            reports.len(),
            failures.len()
        );
        for r in &failures {
            println!("  FAIL I = {{{}}}: {} vs {}", r.subset, r.lhs, r.rhs);
        }
    }

    // a closer look at one degree: every class sum next to its product form
    println!("\nn = 3 in detail:");
    for r in verify_all(3) {
        println!(
            "  I = {{{:<4}}}  {:>4} elements   {}",
            r.subset, r.element_count, r.lhs
        );
    }
}
