//! Counting symmetric matrices over a prime field by rank, two ways:
//! brute-force enumeration against
//! `q^(C(n+1,2) - C(i+1,2)) f_{n,{i}}(1/q)`.
//!
//! Run with `cargo run --release --example symmetric_rank`.

use hyperoct::symrank::{census_size, sym_rank_counts, sym_rank_formula};

fn main() {
    let budget = 100_000_000;
    for n in 1..=3usize {
        for q in [2u64, 3, 5] {
            let counts = sym_rank_counts(n, q, budget).unwrap();
            println!(
                "symmetric {n}x{n} over F_{q} ({} matrices):",
                census_size(n, q)
            );
            for i in (0..=n).rev() {
                let formula = sym_rank_formula(n, q, i);
                let mark = if counts[n - i] as i128 == formula {
                    "="
                } else {
                    "!="
                };
                println!(
                    "  rank {:>2}: counted {:>8}  {mark} formula {:>8}",
                    n - i,
                    counts[n - i],
                    formula
                );
            }
        }
    }
}
