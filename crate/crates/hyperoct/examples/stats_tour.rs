//! Tour of the statistics: window notation, lengths, descents, the
//! column statistics and the two routes to `L`.
//!
//! Run with `cargo run --example stats_tour`.

use hyperoct::stats::{l_direct, row_pattern, StatRecord};
use hyperoct::SignedPermutation;

fn show(text: &str) {
    let w: SignedPermutation = text.parse().unwrap();
    let r = StatRecord::of(&w);
    println!("w = {w}");
    println!(
        "  inv={} neg={} nsp={}  length={}",
        r.inv, r.neg, r.nsp, r.length
    );
    println!("  a={} b={} c={}  L = a+b+2c = {}", r.a, r.b, r.c, r.l_stat);
    println!("  L from the raw pair count: {}", l_direct(&w));
    println!("  descents {{{}}}", r.descents);
    let pattern: String = row_pattern(&w)
        .iter()
        .map(|&s| if s > 0 { '+' } else { '-' })
        .collect();
    println!("  row pattern {pattern}");
    println!();
}

fn main() {
    show("[1,-4,-3,2]");
    show("[3,-2,-1]");
    show("[-5,2,1,-4,3]");
    show("[-1,-2,-3,-4]"); // the longest element of B_4

    // the longest element realizes the maximum of both statistics
    for n in 1..=6 {
        let w0 = SignedPermutation::longest_element(n);
        let r = StatRecord::of(&w0);
        println!(
            "w0 in B_{n}: length = {} = n^2, L = {} = n(n+1)/2",
            r.length, r.l_stat
        );
    }
}
