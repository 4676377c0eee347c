//! Parabolic decomposition `w = w^I w_I` and how the statistic `L`
//! behaves over it: the Coxeter length is always additive, while `L` is
//! additive only on the even-factor elements (and fails just outside).
//!
//! Run with `cargo run --example parabolic_factors`.

use hyperoct::classes::{membership, Family};
use hyperoct::group::parabolic_decompose;
use hyperoct::stats::{l_value, length_stats};
use hyperoct::{IndexSet, SignedPermutation};

fn show(window: &str, members: &[usize]) {
    let w: SignedPermutation = window.parse().unwrap();
    let subset = IndexSet::new(w.n(), members.iter().copied()).unwrap();
    let f = parabolic_decompose(&w, &subset);
    println!("w = {w},  I = {{{subset}}}");
    println!("  w^I = {}   w_I = {}", f.quotient, f.subgroup_part);
    println!(
        "  lengths: {} = {} + {}",
        length_stats(&w).3,
        length_stats(&f.quotient).3,
        length_stats(&f.subgroup_part).3
    );
    let (lw, lq, lp) = (l_value(&w), l_value(&f.quotient), l_value(&f.subgroup_part));
    let verdict = if lw == lq + lp {
        "additive"
    } else {
        "NOT additive"
    };
    println!("  L: {lw} vs {lq} + {lp}  ({verdict})");
    println!();
}

fn main() {
    // the worked factorization: monochrome, L additive at the top subset
    show("[3,-2,-1]", &[1, 2]);

    // an even-factor element of degree 5: additive at {1,...,4}
    show("[-5,2,1,-4,3]", &[1, 2, 3, 4]);
    // ... but not at the prefix {0,1}
    show("[-5,2,1,-4,3]", &[0, 1]);

    // the smallest monochrome element outside the even-factor class
    show("[1,-2]", &[1]);

    // L-additivity at the top subset holds across the even-factor class
    for n in 2..=5 {
        let type_a = IndexSet::new(n, 1..n).unwrap();
        let mut total = 0;
        let mut additive = 0;
        for w in hyperoct::classes::enumerate_group(n) {
            if !membership(&w, Family::EvenFactors) {
                continue;
            }
            total += 1;
            let f = parabolic_decompose(&w, &type_a);
            if l_value(&w) == l_value(&f.quotient) + l_value(&f.subgroup_part) {
                additive += 1;
            }
        }
        println!("n={n}: L additive on {additive}/{total} even-factor elements");
    }
}
