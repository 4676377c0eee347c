//! The exact polynomial toolbox: `(k) = 1 - X^k`, factorials, binomial
//! and multinomial coefficients, the descent-class polynomials
//! `f_{n,I}`, and the auxiliary negative-signed generating functions.
//!
//! Run with `cargo run --example q_polynomials`.

use hyperoct::genfun::{fg_genfun, FgVariant};
use hyperoct::poly::{eval_reciprocal_power, f_poly, q_binomial, q_factorial, q_multinomial};
use hyperoct::IndexSet;

fn main() {
    for k in 0..=4 {
        println!("({k})  = {}", hyperoct::poly::q_int(k));
    }
    for n in 1..=4 {
        println!("({n})! = {}", q_factorial(n));
    }
    println!("binom(4,2)_X = {}", q_binomial(4, 2));
    let subset = IndexSet::new(4, [1, 2]).unwrap();
    println!("multinom(4; {{1,2}})_X = {}", q_multinomial(4, &subset));

    println!();
    for (n, members) in [(1, vec![0]), (3, vec![0]), (4, vec![0, 2]), (5, vec![1, 3])] {
        let subset = IndexSet::new(n, members.iter().copied()).unwrap();
        println!("f_{{{n},{{{subset}}}}} = {}", f_poly(n, &subset));
    }

    // evaluation at 1/q recovers matrix counts
    let f = f_poly(2, &IndexSet::new(2, [1]).unwrap());
    println!(
        "\nf_2,{{1}} = {f}; 2^2 f(1/2) = {}",
        eval_reciprocal_power(&f, 2, 2)
    );

    // the companion sums signed by the negative-entry count
    println!();
    let subset = IndexSet::new(2, [0, 1]).unwrap();
    for (name, variant) in [
        ("G  ", FgVariant::G),
        ("F.0", FgVariant::FEta0),
        ("F.1", FgVariant::FEta1),
    ] {
        println!("{name} over B_2 = {}", fg_genfun(2, &subset, variant));
    }
}
