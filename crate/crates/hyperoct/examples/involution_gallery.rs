//! The three sign-reversing involutions in action: a concrete partner
//! for each, followed by the exhaustive property suites.
//!
//! Run with `cargo run --example involution_gallery`.

use hyperoct::involutions::{
    check_involution, circle_involution, star_involution, vee_involution, InvolutionKind,
};
use hyperoct::stats::{descent_set, l_value, length_stats};
use hyperoct::SignedPermutation;

fn describe(name: &str, r: &hyperoct::involutions::InvolutionReport) {
    println!(
        "{name}: {} -> {}   (L {} = {}, lengths {} / {}, descents {{{}}} / {{{}}})",
        r.input,
        r.output,
        l_value(&r.input),
        l_value(&r.output),
        length_stats(&r.input).3,
        length_stats(&r.output).3,
        descent_set(&r.input),
        descent_set(&r.output),
    );
}

fn main() {
    // star pairs off everything outside the even chessboard subgroup
    let w: SignedPermutation = "[1,3,2]".parse().unwrap();
    describe("star  ", &star_involution(&w).unwrap());

    // circle pairs off the non-diagonal even chessboard elements
    let w: SignedPermutation = "[5,4,1,2,3]".parse().unwrap();
    describe("circle", &circle_involution(&w).unwrap());

    // vee pairs off even chessboard elements with an odd sandwich
    let w: SignedPermutation = "[3,-2,-1]".parse().unwrap();
    describe("vee   ", &vee_involution(&w).unwrap());

    println!();
    for kind in [
        InvolutionKind::Star,
        InvolutionKind::Circle,
        InvolutionKind::Vee,
    ] {
        for n in 2..=5 {
            match check_involution(kind, n) {
                Ok(s) => println!(
                    "{kind:?} on B_{n}: domain {} elements, all properties hold",
                    s.domain_size
                ),
                Err(e) => println!("{kind:?} on B_{n}: COUNTEREXAMPLE {e}"),
            }
        }
    }
}
