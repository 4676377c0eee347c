//! Census of the element classes per degree: chessboard colours, the
//! diagonal / ascending / monochrome / even-factor families, and the
//! split-merge bijection on the even chessboard subgroup.
//!
//! Run with `cargo run --example class_census`.

use hyperoct::classes::{
    chessboard_kind, enumerate_group, is_even_chessboard, membership, ChessboardKind, Family,
};
use hyperoct::SignedPermutation;

fn main() {
    println!(
        "{:>2} {:>7} {:>6} {:>5} {:>6} {:>5} {:>5} {:>5}",
        "n", "|B_n|", "even", "odd", "diag", "asc", "mono", "evenf"
    );
    for n in 1..=6 {
        let mut total = 0u64;
        let mut even = 0u64;
        let mut odd = 0u64;
        let mut diag = 0u64;
        let mut asc = 0u64;
        let mut mono = 0u64;
        let mut evenf = 0u64;
        for w in enumerate_group(n) {
            total += 1;
            match chessboard_kind(&w) {
                Some(ChessboardKind::Even) => even += 1,
                Some(ChessboardKind::Odd) => odd += 1,
                None => {}
            }
            diag += u64::from(membership(&w, Family::Diagonal));
            asc += u64::from(membership(&w, Family::Ascending));
            mono += u64::from(membership(&w, Family::MonochromeFactors));
            evenf += u64::from(membership(&w, Family::EvenFactors));
        }
        println!("{n:>2} {total:>7} {even:>6} {odd:>5} {diag:>6} {asc:>5} {mono:>5} {evenf:>5}");
    }

    // the split-merge pair of maps on one element
    let w: SignedPermutation = "[1,-4,-3,2]".parse().unwrap();
    let (a, b) = w.sigma_split();
    println!(
        "\nsplit {w} -> ({a}, {b}); merge back -> {}",
        SignedPermutation::star_merge(&a, &b).unwrap()
    );
    assert!(is_even_chessboard(&w));
}
