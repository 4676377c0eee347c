//! The sums `sum (-1)^l X^L` over a descent class are carried by small
//! supporting sets: the even chessboard elements always, the diagonal
//! matrices for the full-group sum, and the monochrome / even-factor
//! elements once `0 ∈ I`. Everything outside cancels in pairs.
//!
//! Run with `cargo run --example supporting_sets`.

use hyperoct::genfun::{support_check, SupportFamily};
use hyperoct::IndexSet;

fn main() {
    let families = [
        SupportFamily::Chessboard,
        SupportFamily::Diagonal,
        SupportFamily::Monochrome,
        SupportFamily::EvenFactors,
    ];
    for n in 1..=5 {
        for family in families {
            let mut checked = 0;
            let mut failed = 0;
            for subset in IndexSet::all(n) {
                if !family.admissible(n, &subset) {
                    continue;
                }
                let r = support_check(n, &subset, family).unwrap();
                checked += 1;
                if !r.passed() {
                    failed += 1;
                }
            }
            println!(
                "n={n} family={:<12} subsets={checked:>2} failures={failed}",
                family.name()
            );
        }
    }

    // one instance spelled out
    let subset = IndexSet::new(4, [0, 2]).unwrap();
    let r = support_check(4, &subset, SupportFamily::EvenFactors).unwrap();
    println!(
        "\nn=4, I={{0,2}}: full class sum        = {}\n             even-factor restriction = {} ({} elements)",
        r.lhs, r.rhs, r.element_count
    );
}
