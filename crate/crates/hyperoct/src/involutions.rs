//! The sign-reversing involutions that cancel contributions outside the
//! supporting sets, and the two extension constructions used by the
//! inductive product formulas.
//!
//! Each involution is fixed-point-free on its domain, preserves the
//! statistic `L`, and flips the parity of the Coxeter length, so the
//! paired elements cancel in any sum of `(-1)^l X^L`.

use crate::classes::{
    is_ascending, is_diagonal, is_even_chessboard, membership, topmost_sandwich, Family, IndexSet,
};
use crate::group::{parabolic_decompose, SignedPermutation};
use crate::stats::{descent_set, l_value, length_stats};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionKind {
    Star,
    Circle,
    Vee,
}

/// One application of an involution, carrying the generator indices of
/// the reflection that was applied (in multiplication order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionReport {
    pub kind: InvolutionKind,
    pub input: SignedPermutation,
    pub output: SignedPermutation,
    pub pivot: Vec<usize>,
}

impl InvolutionReport {
    fn new(
        kind: InvolutionKind,
        input: SignedPermutation,
        output: SignedPermutation,
        pivot: Vec<usize>,
    ) -> Self {
        assert_ne!(input, output, "involution produced a fixed point");
        assert_eq!(l_value(&input), l_value(&output), "L not preserved");
        assert_eq!(
            (length_stats(&input).3 + 1) % 2,
            length_stats(&output).3 % 2,
            "length parity not flipped"
        );
        InvolutionReport {
            kind,
            input,
            output,
            pivot,
        }
    }
}

/// Flip the sign of the entry in row `r`, i.e. left-multiply by the
/// reflection `s_{r-1} ... s_1 s_0 s_1 ... s_{r-1}`.
fn flip_row(w: &SignedPermutation, r: usize) -> SignedPermutation {
    let window = w
        .window()
        .iter()
        .map(|&v| {
            if v.unsigned_abs() as usize == r {
                -v
            } else {
                v
            }
        })
        .collect();
    SignedPermutation::from_window(window).unwrap()
}

fn flip_word(r: usize) -> Vec<usize> {
    let mut word: Vec<usize> = (0..r).rev().collect();
    word.extend(1..r);
    word
}

/// Interchange rows `i` and `i+2`, i.e. left-multiply by
/// `s_{i+1} s_i s_{i+1}`.
fn swap_rows_two_apart(w: &SignedPermutation, i: usize) -> SignedPermutation {
    let a = i as i32;
    let b = i as i32 + 2;
    let window = w
        .window()
        .iter()
        .map(|&v| {
            if v.abs() == a {
                v.signum() * b
            } else if v.abs() == b {
                v.signum() * a
            } else {
                v
            }
        })
        .collect();
    SignedPermutation::from_window(window).unwrap()
}

/// Pairs off the non-chessboard part of `B_n`: take the minimal
/// `i in [n-1]_0` whose rows `i` and `i+1` have their entries in columns
/// of equal parity (with `j(0) := 0`) and left-multiply by `s_i`. Such
/// an `i` exists exactly off the even chessboard subgroup, the pair
/// columns are at distance two or more, so the descent set survives
/// unchanged.
pub fn star_involution(w: &SignedPermutation) -> Result<InvolutionReport, Error> {
    if is_even_chessboard(w) {
        return Err(Error::NotInDomain {
            operation: "star_involution",
            window: w.to_string(),
        });
    }
    let n = w.n();
    let inv = w.inverse();
    let col_of_row = |r: usize| {
        if r == 0 {
            0
        } else {
            inv.window()[r - 1].unsigned_abs() as usize
        }
    };
    let i = (0..n)
        .find(|&i| (col_of_row(i) + col_of_row(i + 1)) % 2 == 0)
        .expect("a non-chessboard element has two equal-parity neighbour rows");
    let output = if i == 0 {
        flip_row(w, 1)
    } else {
        // left multiplication by s_i swaps the values i, i+1
        let window = w
            .window()
            .iter()
            .map(|&v| {
                if v.abs() == i as i32 {
                    v.signum() * (i as i32 + 1)
                } else if v.abs() == i as i32 + 1 {
                    v.signum() * i as i32
                } else {
                    v
                }
            })
            .collect();
        SignedPermutation::from_window(window).unwrap()
    };
    Ok(InvolutionReport::new(
        InvolutionKind::Star,
        w.clone(),
        output,
        vec![i],
    ))
}

enum CircleMove {
    Flip(usize),
    Swap(usize),
}

/// One step of the circle pairing. A sign flip in row `r` preserves `L`
/// exactly when the column `j(r)` is even and every odd column to its
/// left has its entry strictly below row `r`; positions are untouched,
/// so the partner selects the same row. When no such row exists, a
/// non-diagonal element still has three consecutive rows whose columns
/// are not monotone; among those triples the swap of the outer rows
/// keeps `L`. Picking the triple with the largest escaping middle
/// column (smallest, when every middle escapes downwards) is what makes
/// the choice reproduce itself on the partner.
fn circle_step(w: &SignedPermutation) -> (SignedPermutation, CircleMove) {
    let n = w.n();
    let win = w.window();
    let inv = w.inverse();
    let row_of_col = |c: usize| win[c - 1].unsigned_abs() as usize;
    let col_of_row = |r: usize| {
        if r == 0 {
            0
        } else {
            inv.window()[r - 1].unsigned_abs() as usize
        }
    };

    for r in 1..=n {
        let c = col_of_row(r);
        if c % 2 == 0 && (1..c).step_by(2).all(|j| row_of_col(j) > r) {
            return (flip_row(w, r), CircleMove::Flip(r));
        }
    }

    let mut above: Option<(usize, usize)> = None; // (middle column, i)
    let mut below: Option<(usize, usize)> = None;
    for i in 1..n.saturating_sub(1) {
        let (a, m, b) = (col_of_row(i), col_of_row(i + 1), col_of_row(i + 2));
        if m > a.max(b) {
            if above.is_none_or(|(best, _)| m > best) {
                above = Some((m, i));
            }
        } else if m < a.min(b) && below.is_none_or(|(best, _)| m < best) {
            below = Some((m, i));
        }
    }
    let (_, i) = above
        .or(below)
        .expect("a non-diagonal element without flip rows has a non-monotone row triple");
    (swap_rows_two_apart(w, i), CircleMove::Swap(i))
}

/// Pairs off the non-diagonal even chessboard elements, leaving the
/// `2^n` diagonal matrices as the support of the full-group sum.
pub fn circle_involution(w: &SignedPermutation) -> Result<InvolutionReport, Error> {
    if !is_even_chessboard(w) || is_diagonal(w) {
        return Err(Error::NotInDomain {
            operation: "circle_involution",
            window: w.to_string(),
        });
    }
    let (output, mv) = circle_step(w);
    // the selection rule must reproduce itself on the partner
    let (back, _) = circle_step(&output);
    assert_eq!(back, *w, "circle selection did not return to {w}");
    let pivot = match mv {
        CircleMove::Flip(r) => flip_word(r),
        CircleMove::Swap(i) => vec![i + 1, i, i + 1],
    };
    Ok(InvolutionReport::new(
        InvolutionKind::Circle,
        w.clone(),
        output,
        pivot,
    ))
}

/// Pairs off the even chessboard elements whose parabolic factors are
/// not monochrome. The topmost odd sandwich `(r, h)` locates two rows
/// whose columns in the ascending factor are adjacent; transposing them
/// inserts one generator between the factors:
/// `w = w^{[n-1]} w_{[n-1]}  ->  w^{[n-1]} s_mu w_{[n-1]}`.
/// The positive part of the descent set survives, and the whole descent
/// set does when the sandwich is proper.
pub fn vee_involution(w: &SignedPermutation) -> Result<InvolutionReport, Error> {
    let n = w.n();
    if !is_even_chessboard(w) || membership(w, Family::MonochromeFactors) {
        return Err(Error::NotInDomain {
            operation: "vee_involution",
            window: w.to_string(),
        });
    }
    let sandwich = topmost_sandwich(w).expect("non-monochrome element must have a sandwich");
    let type_a = IndexSet::new(n, 1..n).unwrap();
    let f = parabolic_decompose(w, &type_a);
    let j = f.quotient.col_of_row(sandwich.r);
    let jp = f.quotient.col_of_row(sandwich.r + sandwich.h + 1);
    assert!(
        j.abs_diff(jp) == 1,
        "sandwich rows of {w} map to non-adjacent columns {j}, {jp} in {}",
        f.quotient
    );
    let mu = j.min(jp);
    let output = f
        .quotient
        .compose(&SignedPermutation::generator(n, mu))
        .compose(&f.subgroup_part);
    Ok(InvolutionReport::new(
        InvolutionKind::Vee,
        w.clone(),
        output,
        vec![mu],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Embeds an ascending even chessboard element of odd degree `n` into
/// degree `n+2`, either fixing both statistics (`Plus`: two trailing
/// identity rows) or adding `n+2` to `L` and flipping the length parity
/// (`Minus`: the window shifts right past two new leading entries
/// `-(n+2), -(n+1)`). Every ascending even chessboard element of degree
/// `n+2` arises from exactly one of the two forms.
pub fn extend_ascending(w: &SignedPermutation, sign: Sign) -> Result<SignedPermutation, Error> {
    let n = w.n();
    if n.is_multiple_of(2) || !is_even_chessboard(w) || !is_ascending(w) {
        return Err(Error::NotInDomain {
            operation: "extend_ascending",
            window: w.to_string(),
        });
    }
    let m = n as i32 + 2;
    let window = match sign {
        Sign::Plus => {
            let mut v = w.window().to_vec();
            v.push(m - 1);
            v.push(m);
            v
        }
        Sign::Minus => {
            let mut v = vec![-m, -(m - 1)];
            v.extend_from_slice(w.window());
            v
        }
    };
    Ok(SignedPermutation::from_window(window).unwrap())
}

/// Appends a diagonal entry `+n` or `-n` to a diagonal element of
/// degree `n-1`; the minus form adds `n` to `L` and `2n-1` to the
/// length. The diagonal elements of degree `n` split disjointly into
/// the two images.
pub fn extend_diagonal(v: &SignedPermutation, sign: Sign) -> Result<SignedPermutation, Error> {
    if !is_diagonal(v) {
        return Err(Error::NotInDomain {
            operation: "extend_diagonal",
            window: v.to_string(),
        });
    }
    let n = v.n() as i32 + 1;
    let mut window = v.window().to_vec();
    window.push(match sign {
        Sign::Plus => n,
        Sign::Minus => -n,
    });
    Ok(SignedPermutation::from_window(window).unwrap())
}

/// Summary of one exhaustive involution check.
#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub kind: InvolutionKind,
    pub n: usize,
    pub domain_size: u64,
}

/// Runs the full property suite for one involution over its domain in
/// `B_n`: domain closure, fixed-point-freeness, square to identity,
/// preservation of `L`, length parity flip, and the involution's
/// descent-set guarantee. Returns the first counterexample as a window
/// string.
pub fn check_involution(kind: InvolutionKind, n: usize) -> Result<CheckSummary, String> {
    let apply = |w: &SignedPermutation| match kind {
        InvolutionKind::Star => star_involution(w),
        InvolutionKind::Circle => circle_involution(w),
        InvolutionKind::Vee => vee_involution(w),
    };
    let in_domain = |w: &SignedPermutation| match kind {
        InvolutionKind::Star => !is_even_chessboard(w),
        InvolutionKind::Circle => is_even_chessboard(w) && !is_diagonal(w),
        InvolutionKind::Vee => is_even_chessboard(w) && !membership(w, Family::MonochromeFactors),
    };
    let mut domain_size = 0u64;
    for w in crate::classes::enumerate_group(n) {
        if !in_domain(&w) {
            if apply(&w).is_ok() {
                return Err(format!("{w}: accepted outside the domain"));
            }
            continue;
        }
        domain_size += 1;
        let r = match apply(&w) {
            Ok(r) => r,
            Err(e) => return Err(format!("{w}: rejected on its domain ({e})")),
        };
        if r.output == w {
            return Err(format!("{w}: fixed point"));
        }
        if !in_domain(&r.output) {
            return Err(format!("{w}: image {} leaves the domain", r.output));
        }
        if l_value(&w) != l_value(&r.output) {
            return Err(format!("{w}: L changed to {}", l_value(&r.output)));
        }
        if (length_stats(&w).3 + length_stats(&r.output).3) % 2 != 1 {
            return Err(format!("{w}: length parity kept by {}", r.output));
        }
        match apply(&r.output) {
            Ok(back) if back.output == w => {}
            _ => return Err(format!("{w}: square is not the identity")),
        }
        let dw = descent_set(&w);
        let dout = descent_set(&r.output);
        match kind {
            InvolutionKind::Star => {
                if dw != dout {
                    return Err(format!("{w}: descent set changed to {{{dout}}}"));
                }
            }
            InvolutionKind::Circle => {}
            InvolutionKind::Vee => {
                if dw.mask() & !1 != dout.mask() & !1 {
                    return Err(format!("{w}: positive descents changed to {{{dout}}}"));
                }
                if topmost_sandwich(&w).unwrap().proper && dw != dout {
                    return Err(format!("{w}: proper sandwich but descents changed"));
                }
            }
        }
    }
    Ok(CheckSummary {
        kind,
        n,
        domain_size,
    })
}
