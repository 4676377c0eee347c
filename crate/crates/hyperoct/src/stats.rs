//! Statistics on signed permutations: inversions, negative entries,
//! negative-sum pairs, Coxeter length, descent set, row pattern, the
//! column statistics `a`, `b`, `c`, and the statistic `L` computed both
//! from its raw definition and from `a + b + 2c`.

use crate::classes::IndexSet;
use crate::group::SignedPermutation;
use crate::matrix::ColumnMatrix;

/// All statistics of one element, computed in a single pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatRecord {
    pub inv: u64,
    pub neg: u64,
    pub nsp: u64,
    /// Coxeter length `inv + neg + nsp`.
    pub length: u64,
    /// The statistic `L = a + b + 2c`.
    pub l_stat: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub descents: IndexSet,
}

impl StatRecord {
    pub fn of(w: &SignedPermutation) -> Self {
        let (inv, neg, nsp, length) = length_stats(w);
        let (a, b, c) = abc_window(w);
        StatRecord {
            inv,
            neg,
            nsp,
            length,
            l_stat: a + b + 2 * c,
            a,
            b,
            c,
            descents: descent_set(w),
        }
    }
}

/// `(inv, neg, nsp, l)` where `inv` counts ordered pairs `i < j` with
/// `w(i) > w(j)`, `neg` the negative window entries, `nsp` the unordered
/// pairs with `w(i) + w(j) < 0`, and `l` is their sum, the Coxeter
/// length.
pub fn length_stats(w: &SignedPermutation) -> (u64, u64, u64, u64) {
    let win = w.window();
    let mut inv = 0u64;
    let mut nsp = 0u64;
    for i in 0..win.len() {
        for j in i + 1..win.len() {
            if win[i] > win[j] {
                inv += 1;
            }
            if win[i] + win[j] < 0 {
                nsp += 1;
            }
        }
    }
    let neg = win.iter().filter(|&&v| v < 0).count() as u64;
    (inv, neg, nsp, inv + neg + nsp)
}

/// Right descent set `{i in [n-1]_0 : w(i) > w(i+1)}` with `w(0) = 0`,
/// so `0` is a descent exactly when `w(1) < 0`.
pub fn descent_set(w: &SignedPermutation) -> IndexSet {
    let win = w.window();
    let mut mask = 0u64;
    let mut prev = 0i32;
    for (i, &v) in win.iter().enumerate() {
        if prev > v {
            mask |= 1 << i;
        }
        prev = v;
    }
    IndexSet::from_mask(w.n(), mask)
}

/// The statistic `L` straight from its definition: half the number of
/// pairs `(i, j)` in `[-n, n]^2` with `i < j`, `w(i) > w(j)` and `i, j`
/// of opposite parity. The raw count over the full grid is always even;
/// that is asserted before halving.
pub fn l_direct(w: &SignedPermutation) -> u64 {
    let n = w.n() as i32;
    let mut count = 0u64;
    for i in -n..=n {
        for j in i + 1..=n {
            if (i - j) % 2 != 0 && w.image(i) > w.image(j) {
                count += 1;
            }
        }
    }
    assert!(
        count.is_multiple_of(2),
        "mixed-parity inversion count must be even"
    );
    count / 2
}

/// The column statistics of a `{-1,0,1}` matrix, over the set of
/// columns with a unique nonzero entry: `a` counts odd columns holding
/// `-1`; `b` counts opposite-parity column pairs `j < j'` with
/// `i(j) > i(j')`; `c` counts opposite-parity pairs `j < j'` with
/// `i(j) < i(j')` and `-1` in column `j'`.
pub fn abc_stats(m: &ColumnMatrix) -> (u64, u64, u64) {
    let cols = m.stat_columns();
    let mut a = 0u64;
    let mut b = 0u64;
    let mut c = 0u64;
    for (k, &j) in cols.iter().enumerate() {
        let i_j = m.row_of_col(j).unwrap();
        if j % 2 == 1 && m.entry(i_j, j) == -1 {
            a += 1;
        }
        for &jp in &cols[k + 1..] {
            if (j ^ jp) & 1 == 0 {
                continue;
            }
            let i_jp = m.row_of_col(jp).unwrap();
            if i_j > i_jp {
                b += 1;
            } else if m.entry(i_jp, jp) == -1 {
                c += 1;
            }
        }
    }
    (a, b, c)
}

/// `a`, `b`, `c` of a signed permutation read off the window without
/// materializing the matrix: `i(j) = |w(j)|` and the entry sign in
/// column `j` is the sign of `w(j)`. Used inside enumeration loops.
pub fn abc_window(w: &SignedPermutation) -> (u64, u64, u64) {
    let win = w.window();
    let mut a = 0u64;
    let mut b = 0u64;
    let mut c = 0u64;
    for j in 0..win.len() {
        if j % 2 == 0 && win[j] < 0 {
            a += 1; // column j+1 is odd
        }
        for jp in j + 1..win.len() {
            if (j ^ jp) & 1 == 0 {
                continue;
            }
            if win[j].abs() > win[jp].abs() {
                b += 1;
            } else if win[jp] < 0 {
                c += 1;
            }
        }
    }
    (a, b, c)
}

/// `L = a + b + 2c` computed on the matrix view.
pub fn l_value(w: &SignedPermutation) -> u64 {
    let (a, b, c) = abc_stats(&w.matrix_view());
    a + b + 2 * c
}

/// Row pattern: the sign of the nonzero entry in each row, i.e.
/// `sgn(w^{-1}(i))` for `i = 1..=n`.
pub fn row_pattern(w: &SignedPermutation) -> Vec<i8> {
    w.inverse()
        .window()
        .iter()
        .map(|&v| v.signum() as i8)
        .collect()
}
