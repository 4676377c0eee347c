//! Subsets of `[n-1]_0`, the chessboard / diagonal / ascending class
//! hierarchy with its factor-based refinements, odd sandwiches, and the
//! element enumerators.

use crate::group::{parabolic_decompose, SignedPermutation};
use crate::stats::{descent_set, row_pattern};
use crate::Error;
use std::fmt;

/// A subset of `{0, 1, ..., n-1}`, used both as a descent set of `B_n`
/// and as the parameter `I` of the descent-class polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    degree: usize,
    mask: u64,
}

impl IndexSet {
    pub fn new(degree: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        assert!((1..=63).contains(&degree));
        let mut mask = 0u64;
        for m in members {
            if m >= degree {
                return Err(Error::SubsetOutOfRange { member: m, degree });
            }
            mask |= 1 << m;
        }
        Ok(IndexSet { degree, mask })
    }

    pub fn empty(degree: usize) -> Self {
        IndexSet::new(degree, []).unwrap()
    }

    /// The full set `[n-1]_0 = {0, ..., n-1}`.
    pub fn full(degree: usize) -> Self {
        IndexSet::from_mask(degree, (1u64 << degree) - 1)
    }

    pub fn from_mask(degree: usize, mask: u64) -> Self {
        assert!((1..=63).contains(&degree));
        assert!(mask < (1u64 << degree), "mask has bits outside 0..{degree}");
        IndexSet { degree, mask }
    }

    /// Parses comma-separated members, e.g. `"0,2,4"`; the empty string
    /// is the empty set.
    pub fn parse(degree: usize, text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(IndexSet::empty(degree));
        }
        let mut members = Vec::new();
        for tok in t.split(',') {
            let m: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad subset member {:?}", tok.trim())))?;
            members.push(m);
        }
        IndexSet::new(degree, members)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.degree && self.mask >> i & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet::from_mask(self.degree, !self.mask & ((1 << self.degree) - 1))
    }

    pub fn insert(&self, i: usize) -> IndexSet {
        assert!(i < self.degree);
        IndexSet::from_mask(self.degree, self.mask | 1 << i)
    }

    /// Ascending members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree).filter(|&i| self.mask >> i & 1 == 1)
    }

    pub fn min(&self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize)
        }
    }

    /// True when every member is even.
    pub fn is_even(&self) -> bool {
        self.iter().all(|i| i % 2 == 0)
    }

    /// `I/2 = {i/2 : i in I}` inside `[n/2-1]_0`; requires an even set
    /// and even degree.
    pub fn halve(&self) -> IndexSet {
        assert!(self.is_even() && self.degree.is_multiple_of(2));
        IndexSet::new(self.degree / 2, self.iter().map(|i| i / 2)).unwrap()
    }

    /// All `2^n` subsets of `[n-1]_0` in mask order.
    pub fn all(degree: usize) -> impl Iterator<Item = IndexSet> {
        (0u64..1 << degree).map(move |mask| IndexSet::from_mask(degree, mask))
    }
}

impl fmt::Display for IndexSet {
    /// Comma-separated members; empty string for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// The two chessboard colourings: `Even` means every nonzero entry sits
/// at `i + j` even (equivalently `|w(j)| = j mod 2` for all `j`), `Odd`
/// the opposite colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChessboardKind {
    Even,
    Odd,
}

/// `Some(kind)` when all nonzero entries share one colour, `None` for
/// mixed elements.
pub fn chessboard_kind(w: &SignedPermutation) -> Option<ChessboardKind> {
    let win = w.window();
    let all_even = win
        .iter()
        .enumerate()
        .all(|(pos, &v)| (v.unsigned_abs() as usize + pos + 1).is_multiple_of(2));
    if all_even {
        return Some(ChessboardKind::Even);
    }
    let all_odd = win
        .iter()
        .enumerate()
        .all(|(pos, &v)| (v.unsigned_abs() as usize + pos + 1) % 2 == 1);
    if all_odd {
        return Some(ChessboardKind::Odd);
    }
    None
}

pub fn is_even_chessboard(w: &SignedPermutation) -> bool {
    chessboard_kind(w) == Some(ChessboardKind::Even)
}

/// The element families whose membership the generating-function
/// machinery cares about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Diagonal matrices: `|w(i)| = i` for all `i`.
    Diagonal,
    /// Strictly increasing window, i.e. `D(w) ⊆ {0}`.
    Ascending,
    /// Both factors of `w = w^{[n-1]} w_{[n-1]}` are even chessboard.
    EvenFactors,
    /// Both factors are chessboard of one common colour.
    MonochromeFactors,
}

pub fn is_diagonal(w: &SignedPermutation) -> bool {
    w.window()
        .iter()
        .enumerate()
        .all(|(pos, &v)| v.unsigned_abs() as usize == pos + 1)
}

pub fn is_ascending(w: &SignedPermutation) -> bool {
    w.window().windows(2).all(|p| p[0] < p[1])
}

/// The type-A parabolic subset `[n-1] = {1, ..., n-1}`.
fn type_a_subset(n: usize) -> IndexSet {
    IndexSet::new(n, 1..n).unwrap()
}

pub fn membership(w: &SignedPermutation, family: Family) -> bool {
    match family {
        Family::Diagonal => is_diagonal(w),
        Family::Ascending => is_ascending(w),
        Family::EvenFactors => {
            let f = parabolic_decompose(w, &type_a_subset(w.n()));
            is_even_chessboard(&f.quotient) && is_even_chessboard(&f.subgroup_part)
        }
        Family::MonochromeFactors => {
            let f = parabolic_decompose(w, &type_a_subset(w.n()));
            match (
                chessboard_kind(&f.quotient),
                chessboard_kind(&f.subgroup_part),
            ) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        }
    }
}

/// An odd sandwich `(r, h)` in the row pattern: an odd-length block of
/// rows `r+1..=r+h` all carrying the opposite sign of row `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddSandwich {
    /// First row of the configuration, in `[n-2]`.
    pub r: usize,
    /// Odd gap length.
    pub h: usize,
    /// Proper: rows `r` and `r+h+1` agree and the block between differs.
    /// Degenerate: only at `r = 1`, the block agrees with row 1 and row
    /// `h+2` differs.
    pub proper: bool,
}

/// All odd sandwiches, sorted by `r`. For each `r` at most one `h` can
/// satisfy either condition, and the two conditions exclude each other.
pub fn odd_sandwiches(w: &SignedPermutation) -> Vec<OddSandwich> {
    let n = w.n();
    let rho = row_pattern(w);
    let sign = |i: usize| rho[i - 1];
    let mut out = Vec::new();
    for r in 1..=n.saturating_sub(2) {
        let mut h = 1;
        while r + h < n {
            let proper = sign(r) == sign(r + h + 1) && (1..=h).all(|i| sign(r) != sign(r + i));
            let degenerate =
                r == 1 && (1..=h).all(|i| sign(1) == sign(1 + i)) && sign(1) != sign(h + 2);
            if h % 2 == 1 {
                assert!(!(proper && degenerate));
                if proper || degenerate {
                    out.push(OddSandwich { r, h, proper });
                }
            }
            h += 1;
        }
    }
    out.sort_by_key(|s| (s.r, s.h));
    out
}

/// The sandwich of minimal `r`, unique when any exists.
pub fn topmost_sandwich(w: &SignedPermutation) -> Option<OddSandwich> {
    let all = odd_sandwiches(w);
    let first = *all.first()?;
    assert!(
        all.iter().filter(|s| s.r == first.r).count() == 1,
        "topmost odd sandwich must be unique"
    );
    Some(first)
}

/// Structural test for ascending even chessboard elements: every column
/// pair `(2j-1, 2j)` has rows an odd distance apart, with either a
/// positive gap sandwiching only negative rows (when `w(2j) > 0`) or
/// the two rows adjacent in reverse order (when `w(2j) < 0`).
pub fn ascending_structure_check(w: &SignedPermutation) -> Result<bool, Error> {
    if !is_even_chessboard(w) || !is_ascending(w) {
        return Err(Error::NotInDomain {
            operation: "ascending_structure_check",
            window: w.to_string(),
        });
    }
    let n = w.n();
    let win = w.window();
    let winv = w.inverse();
    let row = |col: usize| win[col - 1].unsigned_abs() as usize;
    for j in 1..=n / 2 {
        let (lo, hi) = (row(2 * j - 1), row(2 * j));
        if (lo as i64 - hi as i64) % 2 == 0 {
            return Ok(false);
        }
        if win[2 * j - 1] > 0 {
            if hi <= lo {
                return Ok(false);
            }
            for e in lo + 1..hi {
                if winv.window()[e - 1] > 0 {
                    return Ok(false);
                }
            }
        } else if lo != hi + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Iterator over all `2^n n!` elements of `B_n`, lexicographic over
/// (unsigned permutation, sign vector).
pub struct GroupIter {
    perm: Vec<i32>,
    mask: u32,
    n: usize,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        let n = self.n;
        let window: Vec<i32> = (0..n)
            .map(|i| {
                if self.mask >> (n - 1 - i) & 1 == 1 {
                    -self.perm[i]
                } else {
                    self.perm[i]
                }
            })
            .collect();
        // advance: sign vector first, then the unsigned permutation
        self.mask += 1;
        if self.mask == 1 << n {
            self.mask = 0;
            if !next_permutation(&mut self.perm) {
                self.done = true;
            }
        }
        Some(SignedPermutation::from_window(window).unwrap())
    }
}

fn next_permutation(p: &mut [i32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn enumerate_group(n: usize) -> GroupIter {
    assert!((1..=16).contains(&n));
    GroupIter {
        perm: (1..=n as i32).collect(),
        mask: 0,
        n,
        done: false,
    }
}

/// The sub-stream of `enumerate_group(n)` with `D(w) ⊆ I`.
pub fn enumerate_descent_bounded(
    n: usize,
    subset: &IndexSet,
) -> impl Iterator<Item = SignedPermutation> {
    let subset = subset.clone();
    enumerate_group(n).filter(move |w| descent_set(w).is_subset_of(&subset))
}

/// The unsigned permutations inside `B_n`, in lexicographic order.
pub fn enumerate_symmetric_group(n: usize) -> impl Iterator<Item = SignedPermutation> {
    assert!((1..=16).contains(&n));
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = SignedPermutation::from_window(perm.clone()).unwrap();
        if !next_permutation(&mut perm) {
            done = true;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn index_set_basics() {
        let s = IndexSet::new(5, [0, 2, 4]).unwrap();
        assert_eq!(s.to_string(), "0,2,4");
        assert_eq!(IndexSet::parse(5, "0, 2,4").unwrap(), s);
        assert_eq!(IndexSet::parse(5, "").unwrap(), IndexSet::empty(5));
        assert!(IndexSet::parse(3, "0,7").is_err());
        assert!(IndexSet::parse(3, "0,x").is_err());
        assert!(s.is_even());
        assert_eq!(s.complement().to_string(), "1,3");
        assert!(IndexSet::new(4, [1])
            .unwrap()
            .is_subset_of(&IndexSet::full(4)));
        assert_eq!(IndexSet::full(3).mask(), 0b111);
        assert_eq!(s.min(), Some(0));
        assert_eq!(IndexSet::empty(2).min(), None);
        let even = IndexSet::new(6, [0, 2]).unwrap();
        assert_eq!(even.halve(), IndexSet::new(3, [0, 1]).unwrap());
    }

    #[test]
    fn chessboard_classification() {
        assert_eq!(
            chessboard_kind(&w("[1,-4,-3,2]")),
            Some(ChessboardKind::Even)
        );
        assert_eq!(chessboard_kind(&w("[-2,1]")), Some(ChessboardKind::Odd));
        assert_eq!(chessboard_kind(&w("[1,3,2]")), None);
        // the chessboard elements form a group; for even degree the even
        // ones have index 2, for odd degree the odd colour is empty
        for n in 2..=5 {
            let cb: Vec<_> = enumerate_group(n)
                .filter(|x| chessboard_kind(x).is_some())
                .collect();
            let even = cb.iter().filter(|x| is_even_chessboard(x)).count();
            if n % 2 == 0 {
                assert_eq!(cb.len(), 2 * even);
            } else {
                assert_eq!(cb.len(), even);
            }
            let m1 = n.div_ceil(2);
            let m2 = n / 2;
            let fact = |k: usize| (1..=k).product::<usize>();
            assert_eq!(even, (1 << n) * fact(m1) * fact(m2));
            for u in cb.iter().step_by(7) {
                for v in cb.iter().step_by(5) {
                    assert!(chessboard_kind(&u.compose(v)).is_some());
                }
                assert!(chessboard_kind(&u.inverse()).is_some());
            }
        }
    }

    #[test]
    fn family_memberships() {
        assert!(membership(&w("[1,-2]"), Family::MonochromeFactors));
        assert!(!membership(&w("[1,-2]"), Family::EvenFactors));
        assert!(membership(&w("[-5,2,1,-4,3]"), Family::EvenFactors));
        assert!(membership(&w("[-1,-2,-3,-4]"), Family::Diagonal));
        assert!(membership(&w("[-2,-1,3,4]"), Family::Ascending));
        assert!(!membership(&w("[2,-1,3,4]"), Family::Ascending));
        // ascending == descents within {0}
        for x in enumerate_group(4) {
            let asc = descent_set(&x).is_subset_of(&IndexSet::new(4, [0]).unwrap());
            assert_eq!(asc, membership(&x, Family::Ascending), "{x}");
        }
    }

    #[test]
    fn sandwich_detection() {
        let top = topmost_sandwich(&w("[3,-2,-1]")).unwrap();
        assert_eq!((top.r, top.h), (1, 1));
        assert!(!top.proper);
        assert!(odd_sandwiches(&SignedPermutation::identity(4)).is_empty());
        assert!(topmost_sandwich(&SignedPermutation::identity(4)).is_none());
        // on even chessboard elements: no sandwich <=> monochrome factors
        for n in 2..=6 {
            for x in enumerate_group(n).filter(is_even_chessboard) {
                assert_eq!(
                    odd_sandwiches(&x).is_empty(),
                    membership(&x, Family::MonochromeFactors),
                    "{x}"
                );
            }
        }
    }

    #[test]
    fn monochrome_vs_even_factors() {
        // equal classes for odd n; equal within even descent classes for even n
        for n in 2..=6usize {
            for x in enumerate_group(n).filter(is_even_chessboard) {
                let m = membership(&x, Family::MonochromeFactors);
                let e = membership(&x, Family::EvenFactors);
                if n % 2 == 1 || descent_set(&x).is_even() {
                    assert_eq!(m, e, "{x}");
                }
            }
        }
    }

    #[test]
    fn block_structure_of_even_descent_chessboard_permutations() {
        use crate::stats::length_stats;
        for n in [2usize, 4, 6] {
            for x in enumerate_symmetric_group(n) {
                if chessboard_kind(&x).is_none() || !descent_set(&x).is_even() {
                    continue;
                }
                assert!(is_even_chessboard(&x), "{x}");
                let (a, b) = x.sigma_split();
                assert_eq!(a, b, "{x}");
                assert_eq!(length_stats(&x).0, 4 * length_stats(&a).0, "{x}");
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        use crate::stats::length_stats;
        assert_eq!(enumerate_group(2).count(), 8);
        assert_eq!(enumerate_group(4).count(), 384);
        let first: Vec<_> = enumerate_group(2).take(4).map(|x| x.to_string()).collect();
        assert_eq!(first, vec!["[1,2]", "[1,-2]", "[-1,2]", "[-1,-2]"]);
        let asc: Vec<_> = enumerate_descent_bounded(2, &IndexSet::new(2, [0]).unwrap()).collect();
        assert_eq!(
            asc,
            vec![w("[1,2]"), w("[-1,2]"), w("[-2,1]"), w("[-2,-1]")]
        );
        let only_id: Vec<_> = enumerate_descent_bounded(3, &IndexSet::empty(3)).collect();
        assert_eq!(only_id, vec![SignedPermutation::identity(3)]);
        assert_eq!(enumerate_symmetric_group(4).count(), 24);
        assert!(enumerate_symmetric_group(4).all(|x| length_stats(&x).1 == 0));
    }

    #[test]
    fn ascending_structure() {
        // pair one is the adjacent negative case, pair two a positive
        // gap sandwiching two negative rows
        assert_eq!(ascending_structure_check(&w("[-3,-2,-1,4]")), Ok(true));
        assert_eq!(
            ascending_structure_check(&SignedPermutation::identity(4)),
            Ok(true)
        );
        assert!(ascending_structure_check(&w("[2,1]")).is_err());
        // outside the even chessboard class the check is undefined
        assert!(ascending_structure_check(&w("[-2,-1,3,4]")).is_err());
        // every ascending even chessboard element passes
        for n in 2..=6 {
            for x in enumerate_group(n) {
                if is_even_chessboard(&x) && is_ascending(&x) {
                    assert_eq!(ascending_structure_check(&x), Ok(true), "{x}");
                }
            }
        }
    }
}
