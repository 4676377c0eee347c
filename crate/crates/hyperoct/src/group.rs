//! Elements of the hyperoctahedral group `B_n` in window notation,
//! group operations, Coxeter generators, the odd/even column split and
//! its merge inverse, and parabolic decomposition.

use crate::classes::IndexSet;
use crate::matrix::ColumnMatrix;
use crate::Error;
use std::fmt;
use std::str::FromStr;

/// A signed permutation `w` of `{-n,...,n}` with `w(-i) = -w(i)`,
/// stored as the window `[w(1),...,w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Validates and wraps a window. Entries must be nonzero, bounded by
    /// the degree in absolute value, and hit each absolute value once.
    pub fn from_window(window: Vec<i32>) -> Result<Self, Error> {
        if window.is_empty() {
            return Err(Error::EmptyWindow);
        }
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (pos, &value) in window.iter().enumerate() {
            if value == 0 {
                return Err(Error::ZeroEntry { position: pos + 1 });
            }
            let a = value.unsigned_abs() as usize;
            if a > n {
                return Err(Error::EntryOutOfRange {
                    position: pos + 1,
                    value,
                    degree: n,
                });
            }
            if seen[a] {
                return Err(Error::RepeatedValue { value });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// Coxeter generator: `s_0 = [-1,2,...,n]`, and `s_i` swaps
    /// positions `i` and `i+1` for `i` in `1..n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i < n, "generator index {i} out of range for degree {n}");
        let mut window: Vec<i32> = (1..=n as i32).collect();
        if i == 0 {
            window[0] = -1;
        } else {
            window.swap(i - 1, i);
        }
        SignedPermutation { window }
    }

    /// The longest element `w_0 = [-1,-2,...,-n]`.
    pub fn longest_element(n: usize) -> Self {
        assert!(n >= 1);
        SignedPermutation {
            window: (1..=n as i32).map(|k| -k).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(x)` for any `x` in `-n..=n`, using `w(0) = 0`, `w(-i) = -w(i)`.
    pub fn image(&self, x: i32) -> i32 {
        let n = self.window.len() as i32;
        assert!(x.abs() <= n, "argument {x} out of range");
        if x == 0 {
            0
        } else if x > 0 {
            self.window[(x - 1) as usize]
        } else {
            -self.window[(-x - 1) as usize]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Composition `(uv)(x) = u(v(x))`; matches the product of the
    /// signed permutation matrices. Panics on degree mismatch.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "degree mismatch in compose");
        SignedPermutation {
            window: other.window.iter().map(|&v| self.image(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i32; n];
        for (pos, &value) in self.window.iter().enumerate() {
            let i = pos as i32 + 1;
            window[(value.unsigned_abs() - 1) as usize] = if value > 0 { i } else { -i };
        }
        SignedPermutation { window }
    }

    /// The signed permutation matrix: sign of `w(j)` at row `|w(j)|`,
    /// column `j`.
    pub fn matrix_view(&self) -> ColumnMatrix {
        let n = self.n();
        let mut m = ColumnMatrix::zero(n, n);
        for (pos, &value) in self.window.iter().enumerate() {
            m.set(value.unsigned_abs() as usize, pos + 1, value.signum() as i8);
        }
        m
    }

    /// Row `i` holds its nonzero entry in column `j(i) = |w^{-1}(i)|`.
    pub fn col_of_row(&self, i: usize) -> usize {
        assert!((1..=self.n()).contains(&i));
        self.inverse().window[i - 1].unsigned_abs() as usize
    }

    /// Splits into the odd-column and even-column parts: the entry of
    /// part one at position `a` keeps the sign of `w(2a-1)` and takes as
    /// absolute value the rank of `|w(2a-1)|` among the odd-column
    /// absolute values; part two is the even-column analogue. On even
    /// chessboard elements this is the group isomorphism onto
    /// `B_{ceil(n/2)} x B_{floor(n/2)}`.
    pub fn sigma_split(&self) -> (SignedPermutation, SignedPermutation) {
        let n = self.n();
        let part = |start: usize| -> SignedPermutation {
            let vals: Vec<i32> = (start..=n).step_by(2).map(|c| self.window[c - 1]).collect();
            let mut order: Vec<usize> = (0..vals.len()).collect();
            order.sort_unstable_by_key(|&a| vals[a].abs());
            let mut rank = vec![0i32; vals.len()];
            for (r, &a) in order.iter().enumerate() {
                rank[a] = r as i32 + 1;
            }
            SignedPermutation {
                window: (0..vals.len())
                    .map(|a| if vals[a] > 0 { rank[a] } else { -rank[a] })
                    .collect(),
            }
        };
        (part(1), part(2))
    }

    /// Interleaves two parts into the unique even chessboard element
    /// mapping onto them: `w(2a-1) = sgn(w1(a)) (2|w1(a)|-1)` and
    /// `w(2a) = sgn(w2(a)) 2|w2(a)|`. Degrees must satisfy
    /// `m1 ∈ {m2, m2+1}`.
    pub fn star_merge(w1: &Self, w2: &Self) -> Result<Self, Error> {
        let (m1, m2) = (w1.n(), w2.n());
        if m1 != m2 && m1 != m2 + 1 {
            return Err(Error::MergeDegrees {
                left: m1,
                right: m2,
            });
        }
        let n = m1 + m2;
        let mut window = vec![0i32; n];
        for (a, &v) in w1.window.iter().enumerate() {
            window[2 * a] = v.signum() * (2 * v.abs() - 1);
        }
        for (a, &v) in w2.window.iter().enumerate() {
            window[2 * a + 1] = v.signum() * 2 * v.abs();
        }
        Ok(SignedPermutation { window })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[a1,a2,...,an]"`; whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|u| u.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("window must look like [a1,...,an]: {s:?}")))?;
        if inner.trim().is_empty() {
            return Err(Error::EmptyWindow);
        }
        let window = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {:?}", tok.trim())))
            })
            .collect::<Result<Vec<i32>, Error>>()?;
        SignedPermutation::from_window(window)
    }
}

/// Result of the parabolic decomposition `w = w^I w_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicFactorization {
    pub whole: SignedPermutation,
    pub subset: IndexSet,
    /// Minimal coset representative `w^I`; has no descent inside `I`.
    pub quotient: SignedPermutation,
    /// The factor `w_I` in the subgroup generated by `{s_i : i in I}`.
    pub subgroup_part: SignedPermutation,
}

/// Greedy right-descent stripping: repeatedly divide off a generator
/// `s_i` with `i in I` that shortens `w`, accumulating it on the left of
/// the subgroup part. Terminates with the minimal coset representative
/// after `l(w_I)` steps and makes the Coxeter length additive over the
/// two factors.
pub fn parabolic_decompose(w: &SignedPermutation, subset: &IndexSet) -> ParabolicFactorization {
    let n = w.n();
    assert_eq!(subset.degree(), n, "subset degree mismatch");
    let mut quotient = w.clone();
    let mut part = SignedPermutation::identity(n);
    'outer: loop {
        let mut prev = 0i32;
        for i in 0..n {
            let cur = quotient.window[i];
            if prev > cur && subset.contains(i) {
                // right descent at i inside I
                let s = SignedPermutation::generator(n, i);
                quotient = quotient.compose(&s);
                part = s.compose(&part);
                continue 'outer;
            }
            prev = cur;
        }
        break;
    }
    ParabolicFactorization {
        whole: w.clone(),
        subset: subset.clone(),
        quotient,
        subgroup_part: part,
    }
}
