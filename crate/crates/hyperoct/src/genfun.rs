//! Signed generating functions over element sets, the one-pass descent
//! table with its subset-sum transform, and the batch verifiers for the
//! conjectured product formula and the supporting-set identities.

use crate::classes::{
    chessboard_kind, enumerate_descent_bounded, enumerate_group, enumerate_symmetric_group,
    is_diagonal, is_even_chessboard, membership, ChessboardKind, Family, IndexSet,
};
use crate::group::SignedPermutation;
use crate::poly::{f_poly, q_multinomial, IntPolynomial};
use crate::stats::{abc_window, descent_set, length_stats};
use crate::Error;
use std::fmt;
use std::time::{Duration, Instant};

/// Which statistic supplies the sign `(-1)^stat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignStat {
    Length,
    Negatives,
}

/// Which statistic supplies the exponent of `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightStat {
    /// The statistic `L`.
    LStat,
    /// The Coxeter length.
    Length,
    /// `length_coeff * l + neg_coeff * neg`; must stay nonnegative.
    Affine { length_coeff: i64, neg_coeff: i64 },
}

/// `sum (-1)^{sign(w)} X^{weight(w)}` over the stream.
pub fn signed_genfun(
    elements: impl Iterator<Item = SignedPermutation>,
    sign: SignStat,
    weight: WeightStat,
) -> Result<IntPolynomial, Error> {
    let mut acc = IntPolynomial::zero();
    for w in elements {
        let (_, neg, _, length) = length_stats(&w);
        let s = match sign {
            SignStat::Length => length,
            SignStat::Negatives => neg,
        };
        let e: i64 = match weight {
            WeightStat::LStat => {
                let (a, b, c) = abc_window(&w);
                (a + b + 2 * c) as i64
            }
            WeightStat::Length => length as i64,
            WeightStat::Affine {
                length_coeff,
                neg_coeff,
            } => length_coeff * length as i64 + neg_coeff * neg as i64,
        };
        if e < 0 {
            return Err(Error::NegativeWeight {
                window: w.to_string(),
                weight: e,
            });
        }
        acc.add_term(if s % 2 == 0 { 1 } else { -1 }, e as usize);
    }
    Ok(acc)
}

/// One pass over `B_n` bucketed by exact descent set: bucket `J` holds
/// `sum_{D(w)=J} (-1)^{l(w)} X^{L(w)}` and the element count. Class
/// sums over any `B_n^{I^c}` are then subset sums, so all `2^n`
/// descent classes cost a single group traversal.
#[derive(Debug, Clone)]
pub struct DescentTable {
    n: usize,
    polys: Vec<IntPolynomial>,
    counts: Vec<u64>,
}

impl DescentTable {
    pub fn build(n: usize) -> Self {
        Self::build_jobs(n, 1)
    }

    /// Same table, with the unsigned permutations dealt out to `jobs`
    /// worker threads. Bucket merging is coefficientwise addition, so
    /// the result does not depend on the partition.
    pub fn build_jobs(n: usize, jobs: usize) -> Self {
        let jobs = jobs.max(1);
        if jobs == 1 {
            let mut table = DescentTable::empty(n);
            for w in enumerate_group(n) {
                table.absorb(&w);
            }
            return table;
        }
        let perms: Vec<SignedPermutation> = enumerate_symmetric_group(n).collect();
        let chunk = perms.len().div_ceil(jobs);
        let parts: Vec<DescentTable> = std::thread::scope(|scope| {
            let handles: Vec<_> = perms
                .chunks(chunk)
                .map(|slice| {
                    scope.spawn(move || {
                        let mut local = DescentTable::empty(n);
                        for p in slice {
                            for mask in 0u32..(1 << n) {
                                let window: Vec<i32> = p
                                    .window()
                                    .iter()
                                    .enumerate()
                                    .map(
                                        |(i, &v)| {
                                            if mask >> (n - 1 - i) & 1 == 1 {
                                                -v
                                            } else {
                                                v
                                            }
                                        },
                                    )
                                    .collect();
                                local.absorb(&SignedPermutation::from_window(window).unwrap());
                            }
                        }
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut table = DescentTable::empty(n);
        for part in parts {
            for (i, p) in part.polys.iter().enumerate() {
                table.polys[i] = table.polys[i].add(p);
                table.counts[i] += part.counts[i];
            }
        }
        table
    }

    fn empty(n: usize) -> Self {
        assert!((1..=16).contains(&n));
        DescentTable {
            n,
            polys: vec![IntPolynomial::zero(); 1 << n],
            counts: vec![0; 1 << n],
        }
    }

    fn absorb(&mut self, w: &SignedPermutation) {
        let mask = descent_set(w).mask() as usize;
        let (_, _, _, length) = length_stats(w);
        let (a, b, c) = abc_window(w);
        let l_stat = (a + b + 2 * c) as usize;
        self.polys[mask].add_term(if length % 2 == 0 { 1 } else { -1 }, l_stat);
        self.counts[mask] += 1;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `sum_{J ⊆ I} g_J`, the signed sum over the descent class
    /// `{w : D(w) ⊆ I}`, by direct submask iteration.
    pub fn class_sum(&self, subset: &IndexSet) -> IntPolynomial {
        assert_eq!(subset.degree(), self.n);
        let top = subset.mask() as usize;
        let mut acc = IntPolynomial::zero();
        let mut sub = top;
        loop {
            acc = acc.add(&self.polys[sub]);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        acc
    }

    pub fn class_count(&self, subset: &IndexSet) -> u64 {
        let top = subset.mask() as usize;
        let mut acc = 0;
        let mut sub = top;
        loop {
            acc += self.counts[sub];
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        acc
    }

    /// All `2^n` class sums at once via the in-place subset-sum (zeta)
    /// transform over the boolean lattice.
    pub fn all_class_sums(&self) -> Vec<IntPolynomial> {
        let mut z = self.polys.clone();
        for bit in 0..self.n {
            let step = 1usize << bit;
            for mask in 0..z.len() {
                if mask & step != 0 {
                    z[mask] = z[mask].add(&z[mask ^ step]);
                }
            }
        }
        z
    }

    /// The full-group sum, equal to the class sum at `I = [n-1]_0`.
    pub fn full_sum(&self) -> IntPolynomial {
        self.class_sum(&IndexSet::full(self.n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
        }
    }
}

/// Outcome of one identity check: two polynomials computed along
/// independent routes, passing exactly when they agree coefficientwise.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub label: String,
    pub n: usize,
    pub subset: IndexSet,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub verdict: Verdict,
    pub element_count: u64,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        label: impl Into<String>,
        n: usize,
        subset: IndexSet,
        lhs: IntPolynomial,
        rhs: IntPolynomial,
        element_count: u64,
        elapsed: Duration,
    ) -> Self {
        let verdict = if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            label: label.into(),
            n,
            subset,
            lhs,
            rhs,
            verdict,
            element_count,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Compares the class sum `sum_{D(w) ⊆ I} (-1)^l X^L` with the product
/// formula polynomial `f_{n,I}`.
pub fn verify_conjecture(n: usize, subset: &IndexSet) -> VerificationReport {
    let start = Instant::now();
    let table = DescentTable::build(n);
    report_from_table(&table, subset, start)
}

fn report_from_table(
    table: &DescentTable,
    subset: &IndexSet,
    start: Instant,
) -> VerificationReport {
    let lhs = table.class_sum(subset);
    let rhs = f_poly(table.n(), subset);
    VerificationReport::new(
        "conjecture",
        table.n(),
        subset.clone(),
        lhs,
        rhs,
        table.class_count(subset),
        start.elapsed(),
    )
}

/// Runs the conjecture over all `2^n` subsets from one descent table.
pub fn verify_all(n: usize) -> Vec<VerificationReport> {
    verify_all_jobs(n, 1)
}

pub fn verify_all_jobs(n: usize, jobs: usize) -> Vec<VerificationReport> {
    let start = Instant::now();
    let table = DescentTable::build_jobs(n, jobs);
    let sums = table.all_class_sums();
    IndexSet::all(n)
        .map(|subset| {
            let lhs = sums[subset.mask() as usize].clone();
            let rhs = f_poly(n, &subset);
            let count = table.class_count(&subset);
            VerificationReport::new("conjecture", n, subset, lhs, rhs, count, start.elapsed())
        })
        .collect()
}

/// The supporting sets whose restriction identities can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportFamily {
    /// Even chessboard elements; valid for every subset.
    Chessboard,
    /// Diagonal matrices; valid for `I = [n-1]_0` only.
    Diagonal,
    /// Monochrome parabolic factors; needs `0 ∈ I`.
    Monochrome,
    /// Even chessboard parabolic factors; needs `0 ∈ I` and `n` odd or
    /// `I` even.
    EvenFactors,
}

impl SupportFamily {
    pub fn admissible(self, n: usize, subset: &IndexSet) -> bool {
        match self {
            SupportFamily::Chessboard => true,
            SupportFamily::Diagonal => *subset == IndexSet::full(n),
            SupportFamily::Monochrome => subset.contains(0),
            SupportFamily::EvenFactors => {
                subset.contains(0) && (n % 2 == 1 || subset.iter().all(|i| i % 2 == 0))
            }
        }
    }

    fn contains_element(self, w: &SignedPermutation) -> bool {
        match self {
            SupportFamily::Chessboard => is_even_chessboard(w),
            SupportFamily::Diagonal => is_diagonal(w),
            SupportFamily::Monochrome => membership(w, Family::MonochromeFactors),
            SupportFamily::EvenFactors => membership(w, Family::EvenFactors),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SupportFamily::Chessboard => "chessboard",
            SupportFamily::Diagonal => "diagonal",
            SupportFamily::Monochrome => "monochrome",
            SupportFamily::EvenFactors => "even-factors",
        }
    }
}

/// Checks that the signed sum over a descent class is supported on the
/// family: the full class sum must equal the sum restricted to the
/// family members, everything else cancelling in pairs.
pub fn support_check(
    n: usize,
    subset: &IndexSet,
    family: SupportFamily,
) -> Result<VerificationReport, Error> {
    if !family.admissible(n, subset) {
        return Err(Error::Parse(format!(
            "support family {} is not admissible for n={n}, I={{{subset}}}",
            family.name()
        )));
    }
    let start = Instant::now();
    let full = signed_genfun(
        enumerate_descent_bounded(n, subset),
        SignStat::Length,
        WeightStat::LStat,
    )?;
    let mut count = 0u64;
    let restricted = signed_genfun(
        enumerate_descent_bounded(n, subset)
            .filter(|w| family.contains_element(w))
            .inspect(|_| count += 1),
        SignStat::Length,
        WeightStat::LStat,
    )?;
    Ok(VerificationReport::new(
        format!("support:{}", family.name()),
        n,
        subset.clone(),
        full,
        restricted,
        count,
        start.elapsed(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityVariant {
    /// Unsigned length distribution over `{w in S_n : D(w) ⊆ I}`
    /// against the X-multinomial coefficient.
    Stanley,
    /// Signed `L` distribution over the same set against the halved
    /// multinomial in `X^2`; needs `n` and `I` even.
    EvenPerm,
}

/// The two symmetric-group cross-checks.
pub fn identity_check(
    n: usize,
    subset: &IndexSet,
    variant: IdentityVariant,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let stream = || enumerate_symmetric_group(n).filter(|w| descent_set(w).is_subset_of(subset));
    match variant {
        IdentityVariant::Stanley => {
            let mut count = 0u64;
            let lhs = signed_genfun(
                stream().inspect(|_| count += 1),
                SignStat::Length,
                WeightStat::Length,
            )
            .map(strip_signs)?;
            let rhs = q_multinomial(n, subset);
            Ok(VerificationReport::new(
                "identity:stanley",
                n,
                subset.clone(),
                lhs,
                rhs,
                count,
                start.elapsed(),
            ))
        }
        IdentityVariant::EvenPerm => {
            if !n.is_multiple_of(2) || !subset.is_even() {
                return Err(Error::Parse(format!(
                    "evenperm identity needs even n and even I, got n={n}, I={{{subset}}}"
                )));
            }
            let mut count = 0u64;
            let lhs = signed_genfun(
                stream().inspect(|_| count += 1),
                SignStat::Length,
                WeightStat::LStat,
            )?;
            let rhs = q_multinomial(n / 2, &subset.halve()).inflate(2);
            Ok(VerificationReport::new(
                "identity:evenperm",
                n,
                subset.clone(),
                lhs,
                rhs,
                count,
                start.elapsed(),
            ))
        }
    }
}

// signed_genfun with SignStat::Length and WeightStat::Length produces
// sum (-1)^l X^l; flipping the odd coefficients recovers sum X^l.
fn strip_signs(p: IntPolynomial) -> IntPolynomial {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 1 { -c } else { c })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// Auxiliary descent-class generating functions with the sign taken
/// from the negative-entry count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgVariant {
    /// `sum (-1)^neg X^{2l - neg}`.
    FEta0,
    /// `sum (-1)^neg X^{2l + neg}`.
    FEta1,
    /// `sum (-1)^neg X^l`.
    G,
}

pub fn fg_genfun(n: usize, subset: &IndexSet, variant: FgVariant) -> IntPolynomial {
    let weight = match variant {
        FgVariant::FEta0 => WeightStat::Affine {
            length_coeff: 2,
            neg_coeff: -1,
        },
        FgVariant::FEta1 => WeightStat::Affine {
            length_coeff: 2,
            neg_coeff: 1,
        },
        FgVariant::G => WeightStat::Length,
    };
    signed_genfun(
        enumerate_descent_bounded(n, subset),
        SignStat::Negatives,
        weight,
    )
    .expect("neg <= l keeps the exponent nonnegative")
}

/// The chessboard kind census, handy for reports: counts of even, odd
/// and mixed elements in `B_n`.
pub fn chessboard_census(n: usize) -> (u64, u64, u64) {
    let mut even = 0;
    let mut odd = 0;
    let mut mixed = 0;
    for w in enumerate_group(n) {
        match chessboard_kind(&w) {
            Some(ChessboardKind::Even) => even += 1,
            Some(ChessboardKind::Odd) => odd += 1,
            None => mixed += 1,
        }
    }
    (even, odd, mixed)
}
