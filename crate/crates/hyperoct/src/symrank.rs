//! Brute-force census of symmetric matrices over a prime field by rank,
//! and the cross-check against the product formula polynomials: the
//! number of symmetric `n x n` matrices of rank `n-i` over `F_q` equals
//! `q^(C(n+1,2) - C(i+1,2)) f_{n,{i}}(1/q)`.

use crate::classes::IndexSet;
use crate::genfun::VerificationReport;
use crate::poly::{eval_reciprocal_power, f_poly, IntPolynomial};
use crate::Error;
use std::time::Instant;

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a matrix over `F_p` by fraction-free elimination: rows below
/// the pivot are replaced by `pivot * row - entry * pivot_row`, which
/// needs no inverses since `p` is prime.
fn rank_mod_p(m: &mut [u64], n: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        for k in 0..n {
            m.swap(rank * n + k, pivot * n + k);
        }
        let g = m[rank * n + col];
        for r in rank + 1..n {
            let f = m[r * n + col];
            if f == 0 {
                continue;
            }
            for k in col..n {
                m[r * n + k] = (g * m[r * n + k] + (p - f) * m[rank * n + k]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn upper_triangle_size(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Number of symmetric matrices to enumerate: `q^(n(n+1)/2)`.
pub fn census_size(n: usize, q: u64) -> u128 {
    (q as u128).pow(upper_triangle_size(n) as u32)
}

/// Counts symmetric `n x n` matrices over `F_q` by rank, enumerating
/// the upper-triangle digit vector odometer-style. `counts[r]` is the
/// number of matrices of rank `r`. Refuses (before doing any work) when
/// the census would exceed `budget` matrices.
pub fn sym_rank_counts(n: usize, q: u64, budget: u64) -> Result<Vec<u64>, Error> {
    sym_rank_counts_jobs(n, q, budget, 1)
}

/// Parallel variant: the linear index range is cut into `jobs` chunks;
/// per-rank counts add up independently of the partition.
pub fn sym_rank_counts_jobs(n: usize, q: u64, budget: u64, jobs: usize) -> Result<Vec<u64>, Error> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    assert!(n >= 1);
    let total = census_size(n, q);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: total,
            budget,
        });
    }
    let total = total as u64;
    let jobs = jobs.max(1).min(total as usize);
    let chunk = total.div_ceil(jobs as u64);
    let ranges: Vec<(u64, u64)> = (0..jobs as u64)
        .map(|t| (t * chunk, ((t + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    let parts: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || count_range(n, q, lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut counts = vec![0u64; n + 1];
    for part in parts {
        for (r, c) in part.into_iter().enumerate() {
            counts[r] += c;
        }
    }
    Ok(counts)
}

fn count_range(n: usize, q: u64, lo: u64, hi: u64) -> Vec<u64> {
    let m = upper_triangle_size(n);
    // seed the digit vector from the linear index, least significant first
    let mut digits = vec![0u64; m];
    let mut rest = lo;
    for d in digits.iter_mut() {
        *d = rest % q;
        rest /= q;
    }
    let mut counts = vec![0u64; n + 1];
    let mut mat = vec![0u64; n * n];
    let mut scratch = vec![0u64; n * n];
    for _ in lo..hi {
        let mut t = 0;
        for i in 0..n {
            for j in i..n {
                mat[i * n + j] = digits[t];
                mat[j * n + i] = digits[t];
                t += 1;
            }
        }
        scratch.copy_from_slice(&mat);
        counts[rank_mod_p(&mut scratch, n, q)] += 1;
        // odometer increment
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    counts
}

/// Number of symmetric matrices of rank `n - i` over `F_q`.
pub fn sym_rank_bruteforce(n: usize, q: u64, i: usize, budget: u64) -> Result<u64, Error> {
    assert!(i <= n);
    Ok(sym_rank_counts(n, q, budget)?[n - i])
}

/// The formula side: `q^(C(n+1,2) - C(i+1,2)) f_{n,{i}}(1/q)` for
/// `i < n`; the rank-zero case `i = n` counts the zero matrix alone, so
/// the expected value is taken as the explicit base case 1 rather than
/// extrapolating the formula.
pub fn sym_rank_formula(n: usize, q: u64, i: usize) -> i128 {
    assert!(i <= n);
    if i == n {
        return 1;
    }
    let subset = IndexSet::new(n, [i]).unwrap();
    let e = (upper_triangle_size(n) - upper_triangle_size(i)) as u32;
    eval_reciprocal_power(&f_poly(n, &subset), q, e)
}

/// Brute force against the formula, packaged as a report with both
/// counts as constant polynomials.
pub fn sym_rank_check(
    n: usize,
    q: u64,
    i: usize,
    budget: u64,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let brute = sym_rank_bruteforce(n, q, i, budget)?;
    let formula = sym_rank_formula(n, q, i);
    let subset = if i < n {
        IndexSet::new(n, [i]).unwrap()
    } else {
        IndexSet::empty(n)
    };
    Ok(VerificationReport::new(
        format!("symrank q={q} i={i}"),
        n,
        subset,
        IntPolynomial::monomial(brute as i128, 0),
        IntPolynomial::monomial(formula, 0),
        census_size(n, q) as u64,
        start.elapsed(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(7));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(9));
        assert!(matches!(
            sym_rank_counts(2, 4, 1 << 30),
            Err(Error::NotPrime { q: 4 })
        ));
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            sym_rank_counts(4, 5, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hand_counts() {
        // nonzero scalars over F_5
        assert_eq!(sym_rank_bruteforce(1, 5, 0, 1 << 20).unwrap(), 4);
        // 2x2 symmetric rank one over F_2
        assert_eq!(sym_rank_bruteforce(2, 2, 1, 1 << 20).unwrap(), 3);
        assert_eq!(sym_rank_counts(2, 2, 1 << 20).unwrap(), vec![1, 3, 4]);
        assert_eq!(
            sym_rank_counts(3, 3, 1 << 20).unwrap(),
            vec![1, 26, 234, 468]
        );
    }

    #[test]
    fn formula_matches_brute_force_small() {
        for n in 1..=3 {
            for q in [2u64, 3, 5] {
                let counts = sym_rank_counts(n, q, 1 << 26).unwrap();
                assert_eq!(counts.iter().sum::<u64>() as u128, census_size(n, q));
                for i in 0..=n {
                    assert_eq!(
                        counts[n - i] as i128,
                        sym_rank_formula(n, q, i),
                        "n={n} q={q} i={i}"
                    );
                    assert!(sym_rank_check(n, q, i, 1 << 26).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn parallel_census_matches() {
        let a = sym_rank_counts(3, 3, 1 << 26).unwrap();
        for jobs in [2, 5, 16] {
            assert_eq!(sym_rank_counts_jobs(3, 3, 1 << 26, jobs).unwrap(), a);
        }
    }
}
