//! Acceptance suite: each test exercises one acceptance criterion at
//! full stated scale and prints a single pass line (visible with
//! `cargo test --test acceptance -- --nocapture`). Every comparison is
//! exact; there are no tolerances anywhere.

use hyperoct::classes::{
    ascending_structure_check, chessboard_kind, enumerate_group, enumerate_symmetric_group,
    is_ascending, is_even_chessboard, membership, odd_sandwiches, Family, IndexSet,
};
use hyperoct::genfun::{identity_check, support_check, verify_all, IdentityVariant, SupportFamily};
use hyperoct::group::{parabolic_decompose, SignedPermutation};
use hyperoct::involutions::{check_involution, vee_involution, InvolutionKind};
use hyperoct::poly::{f_poly, q_factorial, q_int, q_multinomial, IntPolynomial};
use hyperoct::stats::{abc_stats, descent_set, l_direct, l_value, length_stats};
use hyperoct::symrank::{census_size, sym_rank_counts, sym_rank_formula};

fn w(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn set(n: usize, members: &[usize]) -> IndexSet {
    IndexSet::new(n, members.iter().copied()).unwrap()
}

fn even_subsets(n: usize) -> Vec<IndexSet> {
    IndexSet::all(n).filter(|s| s.is_even()).collect()
}

#[test]
fn criterion_1_conjecture_all_subsets_to_degree_7() {
    for n in 1..=7 {
        let reports = verify_all(n);
        assert_eq!(reports.len(), 1 << n);
        for r in &reports {
            assert!(
                r.passed(),
                "n={} I={{{}}}: lhs {} != rhs {}",
                r.n,
                r.subset,
                r.lhs,
                r.rhs
            );
        }
    }
    println!("criterion 1 PASS: class sums equal f polynomials for n <= 7, all subsets");
}

#[test]
fn criterion_2_worked_examples() {
    // [1,-4,-3,2]: L = 5 through (a,b,c) = (1,2,1)
    let x = w("[1,-4,-3,2]");
    assert_eq!(abc_stats(&x.matrix_view()), (1, 2, 1));
    assert_eq!(l_direct(&x), 5);
    assert_eq!(l_value(&x), 5);

    // [3,-2,-1]: (l, L, D) = (5, 3, {1}); its vee partner is [-1,-2,3]
    // with (4, 3, {0,1}) via the generator index 2
    let x = w("[3,-2,-1]");
    assert_eq!(length_stats(&x).3, 5);
    assert_eq!(l_value(&x), 3);
    assert_eq!(descent_set(&x), set(3, &[1]));
    let r = vee_involution(&x).unwrap();
    assert_eq!(r.output, w("[-1,-2,3]"));
    assert_eq!(r.pivot, vec![2]);
    assert_eq!(length_stats(&r.output).3, 4);
    assert_eq!(l_value(&r.output), 3);
    assert_eq!(descent_set(&r.output), set(3, &[0, 1]));

    // [-5,2,1,-4,3]: L = 7; factoring at I = {0,1} gives factors with
    // L values 7 and 2, so additivity fails here (7 != 7 + 2). The
    // quotient value is pinned by two independent routes.
    let x = w("[-5,2,1,-4,3]");
    assert_eq!(l_value(&x), 7);
    assert_eq!(l_direct(&x), 7);
    assert!(membership(&x, Family::EvenFactors));
    let f = parabolic_decompose(&x, &set(5, &[0, 1]));
    assert_eq!(f.quotient, w("[2,5,1,-4,3]"));
    assert_eq!(f.subgroup_part, w("[-2,1,3,4,5]"));
    assert_eq!(l_direct(&f.quotient), 7);
    assert_eq!(l_value(&f.quotient), 7);
    assert_eq!(l_value(&f.subgroup_part), 2);
    assert_ne!(
        l_value(&x),
        l_value(&f.quotient) + l_value(&f.subgroup_part),
        "additivity must fail at I = {{0,1}}"
    );

    // [1,-2]: monochrome but not even factors; additivity fails
    let x = w("[1,-2]");
    assert!(membership(&x, Family::MonochromeFactors));
    assert!(!membership(&x, Family::EvenFactors));
    let f = parabolic_decompose(&x, &set(2, &[1]));
    assert_eq!(l_value(&x), 2);
    assert_eq!(l_value(&f.quotient), 2);
    assert_eq!(l_value(&f.subgroup_part), 1);
    assert_ne!(
        l_value(&x),
        l_value(&f.quotient) + l_value(&f.subgroup_part)
    );

    println!("criterion 2 PASS: worked example suite exact");
}

#[test]
fn criterion_3_closed_forms() {
    // I = {0}: the odd factors (1)(3)...(n~)
    for n in 1..=7usize {
        let mut odd = IntPolynomial::one();
        let mut k = 1;
        while k <= n {
            odd = odd.mul(&q_int(k));
            k += 2;
        }
        let lhs = hyperoct::genfun::DescentTable::build(n).class_sum(&set(n, &[0]));
        assert_eq!(lhs, odd, "n={n} I={{0}}");
        assert_eq!(f_poly(n, &set(n, &[0])), odd);
    }
    // I = [n-1]_0: the full factorial
    for n in 1..=7usize {
        let table = hyperoct::genfun::DescentTable::build(n);
        assert_eq!(table.full_sum(), q_factorial(n), "n={n} full");
    }
    // even n, even I: multinomial in X^2 times a ratio of odd factors
    for n in [2usize, 4, 6] {
        let table = hyperoct::genfun::DescentTable::build(n);
        for subset in even_subsets(n) {
            let i1 = subset.min().unwrap_or(n);
            let mut num = IntPolynomial::one();
            let mut k = 1;
            while k < n {
                num = num.mul(&q_int(k));
                k += 2;
            }
            let mut den = IntPolynomial::one();
            let mut k = 1;
            while i1 >= 1 && k < i1 {
                den = den.mul(&q_int(k));
                k += 2;
            }
            let product = q_multinomial(n / 2, &subset.halve())
                .inflate(2)
                .mul(&num.exact_div(&den));
            let lhs = table.class_sum(&subset);
            assert_eq!(lhs, product, "n={n} I={{{subset}}} vs product");
            assert_eq!(
                f_poly(n, &subset),
                product,
                "n={n} I={{{subset}}} f vs product"
            );
        }
    }
    println!("criterion 3 PASS: closed forms for I={{0}}, full I, and even/even exact");
}

#[test]
fn criterion_4_supporting_sets() {
    for n in 1..=6 {
        for subset in IndexSet::all(n) {
            let r = support_check(n, &subset, SupportFamily::Chessboard).unwrap();
            assert!(r.passed(), "chessboard n={n} I={{{subset}}}");
            if subset.contains(0) {
                let r = support_check(n, &subset, SupportFamily::Monochrome).unwrap();
                assert!(r.passed(), "monochrome n={n} I={{{subset}}}");
                if n % 2 == 1 || subset.is_even() {
                    let r = support_check(n, &subset, SupportFamily::EvenFactors).unwrap();
                    assert!(r.passed(), "even-factors n={n} I={{{subset}}}");
                }
            }
        }
        let r = support_check(n, &IndexSet::full(n), SupportFamily::Diagonal).unwrap();
        assert!(r.passed(), "diagonal n={n}");
    }
    println!("criterion 4 PASS: supporting-set identities exact for n <= 6");
}

#[test]
fn criterion_5_involution_suites() {
    for n in 1..=5 {
        for kind in [
            InvolutionKind::Star,
            InvolutionKind::Circle,
            InvolutionKind::Vee,
        ] {
            match check_involution(kind, n) {
                Ok(_) => {}
                Err(counterexample) => panic!("{kind:?} n={n}: {counterexample}"),
            }
        }
    }
    println!("criterion 5 PASS: involution property suites exhaustive for n <= 5");
}

#[test]
fn criterion_6_structural_identities() {
    // statistic L: both characterisations and the split formula, all of B_n
    for n in 1..=5 {
        for x in enumerate_group(n) {
            let direct = l_direct(&x);
            assert_eq!(direct, l_value(&x), "{x}");
            let (w1, w2) = x.sigma_split();
            let split = length_stats(&w1).1 as i64 + length_stats(&x).3 as i64
                - length_stats(&w1).3 as i64
                - length_stats(&w2).3 as i64;
            assert_eq!(direct as i64, split, "{x}");
        }
    }
    // longest-element reflection for L
    for n in 1..=5 {
        let w0 = SignedPermutation::longest_element(n);
        let max = (n * (n + 1) / 2) as u64;
        assert_eq!(length_stats(&w0).3, (n * n) as u64);
        assert_eq!(l_value(&w0), max);
        for x in enumerate_group(n) {
            assert_eq!(l_value(&x.compose(&w0)), max - l_value(&x));
            assert_eq!(l_value(&w0.compose(&x)), max - l_value(&x));
        }
    }
    // length additivity over every parabolic factorization
    for n in 1..=5 {
        for subset in IndexSet::all(n) {
            for x in enumerate_group(n) {
                let f = parabolic_decompose(&x, &subset);
                assert_eq!(
                    length_stats(&x).3,
                    length_stats(&f.quotient).3 + length_stats(&f.subgroup_part).3
                );
            }
        }
    }
    // chessboard permutations of even descent type are doubled blocks
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
    // no odd sandwich exactly on the monochrome-factor elements
    for n in 2..=6 {
        for x in enumerate_group(n).filter(is_even_chessboard) {
            assert_eq!(
                odd_sandwiches(&x).is_empty(),
                membership(&x, Family::MonochromeFactors),
                "{x}"
            );
        }
    }
    // structure of ascending even chessboard elements
    for n in 2..=6 {
        for x in enumerate_group(n) {
            if is_even_chessboard(&x) && is_ascending(&x) {
                assert_eq!(ascending_structure_check(&x), Ok(true), "{x}");
            }
        }
    }
    // L additive at [n-1] on even-factor elements
    for n in 2..=6 {
        let type_a = IndexSet::new(n, 1..n).unwrap();
        for x in enumerate_group(n) {
            if membership(&x, Family::EvenFactors) {
                let f = parabolic_decompose(&x, &type_a);
                assert_eq!(
                    l_value(&x),
                    l_value(&f.quotient) + l_value(&f.subgroup_part),
                    "{x}"
                );
            }
        }
    }
    // second additivity: even n, even descent type, even prefix cut
    for n in [2usize, 4, 6] {
        for x in enumerate_group(n) {
            if !membership(&x, Family::EvenFactors) || !descent_set(&x).is_even() {
                continue;
            }
            let d = descent_set(&x);
            let bound = d.iter().find(|&i| i != 0).unwrap_or(n);
            let mut e = 2;
            while e < n && e <= bound {
                let prefix = IndexSet::new(n, 0..e).unwrap();
                let f = parabolic_decompose(&x, &prefix);
                assert_eq!(
                    l_value(&x),
                    l_value(&f.quotient) + l_value(&f.subgroup_part),
                    "{x} e={e}"
                );
                e += 2;
            }
        }
    }
    println!("criterion 6 PASS: structural identities exhaustive over their hypotheses");
}

#[test]
fn criterion_7_symmetric_rank_census() {
    let budget = 100_000_000;
    for n in 1..=4usize {
        for q in [2u64, 3, 5] {
            let counts = sym_rank_counts(n, q, budget).unwrap();
            assert_eq!(
                counts.iter().map(|&c| c as u128).sum::<u128>(),
                census_size(n, q),
                "rank partition n={n} q={q}"
            );
            for i in 0..=n {
                assert_eq!(
                    counts[n - i] as i128,
                    sym_rank_formula(n, q, i),
                    "n={n} q={q} i={i}"
                );
            }
        }
    }
    println!("criterion 7 PASS: symmetric-rank brute force equals formula, n <= 4, q in {{2,3,5}}");
}

#[test]
fn criterion_8_symmetric_group_identities() {
    for n in 1..=7 {
        for subset in IndexSet::all(n) {
            let r = identity_check(n, &subset, IdentityVariant::Stanley).unwrap();
            assert!(r.passed(), "stanley n={n} I={{{subset}}}");
        }
    }
    for n in [2usize, 4, 6, 8] {
        for subset in even_subsets(n) {
            let r = identity_check(n, &subset, IdentityVariant::EvenPerm).unwrap();
            assert!(r.passed(), "evenperm n={n} I={{{subset}}}");
        }
    }
    println!("criterion 8 PASS: Stanley (n <= 7) and halved multinomial (n in {{2,4,6,8}}) exact");
}

#[test]
fn criterion_9_length_equals_cayley_distance_on_b4() {
    use std::collections::HashMap;
    let n = 4;
    let gens: Vec<_> = (0..n).map(|i| SignedPermutation::generator(n, i)).collect();
    let mut dist: HashMap<SignedPermutation, u64> = HashMap::new();
    let mut frontier = vec![SignedPermutation::identity(n)];
    dist.insert(frontier[0].clone(), 0);
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for x in frontier {
            for s in &gens {
                let y = x.compose(s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    assert_eq!(dist.len(), 384);
    for x in enumerate_group(n) {
        assert_eq!(dist[&x], length_stats(&x).3, "{x}");
    }
    println!("criterion 9 PASS: Coxeter length equals Cayley-graph distance on all of B_4");
}
