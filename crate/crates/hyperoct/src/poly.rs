//! Dense exact-integer polynomials in one variable `X`, and the
//! `q`-objects built from them: `(k) = 1 - X^k`, `(n)!`, binomial and
//! multinomial coefficients, and the descent-class polynomials `f_{n,I}`.
//!
//! Coefficients are `i128` with checked arithmetic; any overflow panics
//! instead of wrapping. At the degrees this crate works with (group
//! orders up to a few million, degrees below 100) nothing comes close
//! to the limit.

use crate::classes::IndexSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in `Z[X]`, dense coefficient vector indexed by exponent.
///
/// Normalized: the highest stored coefficient is nonzero; the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `coeff * X^exp`.
    pub fn monomial(coeff: i128, exp: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = coeff;
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> i128 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Accumulate `coeff * X^exp` in place.
    pub fn add_term(&mut self, coeff: i128, exp: usize) {
        if coeff == 0 {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, 0);
        }
        self.coeffs[exp] = checked_add(self.coeffs[exp], coeff);
        self.normalize();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] = checked_add(coeffs[i], c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] = checked_add(coeffs[i], -c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(a, b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact division. Panics if `divisor` is zero or does not divide
    /// `self`: a nonzero remainder here means some identity the caller
    /// relied on is false, which is not a recoverable state.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len();
        let lead = divisor.coeffs[d - 1];
        assert!(
            rem.len() >= d,
            "exact division failed: degree of dividend below divisor"
        );
        let mut quot = vec![0i128; rem.len() - d + 1];
        while rem.len() >= d {
            let r_lead = *rem.last().unwrap();
            assert!(
                r_lead % lead == 0,
                "exact division failed: leading coefficient not divisible"
            );
            let c = r_lead / lead;
            let shift = rem.len() - d;
            quot[shift] = c;
            for (k, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = checked_add(rem[shift + k], -checked_mul(c, b));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        assert!(rem.is_empty(), "exact division failed: nonzero remainder");
        Self::from_coeffs(quot)
    }

    /// Substitute `X -> X^k`.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Sum of coefficients, i.e. the value at `X = 1`.
    pub fn coeff_sum(&self) -> i128 {
        self.coeffs.iter().fold(0, |acc, &c| checked_add(acc, c))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::add(self, rhs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::sub(self, rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders like `1 - X + X^3`, ascending powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (exp, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "X")?,
                (1, m) => write!(f, "{m}*X")?,
                (e, 1) => write!(f, "X^{e}")?,
                (e, m) => write!(f, "{m}*X^{e}")?,
            }
        }
        Ok(())
    }
}

/// `(k) = 1 - X^k`, with the convention `(0) = 1`.
pub fn q_int(k: usize) -> IntPolynomial {
    if k == 0 {
        return IntPolynomial::one();
    }
    let mut coeffs = vec![0i128; k + 1];
    coeffs[0] = 1;
    coeffs[k] = -1;
    IntPolynomial::from_coeffs(coeffs)
}

/// `(n)! = (1)(2)...(n)`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for k in 1..=n {
        p = p.mul(&q_int(k));
    }
    p
}

/// X-binomial coefficient `(a)! / ((a-b)! (b)!)`.
pub fn q_binomial(a: usize, b: usize) -> IntPolynomial {
    assert!(b <= a, "q_binomial requires 0 <= b <= a");
    q_factorial(a)
        .exact_div(&q_factorial(a - b))
        .exact_div(&q_factorial(b))
}

/// X-multinomial coefficient: the chain
/// `binom(n, i_l) binom(i_l, i_{l-1}) ... binom(i_2, i_1)` over
/// `I = {i_1 < ... < i_l}`. An empty `I` gives 1, and a member 0 only
/// contributes the trivial factor `binom(i_2, 0) = 1`.
pub fn q_multinomial(n: usize, subset: &IndexSet) -> IntPolynomial {
    assert!(
        subset.iter().all(|i| i < n),
        "subset members must lie below n"
    );
    let mut chain: Vec<usize> = vec![n];
    let mut members: Vec<usize> = subset.iter().collect();
    members.reverse();
    chain.extend(members);
    let mut p = IntPolynomial::one();
    for pair in chain.windows(2) {
        p = p.mul(&q_binomial(pair[0], pair[1]));
    }
    p
}

/// The descent-class polynomial `f_{n,I}`.
///
/// With `I = {i_1 < ... < i_l}`, `i_{l+1} := n`, and `i_1 := n` for the
/// empty set, this is `(n)!` divided by `(i_1)!` and by `(2s)` for every
/// `s = 1..=floor((i_{r+1}-i_r)/2)` in each gap. All divisions are exact;
/// a failure would mean the quotient is not a polynomial.
///
/// Cancellation runs largest divisor first to keep intermediate
/// coefficients small.
///
/// ```
/// use hyperoct::poly::{f_poly, q_int};
/// use hyperoct::IndexSet;
///
/// let f = f_poly(3, &IndexSet::new(3, [0]).unwrap());
/// assert_eq!(f, q_int(1).mul(&q_int(3))); // (1)(3)
/// ```
pub fn f_poly(n: usize, subset: &IndexSet) -> IntPolynomial {
    assert!(n >= 1);
    assert_eq!(subset.degree(), n, "subset degree must match n");
    let members: Vec<usize> = subset.iter().collect();
    let i1 = members.first().copied().unwrap_or(n);

    let mut divisors: Vec<usize> = (1..=i1).collect();
    let mut chain = members.clone();
    chain.push(n);
    for pair in chain.windows(2) {
        let gap = pair[1] - pair[0];
        for s in 1..=gap / 2 {
            divisors.push(2 * s);
        }
    }
    divisors.sort_unstable_by(|a, b| b.cmp(a));

    let mut p = q_factorial(n);
    for k in divisors {
        p = p.exact_div(&q_int(k));
    }
    p
}

/// `q^e * p(1/q)` as an exact integer; requires `e >= deg p`.
pub fn eval_reciprocal_power(p: &IntPolynomial, q: u64, e: u32) -> i128 {
    if let Some(d) = p.degree() {
        assert!(
            e as usize >= d,
            "eval_reciprocal_power requires e >= deg p ({e} < {d})"
        );
    }
    let q = q as i128;
    let mut total: i128 = 0;
    for (d, &c) in p.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let power = q
            .checked_pow(e - d as u32)
            .expect("power overflow in eval_reciprocal_power");
        total = checked_add(total, checked_mul(c, power));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn ring_basics() {
        let p = IntPolynomial::from_coeffs(vec![1, 0, -1]); // 1 - X^2
        let q = q_int(1); // 1 - X
        assert_eq!(p.exact_div(&q), IntPolynomial::from_coeffs(vec![1, 1]));
        assert_eq!(p.mul(&IntPolynomial::zero()), IntPolynomial::zero());
        assert_eq!(p.add(&q).coeff(1), -1);
        assert_eq!((&p - &p), IntPolynomial::zero());
    }

    #[test]
    #[should_panic(expected = "exact division failed")]
    fn nondivisible_panics() {
        // (1 - X^3) / (1 - X^2) has a remainder
        q_int(3).exact_div(&q_int(2));
    }

    #[test]
    fn q_symbols() {
        assert_eq!(q_int(0), IntPolynomial::one());
        assert_eq!(q_binomial(2, 1), IntPolynomial::from_coeffs(vec![1, 1]));
        // (2)! = (1-X)(1-X^2) = 1 - X - X^2 + X^3
        assert_eq!(
            q_factorial(2),
            IntPolynomial::from_coeffs(vec![1, -1, -1, 1])
        );
        assert_eq!(
            q_factorial(3),
            IntPolynomial::from_coeffs(vec![1, -1, -1, 0, 1, 1, -1])
        );
        assert_eq!(
            q_binomial(4, 2),
            IntPolynomial::from_coeffs(vec![1, 1, 2, 1, 1])
        );
        assert_eq!(q_multinomial(4, &set(4, &[])), IntPolynomial::one());
        assert_eq!(
            q_multinomial(4, &set(4, &[1, 2])),
            IntPolynomial::from_coeffs(vec![1, 2, 3, 3, 2, 1])
        );
        // a leading 0 in the subset changes nothing
        assert_eq!(
            q_multinomial(4, &set(4, &[0, 2])),
            q_multinomial(4, &set(4, &[2]))
        );
    }

    #[test]
    fn q_binomial_specializes_to_binomial() {
        // coefficient sum at X = 1 is the ordinary binomial coefficient
        fn binom(a: usize, b: usize) -> i128 {
            (1..=b).fold(1i128, |acc, k| acc * (a - b + k) as i128 / k as i128)
        }
        for a in 0..=8 {
            for b in 0..=a {
                assert_eq!(q_binomial(a, b).coeff_sum(), binom(a, b), "({a},{b})");
            }
        }
    }

    #[test]
    fn f_poly_values() {
        assert_eq!(f_poly(1, &set(1, &[0])), q_int(1));
        assert_eq!(
            f_poly(3, &set(3, &[0])),
            IntPolynomial::from_coeffs(vec![1, -1, 0, -1, 1]) // (1)(3)
        );
        assert_eq!(
            f_poly(4, &set(4, &[0, 2])),
            IntPolynomial::from_coeffs(vec![1, -1, 1, -2, 1, -1, 1])
        );
        assert_eq!(
            f_poly(7, &set(7, &[0, 3, 4])),
            IntPolynomial::from_coeffs(vec![
                1, -1, 1, -2, 1, -2, 1, -1, 2, 0, 2, 0, 0, 0, -2, 0, -2, 1, -1, 2, -1, 2, -1, 1, -1
            ])
        );
        for n in 1..=7 {
            // I = [n-1]_0 keeps the whole factorial
            let full: Vec<usize> = (0..n).collect();
            assert_eq!(f_poly(n, &set(n, &full)), q_factorial(n));
            // I = {0} leaves the odd factors (1)(3)...(n~)
            let mut odd = IntPolynomial::one();
            let mut k = 1;
            while k <= n {
                odd = odd.mul(&q_int(k));
                k += 2;
            }
            assert_eq!(f_poly(n, &set(n, &[0])), odd);
            // I = {} gives 1
            assert_eq!(f_poly(n, &set(n, &[])), IntPolynomial::one());
        }
    }

    #[test]
    fn f_poly_structure() {
        // constant term 1 always; coefficient sum 0 whenever some factor
        // (k) with k >= 1 survives, i.e. I nonempty with min I < n
        for n in 1..=7usize {
            for mask in 0u32..(1 << n) {
                let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let f = f_poly(n, &set(n, &members));
                assert_eq!(f.coeff(0), 1);
                if !members.is_empty() {
                    assert_eq!(f.coeff_sum(), 0, "n={n} I={members:?}");
                } else {
                    assert_eq!(f, IntPolynomial::one());
                }
            }
        }
        // all exact divisions succeed well past the verified range
        for n in 1..=10usize {
            let members: Vec<usize> = (0..n).step_by(2).collect();
            let _ = f_poly(n, &set(n, &members));
        }
    }

    #[test]
    fn reciprocal_power() {
        assert_eq!(eval_reciprocal_power(&q_int(1), 5, 1), 4);
        let f = f_poly(2, &set(2, &[1])); // 1 - X^2
        assert_eq!(eval_reciprocal_power(&f, 2, 2), 3);
        assert_eq!(eval_reciprocal_power(&IntPolynomial::one(), 7, 5), 16807);
    }

    #[test]
    fn display_format() {
        let p = IntPolynomial::from_coeffs(vec![1, -1, 0, 1]);
        assert_eq!(p.to_string(), "1 - X + X^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_coeffs(vec![0, -2]).to_string(), "-2*X");
        assert_eq!(q_factorial(2).to_string(), "1 - X - X^2 + X^3");
    }
}
