//! Exact rational scalars and the small integer-combinatorics helpers
//! (factorials, double factorials, binomial coefficients and their
//! falling-factorial polynomial extension) used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical reduced form: `gcd(|num|, den) = 1`
/// and `den >= 1`. All arithmetic in this crate is exact.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `a/b`. Panics if `b == 0`.
pub fn ratio<A: Into<BigInt>, B: Into<BigInt>>(a: A, b: B) -> Rational {
    Rational::new(a.into(), b.into())
}

/// Render as `num/den`, with the denominator always explicit.
pub fn format_explicit(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let numer: BigInt = n.trim().parse().ok()?;
            let denom: BigInt = d.trim().parse().ok()?;
            if denom.is_zero() {
                return None;
            }
            Some(Rational::new(numer, denom))
        }
        None => {
            let numer: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(numer))
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// Odd double factorial `(2k+1)!! = 1 * 3 * ... * (2k+1)`, with the
/// convention `(-1)!! = 1` (i.e. `odd_double_factorial(-1) = 1`).
pub fn odd_double_factorial(k: i64) -> BigInt {
    if k < 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::one();
    let mut t = 1i64;
    while t <= 2 * k + 1 {
        acc *= t;
        t += 2;
    }
    acc
}

/// Binomial coefficient for non-negative integer arguments; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0u64;
    for &p in parts {
        for t in 1..=p {
            total += 1;
            acc = acc * total / t;
        }
    }
    acc
}

/// Falling-factorial binomial `binom(x, k) = x(x-1)...(x-k+1)/k!` for an
/// arbitrary integer `x`; this is the polynomial extension used when the
/// upper argument is negative. Negative `k` yields zero.
pub fn binom_poly_int(x: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(x - t);
    }
    Rational::new(num, factorial(k as u64))
}

/// Falling-factorial binomial with a rational upper argument.
pub fn binom_poly_rat(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for t in 0..k {
        acc *= x - rat(t);
    }
    acc / rat(factorial(k as u64))
}

/// True if the rational is a (possibly negative) integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Sign of a rational as -1, 0, or 1.
pub fn signum(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_double_factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(odd_double_factorial(-1), BigInt::from(1));
        assert_eq!(odd_double_factorial(0), BigInt::from(1));
        assert_eq!(odd_double_factorial(3), BigInt::from(105)); // 7!!
        assert_eq!(odd_double_factorial(4), BigInt::from(945)); // 9!!
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, 5), BigInt::from(0));
        assert_eq!(multinomial(&[2, 2]), BigInt::from(6));
        assert_eq!(multinomial(&[5, 2, 2]), BigInt::from(756));
    }

    #[test]
    fn falling_factorial_binomial() {
        // binom(-2, 5) = (-2)(-3)(-4)(-5)(-6)/120 = -6
        assert_eq!(binom_poly_int(-2, 5), rat(-6));
        assert_eq!(binom_poly_int(-1, 3), rat(-1));
        assert_eq!(binom_poly_int(4, 2), rat(6));
        assert_eq!(binom_poly_int(2, 5), Rational::zero());
        assert_eq!(binom_poly_int(7, -1), Rational::zero());
    }

    #[test]
    fn parse_and_format() {
        let x = parse_rational("29/5760").unwrap();
        assert_eq!(format_explicit(&x), "29/5760");
        assert_eq!(x.to_string(), "29/5760");
        let y = parse_rational("-6").unwrap();
        assert_eq!(y, rat(-6));
        assert_eq!(y.to_string(), "-6");
        assert_eq!(format_explicit(&y), "-6/1");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        // non-canonical input reduces
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
    }
}
