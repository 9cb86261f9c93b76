use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient with the polynomial convention: `binom(x, k)` for
/// any integer `x` and `k >= 0`.
pub fn binomial(x: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= x - i;
    }
    num / factorial(k)
}

/// `binom(n, k)` as a rational, zero when `k > n`.
pub fn binom_q(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial(n as i64, k))
}

pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Returns `Some(i64)` when the rational is an integer fitting in 64 bits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if is_integral(q) {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Compact `a/b` formatting (`a` when integral).
pub fn fmt_q(q: &Rational) -> String {
    if is_integral(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
