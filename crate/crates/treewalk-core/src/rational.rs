//! Exact rational values and their rendering.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

/// Arbitrary-precision rational, the result type for every quantity that is
/// not guaranteed to be an integer (meeting times, stationary weights, the
/// solved hitting profile).
pub type Rational = num_rational::BigRational;

/// Rational `p / q` from two machine integers.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational with denominator one.
pub fn integer(p: u64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical `"p/q"` rendering; integers drop the `/q` part, so `35/6`
/// stays `"35/6"` while `70/2` becomes `"35"`.
pub fn exact_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Nearest double, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The rational is a nonnegative integer; unwrap it. Panics otherwise, which
/// in this crate means an arithmetic identity has been violated.
pub fn expect_u64(r: &Rational) -> u64 {
    assert!(r.denom().is_one() && !r.is_negative(), "expected a nonnegative integer, got {r}");
    r.numer().to_u64().expect("value exceeds u64")
}
