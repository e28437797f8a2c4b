use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with decimal integers. Whitespace is not accepted.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let check = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !check(num) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            if !check(d) || d.starts_with('-') {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

pub fn abs_le(q: &Rational, bound: i64) -> bool {
    q.abs() <= rat(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(format_rational(&ratio(-4, 3)), "-4/3");
        assert_eq!(format_rational(&ratio(6, 3)), "2");
        assert_eq!(format_rational(&ratio(0, 5)), "0");
        for bad in ["", "1/0", "a", "1/-2", " 1", "1.5", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn reduced_invariant() {
        let q = ratio(10, -4);
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(ratio(0, 7).denom(), &BigInt::from(1));
    }
}
