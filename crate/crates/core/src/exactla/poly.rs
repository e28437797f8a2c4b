use num_traits::{One, Zero};

use super::Rational;

/// Dense univariate polynomial over the rationals, coefficients from the
/// constant term upwards. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let q = r.last().unwrap() / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// A rational root, found by the rational root test on the
    /// integer-normalized polynomial.
    pub fn rational_root(&self) -> Option<Rational> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        if self.coeffs[0].is_zero() {
            return Some(Rational::zero());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let n = num_traits::Signed::abs(n);
            let mut out = Vec::new();
            let mut d = BigInt::one();
            // only small constant terms are searched exhaustively
            let limit = BigInt::from(100_000);
            while &d * &d <= n && d <= limit {
                if (&n % &d).is_zero() {
                    out.push(d.clone());
                    out.push(&n / &d);
                }
                d += 1;
            }
            out
        };
        for p in divisors(&ints[0]) {
            for q in divisors(&ints[deg]) {
                for s in [1i64, -1] {
                    let cand = Rational::new(&p * BigInt::from(s), q.clone());
                    if self.eval(&cand).is_zero() {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.gcd(&p(&[5])), p(&[1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn roots() {
        assert_eq!(p(&[-2, 1, 1]).rational_root().map(|r| p(&[-2, 1, 1]).eval(&r)), Some(rat(0)));
        assert_eq!(p(&[1, 0, 1]).rational_root(), None);
        assert_eq!(p(&[3, -2]).rational_root(), Some(crate::exactla::ratio(3, 2)));
    }
}
