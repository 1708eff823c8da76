//! The field `Q(q)` of rational functions in an indeterminate `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::IntPoly;

/// A reduced fraction `num / den` of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` in `Q[q]`, the joint integer content of
/// `num` and `den` is 1 and the leading coefficient of `den` is positive. Zero
/// is `0 / 1`. Equality of canonical forms is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_int(n: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(n))
    }

    /// A polynomial; already canonical.
    pub fn from_poly(num: IntPoly) -> Self {
        RatFunc {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(n: BigInt, d: BigInt) -> Option<Self> {
        Self::new(IntPoly::constant(n), IntPoly::constant(d))
    }

    /// Builds and canonicalizes `num / den`; `None` if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(mut num: IntPoly, mut den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() != Some(0) {
            let g = num.gcd(&den);
            if g.degree() != Some(0) {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        Some(RatFunc { num, den })
    }

    /// `(P)/(Q)` with both polynomials in sparse form.
    pub fn to_serial_string(&self) -> String {
        format!(
            "({})/({})",
            self.num.to_sparse_string("q"),
            self.den.to_sparse_string("q")
        )
    }

    /// Inverse of [`RatFunc::to_serial_string`]; also accepts a bare polynomial
    /// or unparenthesized `P/Q`. The result is canonicalized.
    pub fn parse_serial(text: &str) -> Option<RatFunc> {
        let t = text.trim();
        let (n, d) = match split_top_level_slash(t) {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let num = IntPoly::parse_sparse(strip_parens(n), "q")?;
        let den = IntPoly::parse_sparse(strip_parens(d), "q")?;
        RatFunc::new(num, den)
    }

    /// Human-readable form: a bare polynomial when the denominator is 1.
    pub fn to_pretty(&self) -> String {
        if self.den.is_one() {
            self.num.to_sparse_string("q")
        } else if self.den.degree() == Some(0) && self.num.degree() == Some(0) {
            format!("{}/{}", self.num.coeff(0), self.den.coeff(0))
        } else {
            self.to_serial_string()
        }
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s)
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(BigInt::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn canonical_form_is_unique() {
        // (2q - 2) / (4 - 4q^2) = -1 / (2q + 2)
        let a = RatFunc::new(poly(&[-2, 2]), poly(&[4, 0, -4])).unwrap();
        let b = RatFunc::new(poly(&[-1]), poly(&[2, 2])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denom(), &poly(&[2, 2]));
        assert_eq!(a.numer(), &poly(&[-1]));
    }

    #[test]
    fn field_operations() {
        let q = RatFunc::from_poly(IntPoly::x());
        let one = RatFunc::one();
        let qm1 = q.sub(&one);
        let inv = qm1.inv().unwrap();
        assert!(qm1.mul(&inv).is_one());
        // q/(q-1) - 1/(q-1) = 1
        assert!(q.mul(&inv).sub(&inv).is_one());
        assert!(RatFunc::zero().inv().is_none());
    }

    #[test]
    fn serial_round_trip() {
        let a = RatFunc::new(poly(&[1, 0, -3]), poly(&[-1, 1])).unwrap();
        let s = a.to_serial_string();
        assert_eq!(s, "(-3*q^2+1)/(q-1)");
        assert_eq!(RatFunc::parse_serial(&s), Some(a));
        assert_eq!(RatFunc::parse_serial("(0)/(1)"), Some(RatFunc::zero()));
    }
}
