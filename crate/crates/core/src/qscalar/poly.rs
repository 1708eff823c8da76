//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored little-endian (`coeffs[i]` multiplies `x^i`) with no
//! trailing zeros, so the zero polynomial is the empty vector and structural
//! equality is polynomial equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_exact_scalar(&self, c: &BigInt) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_exact_scalar(&c)
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            if t.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let off = top - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[off + j] -= &t * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::from_coeffs(r)
    }

    /// Exact quotient `self / d` over the integers, or `None` if `d` does not
    /// divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let t = &r[i + dd];
            if t.is_zero() {
                continue;
            }
            let (qi, rem) = t.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Remainder modulo a monic polynomial; stays in `Z[x]`.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        let md = m.degree().expect("reduction modulo zero polynomial");
        debug_assert!(m.leading().unwrap().is_one());
        let mut r = self.coeffs.clone();
        while r.len() > md {
            let top = r.len() - 1;
            let t = r.pop().unwrap();
            if t.is_zero() {
                continue;
            }
            let off = top - md;
            for (j, mc) in m.coeffs[..md].iter().enumerate() {
                r[off + j] -= &t * mc;
            }
        }
        Self::from_coeffs(r)
    }

    /// Primitive gcd (positive leading coefficient); gcd(0, 0) = 0.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Self::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Substitutes `x -> x^j`.
    pub fn compose_power(&self, j: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * j + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * j] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sparse text form in the variable `var`, e.g. `2*q^3-q+1`; `0` for zero.
    pub fn to_sparse_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let var_part = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if var_part.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&var_part);
            } else {
                s.push_str(&format!("{mag}*{var_part}"));
            }
        }
        s
    }

    /// Parses the output of [`IntPoly::to_sparse_string`]. Whitespace is ignored,
    /// repeated powers are summed.
    pub fn parse_sparse(text: &str, var: &str) -> Option<IntPoly> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return None;
        }
        let bytes = t.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut acc = IntPoly::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first()? {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return None;
            }
            let (coef, power) = if let Some(pos) = body.find(var) {
                let (cpart, vpart) = body.split_at(pos);
                let coef = if cpart.is_empty() {
                    BigInt::one()
                } else {
                    cpart.strip_suffix('*')?.parse::<BigInt>().ok()?
                };
                let rest = &vpart[var.len()..];
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')?.parse::<usize>().ok()?
                };
                (coef, power)
            } else {
                (body.parse::<BigInt>().ok()?, 0)
            };
            if coef.is_negative() {
                return None;
            }
            let coef = if neg { -coef } else { coef };
            acc = acc.add(&IntPoly::monomial(coef, power));
        }
        Some(acc)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_sparse_string("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn gcd_of_products() {
        // (x - 1)(x + 2) and (x - 1)(x^2 + 1)
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[1, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[6, 4]).gcd(&p(&[9, 6])), p(&[3, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let d = p(&[-1, 1]);
        let q = a.div_exact(&d).unwrap();
        assert_eq!(q, p(&[1, 1, 1, 1, 1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&d).is_none());
    }

    #[test]
    fn monic_remainder() {
        // x^3 mod (x^2 + x + 1) = 1
        assert_eq!(p(&[0, 0, 0, 1]).rem_monic(&p(&[1, 1, 1])), p(&[1]));
    }

    #[test]
    fn sparse_text_round_trip() {
        for cs in [&[0i64][..], &[1], &[-1, 0, 3], &[5, -1, 0, 0, -2], &[0, 1]] {
            let a = p(cs);
            let s = a.to_sparse_string("q");
            assert_eq!(IntPoly::parse_sparse(&s, "q"), Some(a), "{s}");
        }
        assert_eq!(p(&[1, -1, 2]).to_sparse_string("q"), "2*q^2-q+1");
    }
}
