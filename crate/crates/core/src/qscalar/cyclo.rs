//! The cyclotomic field `Q(zeta_p)` as `Q[x] / Phi_p(x)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_poly(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut acc = IntPoly::monomial(BigInt::one(), n).sub(&IntPoly::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        acc = acc
            .div_exact(&cyclotomic_poly(d))
            .expect("cyclotomic factor divides x^n - 1");
    }
    acc
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Static data for one field `Q(zeta_p)`.
#[derive(Debug)]
pub struct CycloField {
    p: usize,
    phi: usize,
    modulus: IntPoly,
    /// Exponents `j` with `gcd(j, p) = 1`, `1 < j < p`: the nontrivial Galois
    /// automorphisms `zeta -> zeta^j`.
    conjugates: Vec<usize>,
}

/// An element of `Q(zeta_p)`: `(sum num[i] x^i) / den` with `num.len() = phi(p)`.
///
/// Canonical form: `den > 0` and `gcd(num[0], ..., num[phi-1], den) = 1`; zero
/// is the all-zero vector over 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloNum {
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloField {
    pub fn new(p: usize) -> Self {
        assert!(p >= 2, "torsion order must be at least 2");
        let modulus = cyclotomic_poly(p);
        let phi = modulus.degree().unwrap();
        debug_assert_eq!(phi, euler_phi(p));
        let conjugates = (2..p).filter(|j| j.gcd(&p) == 1).collect();
        CycloField {
            p,
            phi,
            modulus,
            conjugates,
        }
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum {
            num: vec![BigInt::zero(); self.phi],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(&self, n: BigInt, d: BigInt) -> CycloNum {
        let mut num = vec![BigInt::zero(); self.phi];
        num[0] = n;
        CycloNum::normalize(num, d)
    }

    /// Reduces an integer polynomial modulo `Phi_p`, over denominator `den`.
    pub fn from_poly(&self, poly: &IntPoly, den: BigInt) -> CycloNum {
        let r = poly.rem_monic(&self.modulus);
        let mut num = r.into_coeffs();
        num.resize(self.phi, BigInt::zero());
        CycloNum::normalize(num, den)
    }

    /// `zeta^n` for any integer `n`.
    pub fn zeta_pow(&self, n: i64) -> CycloNum {
        let e = n.rem_euclid(self.p as i64) as usize;
        self.from_poly(&IntPoly::monomial(BigInt::one(), e), BigInt::one())
    }

    pub fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return CycloNum::normalize(num, a.den.clone());
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        CycloNum::normalize(num, &a.den * &b.den)
    }

    pub fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * self.phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // Phi_p is monic: fold the high coefficients back down.
        let m = self.modulus.coeffs();
        for top in (self.phi..prod.len()).rev() {
            let t = std::mem::take(&mut prod[top]);
            if t.is_zero() {
                continue;
            }
            let off = top - self.phi;
            for (j, mc) in m[..self.phi].iter().enumerate() {
                prod[off + j] -= &t * mc;
            }
        }
        prod.truncate(self.phi);
        CycloNum::normalize(prod, &a.den * &b.den)
    }

    /// Image under the automorphism `zeta -> zeta^j`.
    pub fn conjugate(&self, a: &CycloNum, j: usize) -> CycloNum {
        let mut spread = vec![BigInt::zero(); self.p];
        for (i, c) in a.num.iter().enumerate() {
            spread[(i * j) % self.p] += c;
        }
        self.from_poly(&IntPoly::from_coeffs(spread), a.den.clone())
    }

    /// Inverse through the norm: `a^{-1} = (prod of the other conjugates) / N(a)`.
    pub fn inv(&self, a: &CycloNum) -> Option<CycloNum> {
        if a.is_zero() {
            return None;
        }
        let mut others = self.from_rational(BigInt::one(), BigInt::one());
        for &j in &self.conjugates {
            others = self.mul(&others, &self.conjugate(a, j));
        }
        let norm = self.mul(a, &others);
        let n = norm.as_rational().expect("field norm is rational");
        debug_assert!(!n.is_zero());
        let scale = self.from_rational(n.denom().clone(), n.numer().clone());
        Some(self.mul(&others, &scale))
    }
}

impl CycloNum {
    fn normalize(mut num: Vec<BigInt>, mut den: BigInt) -> CycloNum {
        debug_assert!(!den.is_zero());
        if num.iter().all(Zero::is_zero) {
            return CycloNum {
                num,
                den: BigInt::one(),
            };
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= g;
        }
        CycloNum { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    /// The value as a rational number when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Coordinates over the power basis `1, q, ..., q^{phi-1}`.
    pub fn coordinates(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn from_coordinates(coords: &[BigRational]) -> CycloNum {
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        CycloNum::normalize(num, den)
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn modulus_degree_is_euler_phi_and_divides() {
        for p in 2..=30 {
            let f = CycloField::new(p);
            assert_eq!(f.degree(), euler_phi(p));
            let xp = IntPoly::monomial(BigInt::one(), p).sub(&IntPoly::one());
            assert!(xp.div_exact(f.modulus()).is_some());
        }
    }

    #[test]
    fn zeta_is_primitive() {
        for p in 2..=12 {
            let f = CycloField::new(p);
            assert!(f.zeta_pow(p as i64).is_one());
            for j in 1..p as i64 {
                assert!(!f.zeta_pow(j).is_one(), "p={p} j={j}");
            }
        }
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        for p in 2..=12 {
            let f = CycloField::new(p);
            for j in 1..p as i64 {
                let one = f.from_rational(BigInt::one(), BigInt::one());
                let a = f.add(&one, &f.zeta_pow(j).neg());
                let inv = f.inv(&a).unwrap();
                assert!(f.mul(&a, &inv).is_one());
            }
        }
    }
}
