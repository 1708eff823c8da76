//! Products and centrality when `q` is a primitive `p`-th root of unity.
//!
//! The key fact is that `A^p`, `B^p` and `C^p` are central and
//! `A^p B^p = B^p A^p = (I - C^p)/(1-q)^p`. For `l = Np + r` this gives
//! `A^l B^l = (A^p B^p)^N A^r B^r`, so long mixed products reduce to short
//! ones times a polynomial in `C^p`.

use crate::error::{Error, Result};
use crate::heisenberg::{monomial_product, Element, Monomial};
use crate::qscalar::{struct_c, struct_d, Scalar, ScalarContext};

/// Least nonnegative residue of an exponent modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedExponent {
    pub value: u32,
}

pub fn reduce_exponent(ctx: &ScalarContext, n: i64) -> Result<ReducedExponent> {
    let p = ctx.require_torsion("exponent reduction")? as i64;
    Ok(ReducedExponent {
        value: n.rem_euclid(p) as u32,
    })
}

fn q_reduced(ctx: &ScalarContext, n: i64) -> Scalar {
    let p = ctx.order().expect("torsion context") as i64;
    ctx.q_pow(n.rem_euclid(p))
}

fn require_l_at_least_p(ctx: &ScalarContext, l: u32) -> Result<u32> {
    let p = ctx.require_torsion("power-product simplification")? as u32;
    if l < p {
        return Err(Error::Precondition(format!(
            "l = {l} < p = {p}: the general product formulas apply"
        )));
    }
    Ok(p)
}

fn c_poly_element(ctx: &ScalarContext, poly: &[Scalar]) -> Element {
    Element::from_terms(
        ctx,
        poly.iter()
            .enumerate()
            .map(|(i, s)| (Monomial::c_pow(i as u32), s.clone())),
    )
}

/// `(I - (-1)^l C^l) / (1-q)^l`, the simplified form stated for both
/// `A^l B^l` and `B^l A^l` when `l >= p`.
///
/// Kept verbatim for comparison; [`ab_power_product`] and
/// [`ba_power_product`] give the values of those products.
pub fn pow_product_identity(ctx: &ScalarContext, l: u32) -> Result<Element> {
    require_l_at_least_p(ctx, l)?;
    let sign = if l.is_multiple_of(2) {
        -ctx.one()
    } else {
        ctx.one()
    };
    let s = (&ctx.one() - &ctx.q()).pow(l).inv()?;
    Ok(Element::from_terms(
        ctx,
        [
            (Monomial::IDENTITY, s.clone()),
            (Monomial::c_pow(l), &sign * &s),
        ],
    ))
}

fn poly_mul(ctx: &ScalarContext, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![ctx.zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

/// Coefficients in `C` of `A^l B^l` (`ab = true`) or `B^l A^l`, built from
/// the central factor `(I - C^p)/(1-q)^p`.
fn power_product_poly(ctx: &ScalarContext, l: u32, ab: bool) -> Vec<Scalar> {
    let p = ctx.order().expect("torsion context") as u32;
    let (n, r) = (l / p, l % p);
    let mut out: Vec<Scalar> = if r == 0 {
        vec![ctx.one()]
    } else {
        (0..=r)
            .map(|i| {
                if ab {
                    struct_c(ctx, i, r)
                } else {
                    struct_d(ctx, i, r)
                }
                .expect("index in range")
            })
            .collect()
    };
    if n > 0 {
        let s = (&ctx.one() - &ctx.q())
            .pow(p)
            .inv()
            .expect("1 - q is invertible");
        let mut central = vec![ctx.zero(); p as usize + 1];
        central[0] = s.clone();
        central[p as usize] = -s;
        for _ in 0..n {
            out = poly_mul(ctx, &out, &central);
        }
    }
    out
}

/// `A^l B^l` as a polynomial in `C`.
pub fn ab_power_product(ctx: &ScalarContext, l: u32) -> Result<Element> {
    ctx.require_torsion("power products")?;
    Ok(c_poly_element(ctx, &power_product_poly(ctx, l, true)))
}

/// `B^l A^l` as a polynomial in `C`.
pub fn ba_power_product(ctx: &ScalarContext, l: u32) -> Result<Element> {
    ctx.require_torsion("power products")?;
    Ok(c_poly_element(ctx, &power_product_poly(ctx, l, false)))
}

/// Product of basis monomials with reduced `q`-exponents, using the central
/// factorization for mixed cases whose shorter run has length `>= p`.
/// Other cases fall through to [`monomial_product`].
pub fn monomial_product_fastpath(
    ctx: &ScalarContext,
    x: Monomial,
    y: Monomial,
) -> Result<Vec<(Monomial, Scalar)>> {
    let p = ctx.require_torsion("fast-path multiplication")? as u32;
    let (m, k) = (x.k, y.k);
    let (m64, k64) = (m as i64, k as i64);
    let qr = |e: i64| q_reduced(ctx, e);
    Ok(match (x.d.signum(), y.d.signum()) {
        (-1, 0) => {
            let n = x.a_exp();
            vec![(Monomial::c_a(m + k, n), qr(n as i64 * k64))]
        }
        (-1, -1) => {
            let (n, l) = (x.a_exp(), y.a_exp());
            vec![(Monomial::c_a(m + k, n + l), qr(n as i64 * k64))]
        }
        (0, 1) => {
            let l = y.b_exp();
            vec![(Monomial::b_c(l, m + k), qr(m64 * l as i64))]
        }
        (1, 1) => {
            let (n, l) = (x.b_exp(), y.b_exp());
            vec![(Monomial::b_c(n + l, m + k), qr(m64 * l as i64))]
        }
        (-1, 1) if x.a_exp().min(y.b_exp()) >= p => {
            // C^m A^n . B^l C^k
            let (n, l) = (x.a_exp(), y.b_exp());
            if n >= l {
                let r = (n - l) as i64;
                power_product_poly(ctx, l, true)
                    .into_iter()
                    .enumerate()
                    .map(|(j, s)| {
                        let j = j as u32;
                        (
                            Monomial::c_a(m + j + k, n - l),
                            &s * &qr(r * (j as i64 + k64)),
                        )
                    })
                    .collect()
            } else {
                let r = (l - n) as i64;
                power_product_poly(ctx, n, true)
                    .into_iter()
                    .enumerate()
                    .map(|(j, s)| {
                        let j = j as u32;
                        (
                            Monomial::b_c(l - n, m + j + k),
                            &s * &qr(r * (m64 + j as i64)),
                        )
                    })
                    .collect()
            }
        }
        (1, -1) if x.b_exp().min(y.a_exp()) >= p => {
            // B^n C^m . C^k A^l
            let (n, l) = (x.b_exp(), y.a_exp());
            let run = n.min(l);
            let pre = qr(-(m64 + k64) * run as i64);
            power_product_poly(ctx, run, false)
                .into_iter()
                .enumerate()
                .map(|(j, s)| {
                    let j = j as u32;
                    let mono = if n >= l {
                        Monomial::b_c(n - l, m + k + j)
                    } else {
                        Monomial::c_a(m + k + j, l - n)
                    };
                    (mono, &s * &pre)
                })
                .collect()
        }
        _ => monomial_product(ctx, x, y),
    })
}

/// Bilinear extension of [`monomial_product_fastpath`]; equal to
/// [`Element::multiply`].
pub fn multiply_fastpath(x: &Element, y: &Element) -> Result<Element> {
    let ctx = x.context();
    ctx.check_same(y.context())?;
    let mut out = Element::zero(ctx);
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let coef = cx * cy;
            for (m, s) in monomial_product_fastpath(ctx, *mx, *my)? {
                out.add_term(m, &coef * &s);
            }
        }
    }
    Ok(out)
}

/// The four simplified mixed products as displayed for `n, l >= p`,
/// transcribed literally; `None` when the stated inequalities fail.
pub fn displayed_simplified_product(
    ctx: &ScalarContext,
    x: Monomial,
    y: Monomial,
) -> Result<Option<Element>> {
    let p = ctx.require_torsion("simplified products")? as u32;
    let (m, k) = (x.k as i64, y.k as i64);
    let one = ctx.one();
    let qr = |e: i64| q_reduced(ctx, e);
    let sgn = |e: u32| {
        if e.is_multiple_of(2) {
            one.clone()
        } else {
            -one.clone()
        }
    };
    let inv_pow = |e: u32| (&one - &ctx.q()).pow(e).inv().expect("1 - q is invertible");
    let mk = x.k + y.k;
    Ok(match (x.d.signum(), y.d.signum()) {
        (-1, 1) => {
            let (n, l) = (x.a_exp(), y.b_exp());
            if n >= l && l >= p {
                let r = (n - l) as i64;
                let s = inv_pow(l);
                Some(Element::from_terms(
                    ctx,
                    [
                        (Monomial::c_a(mk, n - l), &s * &qr(r * k)),
                        (
                            Monomial::c_a(mk + l, n - l),
                            -(&(&s * &sgn(l)) * &qr(r * (m + k))),
                        ),
                    ],
                ))
            } else if l > n && n >= p {
                let r = (l - n) as i64;
                let s = inv_pow(n);
                Some(Element::from_terms(
                    ctx,
                    [
                        (Monomial::b_c(l - n, mk), &s * &qr(m * r)),
                        (
                            Monomial::b_c(l - n, mk + n),
                            -(&(&s * &sgn(n)) * &qr(r * (m + n as i64))),
                        ),
                    ],
                ))
            } else {
                None
            }
        }
        (1, -1) => {
            let (n, l) = (x.b_exp(), y.a_exp());
            if n >= l && l >= p {
                let s = &qr(l as i64 * (m + k)) * &inv_pow(l);
                Some(Element::from_terms(
                    ctx,
                    [
                        (Monomial::b_c(n - l, mk), s.clone()),
                        (Monomial::b_c(n - l, mk + l), -(&s * &sgn(l))),
                    ],
                ))
            } else if l > n && n >= p {
                let s = &qr((m + k) * n as i64) * &inv_pow(n);
                Some(Element::from_terms(
                    ctx,
                    [
                        (Monomial::c_a(mk, l - n), s.clone()),
                        (Monomial::c_a(mk + n, l - n), -(&s * &sgn(n))),
                    ],
                ))
            } else {
                None
            }
        }
        _ => None,
    })
}

/// Whether `x` commutes with both generators, hence with everything.
pub fn is_central(x: &Element) -> Result<bool> {
    let ctx = x.context();
    Ok(x.commutator(&Element::a(ctx))?.is_zero() && x.commutator(&Element::b(ctx))?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        let t = |p| ScalarContext::torsion(p).unwrap();
        assert_eq!(reduce_exponent(&t(3), 7).unwrap().value, 1);
        assert_eq!(reduce_exponent(&t(2), -1).unwrap().value, 1);
        assert_eq!(reduce_exponent(&t(5), 10).unwrap().value, 0);
        assert!(reduce_exponent(&ScalarContext::generic(), 3).is_err());
        let c = t(5);
        for n in -12..12 {
            let r = reduce_exponent(&c, n).unwrap().value as i64;
            assert_eq!(c.q_pow(n), c.q_pow(r));
        }
    }

    #[test]
    fn power_products_match_general_path() {
        for p in 2..=5 {
            let t = ScalarContext::torsion(p).unwrap();
            for l in 1..=2 * p as u32 + 1 {
                let a = Element::monomial(&t, Monomial::c_a(0, l));
                let b = Element::monomial(&t, Monomial::b_c(l, 0));
                assert_eq!(ab_power_product(&t, l).unwrap(), &a * &b, "p={p} l={l}");
                assert_eq!(ba_power_product(&t, l).unwrap(), &b * &a, "p={p} l={l}");
            }
        }
    }

    #[test]
    fn central_factor_at_p() {
        let t = ScalarContext::torsion(2).unwrap();
        // (I - C^2)/4 at q = -1
        let e = pow_product_identity(&t, 2).unwrap();
        assert_eq!(e, ab_power_product(&t, 2).unwrap());
        assert!(pow_product_identity(&t, 1).is_err());
    }

    #[test]
    fn fastpath_examples() {
        let t = ScalarContext::torsion(3).unwrap();
        let x = Monomial::c_a(1, 4);
        let y = Monomial::c_pow(2);
        let v = monomial_product_fastpath(&t, x, y).unwrap();
        assert_eq!(v, vec![(Monomial::c_a(3, 4), t.q_pow(2))]);
        let a3 = Element::monomial(&t, Monomial::c_a(0, 3));
        let b3 = Element::monomial(&t, Monomial::b_c(3, 0));
        assert_eq!(multiply_fastpath(&a3, &b3).unwrap(), &a3 * &b3);
    }

    #[test]
    fn centrality() {
        let t = ScalarContext::torsion(3).unwrap();
        assert!(is_central(&Element::monomial(&t, Monomial::c_a(0, 3))).unwrap());
        assert!(is_central(&Element::monomial(&t, Monomial::c_pow(3))).unwrap());
        assert!(!is_central(&Element::b(&t)).unwrap());
    }
}
