//! Structure-constant multiplication on basis monomials.

use std::ops::Mul;

use super::{Element, Monomial};
use crate::error::Result;
use crate::qscalar::{struct_c, struct_d, Scalar, ScalarContext};

fn c(ctx: &ScalarContext, i: u32, l: u32) -> Scalar {
    struct_c(ctx, i, l).expect("index in range")
}

fn d(ctx: &ScalarContext, i: u32, l: u32) -> Scalar {
    struct_d(ctx, i, l).expect("index in range")
}

fn qp(ctx: &ScalarContext, e: i64) -> Scalar {
    ctx.q_pow(e)
}

/// Product of two basis monomials, expanded in the basis.
///
/// Dispatches on the signs of the two grades; the mixed cases split on
/// whether the `A`-run or the `B`-run is longer.
pub fn monomial_product(ctx: &ScalarContext, x: Monomial, y: Monomial) -> Vec<(Monomial, Scalar)> {
    let (m, k) = (x.k, y.k);
    let (m64, k64) = (m as i64, k as i64);
    match (x.d.signum(), y.d.signum()) {
        (0, 0) => vec![(Monomial::c_pow(m + k), ctx.one())],
        (0, -1) => vec![(Monomial::c_a(m + k, y.a_exp()), ctx.one())],
        (0, 1) => {
            let l = y.b_exp();
            vec![(Monomial::b_c(l, m + k), qp(ctx, m64 * l as i64))]
        }
        (-1, 0) => {
            let n = x.a_exp();
            vec![(Monomial::c_a(m + k, n), qp(ctx, n as i64 * k64))]
        }
        (-1, -1) => {
            let (n, l) = (x.a_exp(), y.a_exp());
            vec![(Monomial::c_a(m + k, n + l), qp(ctx, n as i64 * k64))]
        }
        (-1, 1) => {
            // C^m A^n . B^l C^k
            let (n, l) = (x.a_exp(), y.b_exp());
            if n >= l {
                let r = (n - l) as i64;
                (0..=l)
                    .map(|i| {
                        let s = &qp(ctx, (i as i64 + k64) * r) * &c(ctx, i, l);
                        (Monomial::c_a(m + i + k, n - l), s)
                    })
                    .collect()
            } else {
                let r = (l - n) as i64;
                (0..=n)
                    .map(|i| {
                        let s = &qp(ctx, (m64 + i as i64) * r) * &c(ctx, i, n);
                        (Monomial::b_c(l - n, m + i + k), s)
                    })
                    .collect()
            }
        }
        (1, 0) => vec![(Monomial::b_c(x.b_exp(), m + k), ctx.one())],
        (1, -1) => {
            // B^n C^m . C^k A^l
            let (n, l) = (x.b_exp(), y.a_exp());
            let mk = m64 + k64;
            if n >= l {
                let pre = qp(ctx, -mk * l as i64);
                (0..=l)
                    .map(|i| (Monomial::b_c(n - l, m + k + i), &pre * &d(ctx, i, l)))
                    .collect()
            } else {
                let pre = qp(ctx, -mk * n as i64);
                (0..=n)
                    .map(|i| (Monomial::c_a(i + m + k, l - n), &pre * &d(ctx, i, n)))
                    .collect()
            }
        }
        (1, 1) => {
            let (n, l) = (x.b_exp(), y.b_exp());
            vec![(Monomial::b_c(n + l, m + k), qp(ctx, m64 * l as i64))]
        }
        _ => unreachable!("signum is -1, 0 or 1"),
    }
}

impl Element {
    /// Bilinear extension of [`monomial_product`].
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        let ctx = self.context();
        ctx.check_same(other.context())?;
        let mut out = Element::zero(ctx);
        for (mx, cx) in self.terms() {
            for (my, cy) in other.terms() {
                let coef = cx * cy;
                for (m, s) in monomial_product(ctx, *mx, *my) {
                    out.add_term(m, &coef * &s);
                }
            }
        }
        Ok(out)
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.multiply(other)?.checked_sub(&other.multiply(self)?)
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(self.context());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    /// Panics on mismatched contexts; see [`Element::multiply`].
    fn mul(self, rhs: &'a Element) -> Element {
        self.multiply(rhs).expect("element multiplication")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(ctx: &ScalarContext, terms: &[((u32, i32), Scalar)]) -> Element {
        Element::from_terms(
            ctx,
            terms
                .iter()
                .map(|((k, d), s)| (Monomial::new(*k, *d), s.clone())),
        )
    }

    #[test]
    fn a_times_b_and_b_times_a() {
        let g = ScalarContext::generic();
        let inv = (&g.q() - &g.one()).inv().unwrap();
        let ab = &Element::a(&g) * &Element::b(&g);
        assert_eq!(ab, el(&g, &[((1, 0), &g.q() * &inv), ((0, 0), -&inv)]));
        let ba = &Element::b(&g) * &Element::a(&g);
        assert_eq!(ba, el(&g, &[((1, 0), inv.clone()), ((0, 0), -&inv)]));
        // defining relation
        let rel = &ab - &ba.scale(&g.q());
        assert_eq!(rel, Element::one(&g));
        assert_eq!(
            Element::a(&g).commutator(&Element::b(&g)).unwrap(),
            Element::c(&g)
        );
    }

    #[test]
    fn c_powers_commute_past_letters() {
        let g = ScalarContext::generic();
        let q = g.q();
        // (C A) . C^2 = q^2 C^3 A
        let x = Element::monomial(&g, Monomial::c_a(1, 1));
        let y = Element::monomial(&g, Monomial::c_pow(2));
        assert_eq!(&x * &y, el(&g, &[((3, -1), q.pow(2))]));
        // C^2 . B^3 = q^6 B^3 C^2
        let b3 = Element::monomial(&g, Monomial::b_c(3, 0));
        assert_eq!(&y * &b3, el(&g, &[((2, 3), q.pow(6))]));
        // [A, C] = (q - 1) C A
        let ac = Element::a(&g).commutator(&Element::c(&g)).unwrap();
        assert_eq!(ac, el(&g, &[((1, -1), &q - &g.one())]));
    }

    #[test]
    fn c_power_commutator_with_b_family() {
        let g = ScalarContext::generic();
        for (m, l, k) in [(1, 1, 0), (2, 3, 1), (3, 2, 2)] {
            let x = Element::monomial(&g, Monomial::c_pow(m));
            let y = Element::monomial(&g, Monomial::b_c(l, k));
            let lhs = x.commutator(&y).unwrap();
            let s = -(&g.one() - &g.q().pow(l * m));
            assert_eq!(lhs, el(&g, &[((m + k, l as i32), s)]));
        }
    }

    #[test]
    fn products_respect_grading() {
        let t = ScalarContext::torsion(3).unwrap();
        for x in [(0, -2), (1, -1), (2, 0), (1, 3)] {
            for y in [(2, 2), (0, -3), (1, 1), (3, 0)] {
                let p = monomial_product(&t, Monomial::new(x.0, x.1), Monomial::new(y.0, y.1));
                assert!(p.iter().all(|(m, _)| m.grade() == x.1 + y.1));
            }
        }
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::heisenberg::oracle_product;
    use crate::testutil::{element, elements, monomial, torsion_context};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn agrees_with_word_rewriting((_, xs) in elements(2, 4, 3)) {
            prop_assert_eq!(xs[0].multiply(&xs[1]).unwrap(), oracle_product(&xs[0], &xs[1]).unwrap());
        }

        #[test]
        fn associative((_, xs) in elements(3, 3, 2)) {
            let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
            prop_assert_eq!(&(x * y) * z, x * &(y * z));
        }

        #[test]
        fn jacobi((ctx, xs) in elements(3, 3, 2)) {
            let br = |a: &Element, b: &Element| a.commutator(b).unwrap();
            let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
            let sum = &(&br(x, &br(y, z)) + &br(y, &br(z, x))) + &br(z, &br(x, y));
            prop_assert_eq!(sum, Element::zero(&ctx));
        }

        #[test]
        fn grades_add(ctx in torsion_context(6), x in monomial(6), y in monomial(6)) {
            for (m, _) in monomial_product(&ctx, x, y) {
                prop_assert_eq!(m.grade(), x.grade() + y.grade());
            }
        }

        #[test]
        fn specialization_commutes_with_products(
            p in 2usize..=6,
            x in element(ScalarContext::generic(), 3, 3),
            y in element(ScalarContext::generic(), 3, 3),
        ) {
            let t = ScalarContext::torsion(p).unwrap();
            let spec = |e: &Element| Element::from_terms(
                &t,
                e.terms().map(|(m, c)| (*m, c.specialize(&t).unwrap())),
            );
            prop_assert_eq!(spec(&(&x * &y)), &spec(&x) * &spec(&y));
        }
    }
}
