//! Conversions between the `C`-basis and ordered `B^a A^b` words.

use super::free::{BaNormalForm, FreePoly, FreeWord, Letter, Reducer};
use super::{Element, Monomial};
use crate::error::Result;
use crate::qscalar::{struct_d, ScalarContext};

/// `B^a A^b` in the `C`-basis.
pub fn ba_to_cbasis(ctx: &ScalarContext, a: u32, b: u32) -> Element {
    if a == 0 {
        return Element::monomial(ctx, Monomial::c_a(0, b));
    }
    if b == 0 {
        return Element::monomial(ctx, Monomial::b_c(a, 0));
    }
    let l = a.min(b);
    Element::from_terms(
        ctx,
        (0..=l).map(|i| {
            let m = if a <= b {
                Monomial::c_a(i, b - a)
            } else {
                Monomial::b_c(a - b, i)
            };
            (m, struct_d(ctx, i, l).expect("index in range"))
        }),
    )
}

impl BaNormalForm {
    pub fn to_element(&self) -> Element {
        let ctx = self.context();
        let mut out = Element::zero(ctx);
        for (&(a, b), c) in self.terms() {
            for (m, s) in ba_to_cbasis(ctx, a, b).terms() {
                out.add_term(*m, c * s);
            }
        }
        out
    }
}

/// The factors of `m` as free polynomials: `B` per `B`, `AB - BA` per `C`,
/// `A` per `A`.
pub fn cbasis_factors(ctx: &ScalarContext, m: Monomial) -> Vec<FreePoly> {
    let mut out = Vec::new();
    out.extend((0..m.b_exp()).map(|_| FreePoly::letter(ctx, Letter::B)));
    out.extend((0..m.k).map(|_| FreePoly::c(ctx)));
    out.extend((0..m.a_exp()).map(|_| FreePoly::letter(ctx, Letter::A)));
    out
}

/// Expands `m` into words.
pub fn cbasis_to_free(ctx: &ScalarContext, m: Monomial) -> FreePoly {
    cbasis_factors(ctx, m)
        .iter()
        .fold(FreePoly::word(ctx, FreeWord::empty()), |acc, f| acc.mul(f))
}

/// `w` in the `C`-basis, through word reduction.
pub fn to_element(w: &FreePoly) -> Element {
    super::free::reduce_word(w).to_element()
}

fn append_monomial(red: &mut Reducer, form: &BaNormalForm, m: Monomial) -> BaNormalForm {
    let ctx = form.context().clone();
    cbasis_factors(&ctx, m)
        .iter()
        .fold(form.clone(), |acc, f| red.append_poly(&acc, f))
}

/// `x` on ordered words, by folding each monomial's factors.
pub fn element_to_ba(x: &Element) -> BaNormalForm {
    let ctx = x.context();
    let mut red = Reducer::new(ctx);
    let one = BaNormalForm::one(ctx);
    let mut out = BaNormalForm::zero(ctx);
    for (m, c) in x.terms() {
        let part = append_monomial(&mut red, &one, *m);
        for (key, s) in part.terms() {
            out.add_term(*key, c * s);
        }
    }
    out
}

/// `xy` computed by word rewriting alone, independent of the
/// structure constants used by [`Element::multiply`].
pub fn oracle_product(x: &Element, y: &Element) -> Result<Element> {
    let ctx = x.context();
    ctx.check_same(y.context())?;
    let mut red = Reducer::new(ctx);
    let left = element_to_ba(x);
    let mut out = BaNormalForm::zero(ctx);
    for (m, c) in y.terms() {
        let part = append_monomial(&mut red, &left, *m);
        for (key, s) in part.terms() {
            out.add_term(*key, c * s);
        }
    }
    Ok(out.to_element())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ba_small_cases() {
        let g = ScalarContext::generic();
        let inv = (&g.q() - &g.one()).inv().unwrap();
        // BA = (C - I)/(q - 1)
        let ba = ba_to_cbasis(&g, 1, 1);
        let expect = Element::from_terms(
            &g,
            [(Monomial::C, inv.clone()), (Monomial::IDENTITY, -&inv)],
        );
        assert_eq!(ba, expect);
        assert_eq!(
            ba_to_cbasis(&g, 0, 3),
            Element::monomial(&g, Monomial::new(0, -3))
        );
        // B^2 A = (BC - B)/(q - 1)
        let b2a = ba_to_cbasis(&g, 2, 1);
        let expect = Element::from_terms(
            &g,
            [(Monomial::new(1, 1), inv.clone()), (Monomial::B, -&inv)],
        );
        assert_eq!(b2a, expect);
        let words = FreePoly::word(&g, FreeWord::parse("BBA").unwrap());
        assert_eq!(to_element(&words), expect);
    }

    #[test]
    fn free_expansions() {
        let g = ScalarContext::generic();
        assert_eq!(cbasis_to_free(&g, Monomial::new(0, -2)).to_string(), "AA");
        let c = cbasis_to_free(&g, Monomial::C);
        assert_eq!(c, FreePoly::c(&g));
        let bc = cbasis_to_free(&g, Monomial::new(1, 1));
        let mut expect = FreePoly::word(&g, FreeWord::parse("BAB").unwrap());
        expect.add_term(FreeWord::parse("BBA").unwrap(), -g.one());
        assert_eq!(bc, expect);
    }

    #[test]
    fn round_trip_small_window() {
        let t = ScalarContext::torsion(2).unwrap();
        for k in 0..=3 {
            for d in -3..=3 {
                let m = Monomial::new(k, d);
                assert_eq!(to_element(&cbasis_to_free(&t, m)), Element::monomial(&t, m));
            }
        }
    }

    #[test]
    fn oracle_matches_structure_constants() {
        let t = ScalarContext::torsion(2).unwrap();
        let x = Element::monomial(&t, Monomial::new(1, -1));
        let y = Element::monomial(&t, Monomial::new(1, 1));
        assert_eq!(oracle_product(&x, &y).unwrap(), x.multiply(&y).unwrap());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::{context, monomial};

    proptest! {
        #[test]
        fn round_trip_through_words(ctx in context(), m in monomial(4)) {
            prop_assert_eq!(to_element(&cbasis_to_free(&ctx, m)), Element::monomial(&ctx, m));
            prop_assert_eq!(element_to_ba(&Element::monomial(&ctx, m)).to_element(), Element::monomial(&ctx, m));
        }
    }
}
