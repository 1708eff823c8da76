use serde::Serialize;

use crate::error::Result;
use crate::heisenberg::{Element, Monomial};
use crate::qscalar::ScalarContext;

/// Which spanning set counts as the Lie-polynomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassificationRule {
    /// Every `C^n` with `n >= 1` is a Lie polynomial.
    #[default]
    Table3,
    /// Excludes `C^n` with `n >= 2` and `n - 1 ≡ 0 (mod p)`.
    Definition2Literal,
    /// Excludes `C^n` with `n ≡ 0 (mod p)`: no commutator of basis
    /// monomials has such a term, so the bracket closure never reaches them.
    Verified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialTag {
    LiePolynomial,
    NotLie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialClass {
    pub tag: MonomialTag,
    /// Meaningful only for `NotLie`.
    pub in_n: bool,
    /// Short description of the deciding row.
    pub row: &'static str,
}

impl MonomialClass {
    fn lie(row: &'static str) -> Self {
        MonomialClass {
            tag: MonomialTag::LiePolynomial,
            in_n: false,
            row,
        }
    }

    fn not_lie(in_n: bool, row: &'static str) -> Self {
        MonomialClass {
            tag: MonomialTag::NotLie,
            in_n,
            row,
        }
    }

    pub fn is_lie(&self) -> bool {
        self.tag == MonomialTag::LiePolynomial
    }
}

/// `m` lies in `N`: both exponents positive multiples of `p`.
pub fn in_n(p: usize, m: Monomial) -> bool {
    let p = p as u32;
    let l = m.d.unsigned_abs();
    m.k >= 1 && l >= 1 && m.k.is_multiple_of(p) && l.is_multiple_of(p)
}

pub fn classify_monomial(ctx: &ScalarContext, m: Monomial) -> Result<MonomialClass> {
    classify_with(ctx, m, ClassificationRule::Table3)
}

pub fn classify_with(
    ctx: &ScalarContext,
    m: Monomial,
    rule: ClassificationRule,
) -> Result<MonomialClass> {
    let p = ctx.require_torsion("monomial classification")?;
    let l = m.d.unsigned_abs();
    let p32 = p as u32;
    Ok(match (m.k, l) {
        (0, 0) => MonomialClass::not_lie(false, "grade 0: the identity"),
        (k, 0) => {
            if rule == ClassificationRule::Definition2Literal && k >= 2 && (k - 1) % p32 == 0 {
                MonomialClass::not_lie(false, "grade 0: C^n with n-1 ≡ 0 mod p (literal reading)")
            } else if rule == ClassificationRule::Verified && k % p32 == 0 {
                MonomialClass::not_lie(false, "grade 0: C^n with n ≡ 0 mod p (central power)")
            } else {
                MonomialClass::lie("grade 0: C^k, k >= 1")
            }
        }
        (0, 1) => MonomialClass::lie("grade ±1: generator"),
        (0, _) => MonomialClass::not_lie(false, "grade ±l, l >= 2: pure power of A or B"),
        (_, _) if in_n(p, m) => {
            MonomialClass::not_lie(true, "grade ±np: C-exponent ≡ 0 mod p (subspace N)")
        }
        (_, _) => MonomialClass::lie("grade ±l: C^k decorated, not both exponents ≡ 0 mod p"),
    })
}

/// `(residual == 0, residual)` where the residual collects terms on
/// monomials that are not Lie polynomials.
pub fn is_lie_polynomial(x: &Element) -> Result<(bool, Element)> {
    is_lie_polynomial_with(x, ClassificationRule::Table3)
}

pub fn is_lie_polynomial_with(x: &Element, rule: ClassificationRule) -> Result<(bool, Element)> {
    let ctx = x.context();
    ctx.require_torsion("Lie polynomial membership")?;
    let mut keep = Vec::new();
    for m in x.support() {
        if !classify_with(ctx, m, rule)?.is_lie() {
            keep.push(m);
        }
    }
    let residual = x.filter(|m| keep.contains(m));
    Ok((residual.is_zero(), residual))
}

/// Component of `x` on `N`.
pub fn project_n(x: &Element) -> Result<Element> {
    let p = x.context().require_torsion("projection onto N")?;
    Ok(x.filter(|m| in_n(p, *m)))
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::{monomial, torsion_context};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn commutators_avoid_n(ctx in torsion_context(5), x in monomial(8), y in monomial(8)) {
            let c = Element::monomial(&ctx, x).commutator(&Element::monomial(&ctx, y)).unwrap();
            prop_assert!(project_n(&c).unwrap().is_zero());
        }

        #[test]
        fn lie_brackets_stay_lie(ctx in torsion_context(5), x in monomial(6), y in monomial(6)) {
            let rule = ClassificationRule::Verified;
            prop_assume!(classify_with(&ctx, x, rule).unwrap().is_lie());
            prop_assume!(classify_with(&ctx, y, rule).unwrap().is_lie());
            let c = Element::monomial(&ctx, x).commutator(&Element::monomial(&ctx, y)).unwrap();
            let (ok, residual) = is_lie_polynomial_with(&c, rule).unwrap();
            prop_assert!(ok, "[{}, {}] leaves {}", x, y, residual);
        }
    }
}
