//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::heisenberg::{Element, FreeWord, Letter, Monomial};
use crate::qscalar::{Scalar, ScalarContext};

pub fn context() -> impl Strategy<Value = ScalarContext> {
    prop_oneof![
        Just(ScalarContext::generic()),
        (2usize..=6).prop_map(|p| ScalarContext::torsion(p).unwrap()),
    ]
}

pub fn torsion_context(max_p: usize) -> impl Strategy<Value = ScalarContext> {
    (2usize..=max_p).prop_map(|p| ScalarContext::torsion(p).unwrap())
}

pub fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    let d = max_exp as i32;
    (0..=max_exp, -d..=d).prop_map(|(k, d)| Monomial::new(k, d))
}

/// `c q^j` with small `c`, `j`.
pub fn scalar(ctx: ScalarContext) -> impl Strategy<Value = Scalar> {
    (-4i64..=4, -2i64..=2).prop_map(move |(c, j)| &ctx.int(c) * &ctx.q_pow(j))
}

pub fn element(
    ctx: ScalarContext,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = Element> {
    prop::collection::vec((monomial(max_exp), scalar(ctx.clone())), 0..=max_terms)
        .prop_map(move |ts| Element::from_terms(&ctx, ts))
}

/// A context together with `n` elements over it.
pub fn elements(
    n: usize,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = (ScalarContext, Vec<Element>)> {
    context().prop_flat_map(move |ctx| {
        let xs = prop::collection::vec(element(ctx.clone(), max_exp, max_terms), n);
        (Just(ctx), xs)
    })
}

pub fn word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 0..=max_len)
        .prop_map(FreeWord)
}
