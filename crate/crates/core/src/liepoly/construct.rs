//! Explicit Lie-polynomial constructions of basis monomials.

use std::fmt;

use serde::Serialize;

use super::bracket::BracketExpr;
use super::classify::{classify_with, ClassificationRule};
use crate::error::{Error, Result};
use crate::heisenberg::{Element, Monomial};
use crate::qscalar::{q_int, Scalar, ScalarContext};

use BracketExpr::{A, B};

fn one_minus_q_pow(ctx: &ScalarContext, e: i64) -> Scalar {
    &ctx.one() - &ctx.q_pow(e)
}

fn q_minus_one(ctx: &ScalarContext) -> Scalar {
    &ctx.q() - &ctx.one()
}

fn one_minus_q(ctx: &ScalarContext) -> Scalar {
    &ctx.one() - &ctx.q()
}

fn inv(s: &Scalar, what: &str) -> Result<Scalar> {
    s.inv()
        .map_err(|_| Error::Precondition(format!("{what} vanishes")))
}

fn congruent_zero(ctx: &ScalarContext, n: u32) -> bool {
    ctx.order().is_some_and(|p| (n as usize).is_multiple_of(p))
}

fn require_not_zero_mod(ctx: &ScalarContext, n: u32, name: &str) -> Result<()> {
    if congruent_zero(ctx, n) {
        let p = ctx.order().unwrap_or(0);
        return Err(Error::Precondition(format!("{name} = {n} ≡ 0 mod {p}")));
    }
    Ok(())
}

fn require_zero_mod(ctx: &ScalarContext, n: u32, name: &str) -> Result<usize> {
    let p = ctx.require_torsion("this construction")?;
    if !(n as usize).is_multiple_of(p) {
        return Err(Error::Precondition(format!("{name} = {n} ≢ 0 mod {p}")));
    }
    Ok(p)
}

/// `[B, [B, A]]`.
fn bba() -> BracketExpr {
    BracketExpr::bracket(B, BracketExpr::bracket(B, A))
}

/// `[[B, A], A]`.
fn baa() -> BracketExpr {
    BracketExpr::bracket(BracketExpr::bracket(B, A), A)
}

/// `((-ad C)^k ∘ (-ad A)^{l+1})(B)`.
pub fn base_a_expr(k: u32, l: u32) -> BracketExpr {
    let inner = BracketExpr::neg_ad_pow(&A, l + 1, B);
    BracketExpr::neg_ad_pow(&BracketExpr::c(), k, inner)
}

/// `((ad B)^{l-1} ∘ (ad C)^k)([B, [B, A]])`.
pub fn base_b_expr(k: u32, l: u32) -> BracketExpr {
    let inner = BracketExpr::ad_pow(&BracketExpr::c(), k, bba());
    BracketExpr::ad_pow(&B, l.saturating_sub(1), inner)
}

/// `((ad B) ∘ (-ad C)^k)([[B, A], A])`.
pub fn base_g_expr(k: u32) -> BracketExpr {
    let inner = BracketExpr::neg_ad_pow(&BracketExpr::c(), k, baa());
    BracketExpr::bracket(B, inner)
}

fn check_l(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    Ok(())
}

pub fn base_a(ctx: &ScalarContext, k: u32, l: u32) -> Result<Element> {
    check_l(l)?;
    base_a_expr(k, l).eval(ctx)
}

pub fn base_b(ctx: &ScalarContext, k: u32, l: u32) -> Result<Element> {
    check_l(l)?;
    base_b_expr(k, l).eval(ctx)
}

pub fn base_g(ctx: &ScalarContext, k: u32) -> Result<Element> {
    base_g_expr(k).eval(ctx)
}

/// `-(1-q)^l (q^l-1)^k C^{k+1} A^l`.
pub fn base_a_closed(ctx: &ScalarContext, k: u32, l: u32) -> Element {
    let s = -(&one_minus_q(ctx).pow(l) * &(-one_minus_q_pow(ctx, l as i64)).pow(k));
    Element::term(ctx, Monomial::c_a(k + 1, l), s)
}

/// `(q-1)^{k+1} (1-q^{k+1})^{l-1} B^l C^{k+1}`.
pub fn base_b_closed(ctx: &ScalarContext, k: u32, l: u32) -> Element {
    let s = &q_minus_one(ctx).pow(k + 1) * &one_minus_q_pow(ctx, k as i64 + 1).pow(l - 1);
    Element::term(ctx, Monomial::b_c(l, k + 1), s)
}

/// `q^{-k} (q-1)^{k+1} (q {k}_q C^{k+1} - {k+1}_q C^{k+2})`, as stated for
/// `base_g`. Direct evaluation disagrees; see [`base_g_direct`].
pub fn base_g_closed(ctx: &ScalarContext, k: u32) -> Element {
    let pre = &ctx.q_pow(-(k as i64)) * &q_minus_one(ctx).pow(k + 1);
    Element::from_terms(
        ctx,
        [
            (Monomial::c_pow(k + 1), &(&ctx.q() * &q_int(ctx, k)) * &pre),
            (Monomial::c_pow(k + 2), -(&q_int(ctx, k + 1) * &pre)),
        ],
    )
}

/// `q^{-(k+1)} (q-1)^{k+1} ({k+1}_q C^{k+1} - {k+2}_q C^{k+2})`, the value
/// of `base_g` computed from the defining relation.
pub fn base_g_direct(ctx: &ScalarContext, k: u32) -> Element {
    let pre = &ctx.q_pow(-(k as i64 + 1)) * &q_minus_one(ctx).pow(k + 1);
    Element::from_terms(
        ctx,
        [
            (Monomial::c_pow(k + 1), &q_int(ctx, k + 1) * &pre),
            (Monomial::c_pow(k + 2), -(&q_int(ctx, k + 2) * &pre)),
        ],
    )
}

/// `q^k Σ_{i<=k} (q-1)^{-(i+1)} base_g(i)`; claimed to equal
/// `-{k+1}_q C^{k+2}`.
pub fn base_g_sum(ctx: &ScalarContext, k: u32) -> Result<Element> {
    let mut acc = Element::zero(ctx);
    for i in 0..=k {
        let s = inv(&q_minus_one(ctx).pow(i + 1), "q - 1")?;
        acc = &acc + &base_g(ctx, i)?.scale(&s);
    }
    Ok(acc.scale(&ctx.q_pow(k as i64)))
}

/// `-(1-q)^{-l} (q^l-1)^{-k} base_a(k, l)`, which is `C^{k+1} A^l` when
/// `l ≢ 0 (mod p)`.
pub fn obase_a_expr(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    check_l(l)?;
    require_not_zero_mod(ctx, l, "l")?;
    let d = &one_minus_q(ctx).pow(l) * &(-one_minus_q_pow(ctx, l as i64)).pow(k);
    Ok(base_a_expr(k, l).scaled(-inv(&d, "(1-q)^l (q^l-1)^k")?))
}

/// `(q-1)^{-k-1} (1-q^{k+1})^{1-l} base_b(k, l)`, which is `B^l C^{k+1}`
/// when `k+1 ≢ 0 (mod p)`.
pub fn obase_b_expr(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    check_l(l)?;
    require_not_zero_mod(ctx, k + 1, "k+1")?;
    let d = &q_minus_one(ctx).pow(k + 1) * &one_minus_q_pow(ctx, k as i64 + 1).pow(l - 1);
    Ok(base_b_expr(k, l).scaled(inv(&d, "(q-1)^{k+1} (1-q^{k+1})^{l-1}")?))
}

/// `q^k / (1-q^{k+1}) Σ_{i<=k} (q-1)^{-i} base_g(i)`, claimed to be
/// `C^{k+2}` when `k+1 ≢ 0 (mod p)`.
pub fn obase_g_expr(ctx: &ScalarContext, k: u32) -> Result<BracketExpr> {
    require_not_zero_mod(ctx, k + 1, "k+1")?;
    let pre = &ctx.q_pow(k as i64) * &inv(&one_minus_q_pow(ctx, k as i64 + 1), "1-q^{k+1}")?;
    let parts = (0..=k)
        .map(|i| {
            let s = inv(&q_minus_one(ctx).pow(i), "q - 1")?;
            Ok((&pre * &s, base_g_expr(i)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BracketExpr::Sum(parts))
}

pub fn obase_a(ctx: &ScalarContext, k: u32, l: u32) -> Result<Element> {
    obase_a_expr(ctx, k, l)?.eval(ctx)
}

pub fn obase_b(ctx: &ScalarContext, k: u32, l: u32) -> Result<Element> {
    obase_b_expr(ctx, k, l)?.eval(ctx)
}

pub fn obase_g(ctx: &ScalarContext, k: u32) -> Result<Element> {
    obase_g_expr(ctx, k)?.eval(ctx)
}

/// `[obase_a(k, l-1), A]`; equals `(1-q^{k+1}) C^{k+1} A^l` when
/// `l ≡ 0` and `k+1 ≢ 0 (mod p)`.
pub fn special_a_expr(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    require_zero_mod(ctx, l, "l")?;
    require_not_zero_mod(ctx, k + 1, "k+1")?;
    Ok(BracketExpr::bracket(obase_a_expr(ctx, k, l - 1)?, A))
}

/// `[obase_b(k-1, l), C]`; equals `(1-q^l) B^l C^{k+1}` when `k+1 ≡ 0`
/// and `l ≢ 0 (mod p)`.
pub fn special_b_expr(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    require_zero_mod(ctx, k + 1, "k+1")?;
    require_not_zero_mod(ctx, l, "l")?;
    Ok(BracketExpr::bracket(
        obase_b_expr(ctx, k - 1, l)?,
        BracketExpr::c(),
    ))
}

/// Named bracket recipes for basis monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    Generator,
    Commutator,
    /// Sum of `base_g` terms for `C^{k+2}`, `k+1 ≢ 0`.
    GSum,
    /// `[C^k A, B C]` for `C^{k+2}`, `k+1 ≡ 0`.
    Kappa,
    /// `C^{k+2}` from `[C^k A, B C]` minus a multiple of `C^{k+1}`.
    KappaStep,
    /// Normalized `base_a` for `C^{k+1} A^l`, `l ≢ 0`.
    ObaseA,
    /// Extra `ad A` for `C^{k+1} A^{np}`, `k+1 ≢ 0`.
    ObaseANp,
    /// Normalized `base_b` for `B^l C^{k+1}`, `k+1 ≢ 0`.
    ObaseB,
    /// Extra `-ad C` for `B^l C^{np}`, `l ≢ 0`.
    ObaseBNp,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

/// `C^{k+2}` by the `base_g` sum, `k+1 ≢ 0 (mod p)`.
pub fn combase_c_sum(ctx: &ScalarContext, k: u32) -> Result<BracketExpr> {
    require_not_zero_mod(ctx, k + 1, "k+1")?;
    let pre = -(&(&ctx.q_pow(k as i64) * &one_minus_q(ctx))
        * &inv(&one_minus_q_pow(ctx, k as i64 + 1), "1-q^{k+1}")?);
    let parts = (0..=k)
        .map(|i| {
            let s = inv(&q_minus_one(ctx).pow(i + 1), "q - 1")?;
            Ok((&pre * &s, base_g_expr(i)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BracketExpr::Sum(parts))
}

/// `[ base_a(k-1, 1)/(q-1)^k, [B,[B,A]]/(q-1) ]`, which is
/// `[C^k A, B C] = C^{k+2}` when `k+1 ≡ 0 (mod p)`.
pub fn combase_c_kappa(ctx: &ScalarContext, k: u32) -> Result<BracketExpr> {
    require_zero_mod(ctx, k + 1, "k+1")?;
    let left = base_a_expr(k - 1, 1).scaled(inv(&q_minus_one(ctx).pow(k), "q - 1")?);
    let right = bba().scaled(inv(&q_minus_one(ctx), "q - 1")?);
    Ok(BracketExpr::bracket(left, right))
}

/// `-base_a(k, l) / ((1-q)^l (q^l-1)^k) = C^{k+1} A^l`, `l ≢ 0`.
pub fn combase_ca(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    obase_a_expr(ctx, k, l)
}

/// `C^{k+1} A^{np}` via `(ad A ∘ (-ad C)^k ∘ (-ad A)^{np})(B)`,
/// `k+1 ≢ 0`.
pub fn combase_ca_np(ctx: &ScalarContext, k: u32, np: u32) -> Result<BracketExpr> {
    require_zero_mod(ctx, np, "l")?;
    require_not_zero_mod(ctx, k + 1, "k+1")?;
    if np == 0 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    let inner = BracketExpr::neg_ad_pow(&A, np, B);
    let inner = BracketExpr::neg_ad_pow(&BracketExpr::c(), k, inner);
    let e = BracketExpr::bracket(A, inner);
    let num = one_minus_q(ctx).powi(1 - np as i64)?;
    let den = &one_minus_q_pow(ctx, k as i64 + 1) * &(-one_minus_q_pow(ctx, np as i64 - 1)).pow(k);
    Ok(e.scaled(&num * &inv(&den, "(1-q^{k+1}) (q^{np-1}-1)^k")?))
}

/// `base_b(k, l) / ((q-1)^{k+1} (1-q^{k+1})^{l-1}) = B^l C^{k+1}`,
/// `k+1 ≢ 0`.
pub fn combase_bc(ctx: &ScalarContext, k: u32, l: u32) -> Result<BracketExpr> {
    obase_b_expr(ctx, k, l)
}

/// `B^l C^{np}` via `(-ad C ∘ (ad B)^{l-1} ∘ (ad C)^{np-2})([B,[B,A]])`,
/// `l ≢ 0`.
pub fn combase_bc_np(ctx: &ScalarContext, l: u32, np: u32) -> Result<BracketExpr> {
    check_l(l)?;
    require_zero_mod(ctx, np, "k+1")?;
    require_not_zero_mod(ctx, l, "l")?;
    if np < 2 {
        return Err(Error::InvalidArgument("C-exponent must be >= 2".into()));
    }
    let inner = BracketExpr::ad_pow(&BracketExpr::c(), np - 2, bba());
    let inner = BracketExpr::ad_pow(&B, l - 1, inner);
    let e = BracketExpr::neg_ad_pow(&BracketExpr::c(), 1, inner);
    let den = &(&one_minus_q_pow(ctx, l as i64) * &q_minus_one(ctx).pow(np - 1))
        * &one_minus_q_pow(ctx, np as i64 - 1).pow(l - 1);
    Ok(e.scaled(inv(&den, "(1-q^l) (q-1)^{np-1} (1-q^{np-1})^{l-1}")?))
}

/// `C^{k+2}` from `C^{k+1}` and `[C^k A, B C]`:
/// `(q-1)[C^k A, BC] = (q - q^{-(k+1)}) C^{k+2} + (q^{-(k+1)} - 1) C^{k+1}`.
/// Needs `k+2 ≢ 0 (mod p)`.
fn kappa_step(ctx: &ScalarContext, k: u32) -> Result<BracketExpr> {
    let lead = &ctx.q() - &ctx.q_pow(-(k as i64 + 1));
    let lead_inv = inv(&lead, "q - q^{-(k+1)}")?;
    let ca = construct_basis_element(ctx, Monomial::c_a(k, 1))?.expr;
    let bc = construct_basis_element(ctx, Monomial::b_c(1, 1))?.expr;
    let kappa = BracketExpr::bracket(ca, bc);
    let mut parts = vec![(&q_minus_one(ctx) * &lead_inv, kappa)];
    let tail = &ctx.q_pow(-(k as i64 + 1)) - &ctx.one();
    if !tail.is_zero() {
        let prev = construct_basis_element(ctx, Monomial::c_pow(k + 1))?.expr;
        parts.push((-(&tail * &lead_inv), prev));
    }
    Ok(BracketExpr::Sum(parts))
}

/// A bracket witness for one basis monomial.
#[derive(Clone, Debug)]
pub struct Construction {
    pub monomial: Monomial,
    pub recipe: Recipe,
    pub expr: BracketExpr,
    pub value: Element,
}

/// Builds `m` as a Lie polynomial and evaluates the witness.
///
/// `C^n` with `n ≡ 0 (mod p)` has no bracket construction here; the
/// bracket closure never reaches it, so it is rejected.
pub fn construct_basis_element(ctx: &ScalarContext, m: Monomial) -> Result<Construction> {
    let p = ctx.require_torsion("basis construction")? as u32;
    let class = classify_with(ctx, m, ClassificationRule::Table3)?;
    if !class.is_lie() {
        return Err(Error::NotLie {
            monomial: m.to_string(),
            reason: class.row.to_string(),
        });
    }
    let (recipe, expr) = match (m.k, m.d) {
        (0, -1) => (Recipe::Generator, A),
        (0, 1) => (Recipe::Generator, B),
        (1, 0) => (Recipe::Commutator, BracketExpr::c()),
        (n, 0) => {
            let k = n - 2;
            if (k + 1) % p == 0 {
                (Recipe::Kappa, combase_c_kappa(ctx, k)?)
            } else if n % p != 0 {
                (Recipe::KappaStep, kappa_step(ctx, k)?)
            } else {
                return Err(Error::NotLie {
                    monomial: m.to_string(),
                    reason: format!("C^{n} with {n} ≡ 0 mod {p} is outside the bracket closure"),
                });
            }
        }
        (k1, d) if d < 0 => {
            let (k, l) = (k1 - 1, d.unsigned_abs());
            if l % p != 0 {
                (Recipe::ObaseA, combase_ca(ctx, k, l)?)
            } else {
                (Recipe::ObaseANp, combase_ca_np(ctx, k, l)?)
            }
        }
        (k1, d) => {
            let (k, l) = (k1 - 1, d as u32);
            if k1 % p != 0 {
                (Recipe::ObaseB, combase_bc(ctx, k, l)?)
            } else {
                (Recipe::ObaseBNp, combase_bc_np(ctx, l, k1)?)
            }
        }
    };
    let value = expr.eval(ctx)?;
    Ok(Construction {
        monomial: m,
        recipe,
        expr,
        value,
    })
}
