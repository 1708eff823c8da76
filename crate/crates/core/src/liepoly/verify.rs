//! Exhaustive checks over bounded grids, reported as JSON.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value as Json};

use super::classify::{classify_with, in_n, project_n, ClassificationRule};
use super::closure::{lie_closure_layers, Window};
use super::construct::{
    base_a, base_a_closed, base_b, base_b_closed, base_g, base_g_closed, base_g_sum, combase_bc,
    combase_bc_np, combase_c_kappa, combase_c_sum, combase_ca, combase_ca_np,
    construct_basis_element, obase_a, obase_b, obase_g, special_a_expr, special_b_expr,
};
use super::is_lie_polynomial_with;
use crate::error::Result;
use crate::heisenberg::{oracle_product, Element, Monomial};
use crate::qscalar::{q_int, struct_c, struct_d, ScalarContext};
use crate::torsion::{
    ab_power_product, ba_power_product, displayed_simplified_product, multiply_fastpath,
    pow_product_identity,
};

/// Outcome of one claim over a finite grid.
#[derive(Clone, Debug)]
pub struct Report {
    pub claim: String,
    pub parameters: Json,
    pub pairs_checked: u64,
    pub violations: Vec<Json>,
    pub elapsed: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Json {
        json!({
            "claim": self.claim,
            "parameters": self.parameters,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "elapsed": self.elapsed,
        })
    }

    /// One summary line.
    pub fn summary(&self) -> String {
        format!(
            "{} {} ({} checked, {} violations, {:.2}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.claim,
            self.pairs_checked,
            self.violations.len(),
            self.elapsed
        )
    }
}

fn params(ctx: &ScalarContext, window: Window) -> Json {
    json!({"p": ctx.order(), "kmax": window.kmax, "dmax": window.dmax})
}

fn mono(ctx: &ScalarContext, m: Monomial) -> Element {
    Element::monomial(ctx, m)
}

/// Runs `check` on every ordered pair of window monomials in parallel;
/// violations keep grid order.
fn over_pairs<F>(ctx: &ScalarContext, window: Window, check: F) -> Result<(u64, Vec<Json>)>
where
    F: Fn(Monomial, Monomial) -> Result<Option<Json>> + Sync,
{
    ctx.require_torsion("grid verification")?;
    let ms = window.monomials();
    let pairs: Vec<(Monomial, Monomial)> = ms
        .iter()
        .flat_map(|x| ms.iter().map(move |y| (*x, *y)))
        .collect();
    let found: Vec<Option<Json>> = pairs
        .par_iter()
        .map(|(x, y)| check(*x, *y))
        .collect::<Result<_>>()?;
    Ok((pairs.len() as u64, found.into_iter().flatten().collect()))
}

fn timed<F>(claim: &str, parameters: Json, run: F) -> Result<Report>
where
    F: FnOnce() -> Result<(u64, Vec<Json>)>,
{
    let t = Instant::now();
    let (pairs_checked, violations) = run()?;
    Ok(Report {
        claim: claim.to_string(),
        parameters,
        pairs_checked,
        violations,
        elapsed: t.elapsed().as_secs_f64(),
    })
}

/// No commutator of two basis monomials has a term in `N`.
pub fn verify_no_n_leakage(ctx: &ScalarContext, window: Window) -> Result<Report> {
    timed("no-n-leakage", params(ctx, window), || {
        over_pairs(ctx, window, |x, y| {
            let c = mono(ctx, x).commutator(&mono(ctx, y))?;
            let leak = project_n(&c)?;
            Ok((!leak.is_zero()).then(
                || json!({"x": x.to_string(), "y": y.to_string(), "n_component": leak.to_string()}),
            ))
        })
    })
}

/// No commutator of two basis monomials has a `C^{np}` term.
pub fn verify_no_central_c_power(ctx: &ScalarContext, window: Window) -> Result<Report> {
    let p = ctx.require_torsion("grid verification")? as u32;
    timed("no-central-c-power", params(ctx, window), || {
        over_pairs(ctx, window, |x, y| {
            let c = mono(ctx, x).commutator(&mono(ctx, y))?;
            let hit = c.filter(|m| m.d == 0 && m.k > 0 && m.k % p == 0);
            Ok((!hit.is_zero()).then(
                || json!({"x": x.to_string(), "y": y.to_string(), "central_part": hit.to_string()}),
            ))
        })
    })
}

/// Products of homogeneous elements land in the summed grade.
pub fn verify_gradation(ctx: &ScalarContext, window: Window) -> Result<Report> {
    timed("gradation", params(ctx, window), || {
        over_pairs(ctx, window, |x, y| {
            let prod = mono(ctx, x).multiply(&mono(ctx, y))?;
            let want = x.grade() + y.grade();
            let bad: Vec<String> = prod
                .support()
                .filter(|m| m.grade() != want)
                .map(|m| m.to_string())
                .collect();
            Ok((!bad.is_empty())
                .then(|| json!({"x": x.to_string(), "y": y.to_string(), "off_grade": bad})))
        })
    })
}

/// The fast path agrees with the general product.
pub fn verify_fastpath(ctx: &ScalarContext, window: Window) -> Result<Report> {
    timed("fast-path", params(ctx, window), || {
        over_pairs(ctx, window, |x, y| {
            let (ex, ey) = (mono(ctx, x), mono(ctx, y));
            let general = ex.multiply(&ey)?;
            let fast = multiply_fastpath(&ex, &ey)?;
            Ok((general != fast).then(|| {
                json!({"x": x.to_string(), "y": y.to_string(),
                       "general": general.to_string(), "fast": fast.to_string()})
            }))
        })
    })
}

/// `[C^m A^n, B^s C^r]` with `m, r >= 1` has only terms with `C`-exponent
/// at least 2, and only `C`-powers when `n = s`.
pub fn verify_mixed_support(ctx: &ScalarContext, mrmax: u32, nmax: u32) -> Result<Report> {
    let parameters = json!({"p": ctx.order(), "mrmax": mrmax, "nmax": nmax});
    timed("positive-c-exponents", parameters, || {
        ctx.require_torsion("grid verification")?;
        let mut grid = Vec::new();
        for m in 1..=mrmax {
            for r in 1..=mrmax {
                for n in 1..=nmax {
                    for s in 1..=nmax {
                        grid.push((m, r, n, s));
                    }
                }
            }
        }
        let found: Vec<Option<Json>> = grid
            .par_iter()
            .map(|&(m, r, n, s)| {
                let x = Monomial::c_a(m, n);
                let y = Monomial::b_c(s, r);
                let f = mono(ctx, x).commutator(&mono(ctx, y))?;
                let bad: Vec<String> = f
                    .support()
                    .filter(|t| t.k < 2 || (n == s && t.d != 0))
                    .map(|t| t.to_string())
                    .collect();
                Ok((!bad.is_empty())
                    .then(|| json!({"x": x.to_string(), "y": y.to_string(), "bad_terms": bad})))
            })
            .collect::<Result<_>>()?;
        Ok((grid.len() as u64, found.into_iter().flatten().collect()))
    })
}

/// The displayed coefficient formulas for `[C^m A^n, B^s C^r]`, taken
/// literally (with the `q^{n(m+r)}`-type exponents as printed).
pub fn displayed_mixed_commutator(
    ctx: &ScalarContext,
    m: u32,
    n: u32,
    r: u32,
    s: u32,
) -> Result<Element> {
    let mut out = Element::zero(ctx);
    let (mi, ni, ri, si) = (m as i64, n as i64, r as i64, s as i64);
    if n == s {
        for i in 0..=n {
            let c = &struct_c(ctx, i, n)? - &(&ctx.q_pow(ni * (mi + ri)) * &struct_d(ctx, i, n)?);
            out.add_term(Monomial::c_pow(m + i + r), c);
        }
    } else if n < s {
        for i in 0..=n {
            let c = &(&ctx.q_pow((si - ni) * (mi + ni)) * &struct_c(ctx, i, n)?)
                - &(&ctx.q_pow(ni * (mi + ri)) * &struct_d(ctx, i, n)?);
            out.add_term(Monomial::b_c(s - n, m + i + r), c);
        }
    } else {
        for i in 0..=s {
            let c = &(&ctx.q_pow((ni - si) * (i as i64 + ri)) * &struct_c(ctx, i, s)?)
                - &(&ctx.q_pow(si * (mi + ri)) * &struct_d(ctx, i, s)?);
            out.add_term(Monomial::c_a(m + i + r, n - s), c);
        }
    }
    Ok(out)
}

pub fn verify_mixed_coefficients(ctx: &ScalarContext, mrmax: u32, nmax: u32) -> Result<Report> {
    let parameters = json!({"p": ctx.order(), "mrmax": mrmax, "nmax": nmax});
    timed("displayed-mixed-commutators", parameters, || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for m in 1..=mrmax {
            for r in 1..=mrmax {
                for n in 1..=nmax {
                    for s in 1..=nmax {
                        checked += 1;
                        let x = Monomial::c_a(m, n);
                        let y = Monomial::b_c(s, r);
                        let f = mono(ctx, x).commutator(&mono(ctx, y))?;
                        let shown = displayed_mixed_commutator(ctx, m, n, r, s)?;
                        if f != shown {
                            bad.push(json!({"x": x.to_string(), "y": y.to_string(),
                                            "computed": f.to_string(), "displayed": shown.to_string()}));
                        }
                    }
                }
            }
        }
        Ok((checked, bad))
    })
}

/// Commutators of claimed basis monomials lie in the span of the claimed
/// basis minus `A`, `B`.
pub fn verify_derived_algebra(
    ctx: &ScalarContext,
    window: Window,
    rule: ClassificationRule,
) -> Result<Report> {
    let mut parameters = params(ctx, window);
    parameters["rule"] = json!(rule);
    timed("derived-algebra", parameters, || {
        let in_basis = |m: Monomial| classify_with(ctx, m, rule).map(|c| c.is_lie());
        over_pairs(ctx, window, |x, y| {
            if !in_basis(x)? || !in_basis(y)? {
                return Ok(None);
            }
            let c = mono(ctx, x).commutator(&mono(ctx, y))?;
            let mut bad = Vec::new();
            for m in c.support() {
                if m == Monomial::A || m == Monomial::B || !in_basis(m)? {
                    bad.push(m.to_string());
                }
            }
            Ok((!bad.is_empty())
                .then(|| json!({"x": x.to_string(), "y": y.to_string(), "outside": bad})))
        })
    })
}

/// Every element of the bracket closure has zero residual on non-Lie
/// monomials.
pub fn verify_closure_soundness(
    ctx: &ScalarContext,
    depth: u32,
    window: Window,
    rule: ClassificationRule,
) -> Result<Report> {
    let mut parameters = params(ctx, window);
    parameters["depth"] = json!(depth);
    parameters["rule"] = json!(rule);
    timed("closure-soundness", parameters, || {
        let closure = lie_closure_layers(ctx, depth, window)?;
        let mut checked = 0;
        let mut bad = Vec::new();
        for (n, layer) in closure.layers.iter().enumerate() {
            for e in layer {
                checked += 1;
                let (ok, residual) =
                    is_lie_polynomial_with(&e.filter(|m| window.contains(*m)), rule)?;
                if !ok {
                    bad.push(json!({"leaves": n + 1, "element": e.to_string(),
                                    "residual": residual.to_string()}));
                }
            }
        }
        Ok((checked, bad))
    })
}

/// Every Lie-classified monomial of the window has an exact bracket witness.
pub fn verify_reachability(
    ctx: &ScalarContext,
    window: Window,
    rule: ClassificationRule,
) -> Result<Report> {
    let mut parameters = params(ctx, window);
    parameters["rule"] = json!(rule);
    timed("reachability", parameters, || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for m in window.monomials() {
            if !classify_with(ctx, m, rule)?.is_lie() {
                continue;
            }
            checked += 1;
            match construct_basis_element(ctx, m) {
                Ok(c) if c.value == mono(ctx, m) => {}
                Ok(c) => bad.push(json!({"monomial": m.to_string(), "recipe": c.recipe,
                                         "value": c.value.to_string()})),
                Err(e) => bad.push(json!({"monomial": m.to_string(), "error": e.to_string()})),
            }
        }
        Ok((checked, bad))
    })
}

/// The closure spans exactly the Lie-classified monomials of the window
/// that it reaches; lists classified-Lie monomials it misses and closure
/// pivots classified as not Lie.
pub fn verify_closure_matches_classification(
    ctx: &ScalarContext,
    depth: u32,
    window: Window,
    rule: ClassificationRule,
) -> Result<Report> {
    let mut parameters = params(ctx, window);
    parameters["depth"] = json!(depth);
    parameters["rule"] = json!(rule);
    timed("closure-vs-classification", parameters, || {
        let basis = lie_closure_layers(ctx, depth, window)?.basis;
        let mut checked = 0;
        let mut bad = Vec::new();
        for m in window.monomials() {
            checked += 1;
            let claimed = classify_with(ctx, m, rule)?.is_lie();
            let reached = basis.contains(&mono(ctx, m));
            if claimed != reached {
                bad.push(json!({"monomial": m.to_string(), "classified_lie": claimed,
                                "in_closure": reached}));
            }
        }
        Ok((checked, bad))
    })
}

/// `A^l B^l` and `B^l A^l` against the simplified identity, `p <= l <= lmax`.
pub fn verify_reduce_ab(ctx: &ScalarContext, lmax: u32) -> Result<Report> {
    let p = ctx.require_torsion("power products")? as u32;
    timed("reduce-ab", json!({"p": p, "lmax": lmax}), || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for l in p..=lmax {
            let stated = pow_product_identity(ctx, l)?;
            let a = mono(ctx, Monomial::c_a(0, l));
            let b = mono(ctx, Monomial::b_c(l, 0));
            for (name, general) in [("A^lB^l", a.multiply(&b)?), ("B^lA^l", b.multiply(&a)?)] {
                checked += 1;
                if general != stated {
                    bad.push(
                        json!({"l": l, "product": name, "general": general.to_string(),
                                    "stated": stated.to_string()}),
                    );
                }
            }
        }
        Ok((checked, bad))
    })
}

/// `A^l B^l`, `B^l A^l` by the central factorization against the general
/// product, `1 <= l <= lmax`.
pub fn verify_power_products(ctx: &ScalarContext, lmax: u32) -> Result<Report> {
    let p = ctx.require_torsion("power products")?;
    timed("power-products", json!({"p": p, "lmax": lmax}), || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for l in 1..=lmax {
            let a = mono(ctx, Monomial::c_a(0, l));
            let b = mono(ctx, Monomial::b_c(l, 0));
            for (name, general, fast) in [
                ("A^lB^l", a.multiply(&b)?, ab_power_product(ctx, l)?),
                ("B^lA^l", b.multiply(&a)?, ba_power_product(ctx, l)?),
            ] {
                checked += 1;
                if general != fast {
                    bad.push(json!({"l": l, "product": name}));
                }
            }
        }
        Ok((checked, bad))
    })
}

type Identity = fn(&ScalarContext, u32, u32, u32) -> Result<Option<(Element, Element)>>;

fn zero_mod(n: u32, p: u32) -> bool {
    n.is_multiple_of(p)
}

fn one_minus_q_pow(ctx: &ScalarContext, e: u32) -> crate::qscalar::Scalar {
    &ctx.one() - &ctx.q_pow(e as i64)
}

/// The constructor identities, each as `(name, f)` where `f(ctx, p, k, l)`
/// returns `(computed, claimed)` when the congruence conditions hold.
const IDENTITIES: &[(&str, Identity)] = &[
    ("base-a-closed-form", |ctx, _, k, l| {
        Ok(Some((base_a(ctx, k, l)?, base_a_closed(ctx, k, l))))
    }),
    ("base-b-closed-form", |ctx, _, k, l| {
        Ok(Some((base_b(ctx, k, l)?, base_b_closed(ctx, k, l))))
    }),
    ("base-g-closed-form", |ctx, _, k, l| {
        if l != 1 {
            return Ok(None);
        }
        Ok(Some((base_g(ctx, k)?, base_g_closed(ctx, k))))
    }),
    ("base-g-sum", |ctx, _, k, l| {
        if l != 1 {
            return Ok(None);
        }
        let want = Element::term(ctx, Monomial::c_pow(k + 2), -q_int(ctx, k + 1));
        Ok(Some((base_g_sum(ctx, k)?, want)))
    }),
    ("normalized-ca", |ctx, p, k, l| {
        if zero_mod(l, p) {
            return Ok(None);
        }
        Ok(Some((
            obase_a(ctx, k, l)?,
            mono(ctx, Monomial::c_a(k + 1, l)),
        )))
    }),
    ("normalized-bc", |ctx, p, k, l| {
        if zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((
            obase_b(ctx, k, l)?,
            mono(ctx, Monomial::b_c(l, k + 1)),
        )))
    }),
    ("normalized-c-power", |ctx, p, k, l| {
        if l != 1 || zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((obase_g(ctx, k)?, mono(ctx, Monomial::c_pow(k + 2)))))
    }),
    ("special-ca", |ctx, p, k, l| {
        if !zero_mod(l, p) || zero_mod(k + 1, p) {
            return Ok(None);
        }
        let want = Element::term(ctx, Monomial::c_a(k + 1, l), one_minus_q_pow(ctx, k + 1));
        Ok(Some((special_a_expr(ctx, k, l)?.eval(ctx)?, want)))
    }),
    ("special-bc", |ctx, p, k, l| {
        if !zero_mod(k + 1, p) || zero_mod(l, p) {
            return Ok(None);
        }
        let want = Element::term(ctx, Monomial::b_c(l, k + 1), one_minus_q_pow(ctx, l));
        Ok(Some((special_b_expr(ctx, k, l)?.eval(ctx)?, want)))
    }),
    ("construct-c-power-sum", |ctx, p, k, l| {
        if l != 1 || zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_c_sum(ctx, k)?.eval(ctx)?,
            mono(ctx, Monomial::c_pow(k + 2)),
        )))
    }),
    ("construct-c-power-kappa", |ctx, p, k, l| {
        if l != 1 || !zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_c_kappa(ctx, k)?.eval(ctx)?,
            mono(ctx, Monomial::c_pow(k + 2)),
        )))
    }),
    ("construct-ca", |ctx, p, k, l| {
        if zero_mod(l, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_ca(ctx, k, l)?.eval(ctx)?,
            mono(ctx, Monomial::c_a(k + 1, l)),
        )))
    }),
    ("construct-ca-np", |ctx, p, k, l| {
        if !zero_mod(l, p) || zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_ca_np(ctx, k, l)?.eval(ctx)?,
            mono(ctx, Monomial::c_a(k + 1, l)),
        )))
    }),
    ("construct-bc", |ctx, p, k, l| {
        if zero_mod(k + 1, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_bc(ctx, k, l)?.eval(ctx)?,
            mono(ctx, Monomial::b_c(l, k + 1)),
        )))
    }),
    ("construct-bc-np", |ctx, p, k, l| {
        // `k` plays the role of the C-exponent here.
        if k < 2 || !zero_mod(k, p) || zero_mod(l, p) {
            return Ok(None);
        }
        Ok(Some((
            combase_bc_np(ctx, l, k)?.eval(ctx)?,
            mono(ctx, Monomial::b_c(l, k)),
        )))
    }),
];

/// Names of the identities checked by [`verify_constructor_identities`].
pub fn constructor_identity_names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|(n, _)| *n).collect()
}

/// Each constructor identity over `0 <= k <= max`, `1 <= l <= max`, one
/// report per identity.
pub fn verify_constructor_identities(ctx: &ScalarContext, max: u32) -> Result<Vec<Report>> {
    let p = ctx.require_torsion("constructor identities")? as u32;
    let grid: Vec<(u32, u32)> = (0..=max)
        .flat_map(|k| (1..=max).map(move |l| (k, l)))
        .collect();
    IDENTITIES
        .iter()
        .map(|(name, f)| {
            timed(name, json!({"p": p, "max": max}), || {
                let found: Vec<Option<Option<Json>>> = grid
                    .par_iter()
                    .map(|&(k, l)| {
                        Ok(f(ctx, p, k, l)?.map(|(got, want)| {
                            (got != want).then(|| {
                                json!({"k": k, "l": l, "computed": got.to_string(),
                                       "claimed": want.to_string()})
                            })
                        }))
                    })
                    .collect::<Result<_>>()?;
                let checked = found.iter().filter(|x| x.is_some()).count() as u64;
                Ok((checked, found.into_iter().flatten().flatten().collect()))
            })
        })
        .collect()
}

/// The displayed simplified mixed products (exponents at least `p`)
/// against the general product.
pub fn verify_displayed_products(ctx: &ScalarContext, window: Window) -> Result<Report> {
    timed("displayed-simplified-products", params(ctx, window), || {
        // Only pairs the display covers count as checked.
        let covered = AtomicU64::new(0);
        let (_, bad) = over_pairs(ctx, window, |x, y| {
            let Some(shown) = displayed_simplified_product(ctx, x, y)? else {
                return Ok(None);
            };
            covered.fetch_add(1, Ordering::Relaxed);
            let general = mono(ctx, x).multiply(&mono(ctx, y))?;
            Ok((general != shown).then(|| {
                json!({"x": x.to_string(), "y": y.to_string(),
                       "general": general.to_string(), "displayed": shown.to_string()})
            }))
        })?;
        Ok((covered.into_inner(), bad))
    })
}

/// A random element with at most `max_terms` terms, exponents at most
/// `max_exp`, and coefficients `c q^j` with small `c`, `j`.
pub fn random_element<R: Rng>(
    ctx: &ScalarContext,
    rng: &mut R,
    max_exp: u32,
    max_terms: usize,
) -> Element {
    let n = rng.gen_range(1..=max_terms.max(1));
    let mut x = Element::zero(ctx);
    for _ in 0..n {
        let k = rng.gen_range(0..=max_exp);
        let d = rng.gen_range(-(max_exp as i32)..=max_exp as i32);
        let c = loop {
            let c = rng.gen_range(-4i64..=4);
            if c != 0 {
                break c;
            }
        };
        let j = rng.gen_range(-2i64..=2);
        x.add_term(Monomial::new(k, d), &ctx.int(c) * &ctx.q_pow(j));
    }
    x
}

/// The structure-constant product against the word-rewriting product on
/// `pairs` seeded random pairs.
pub fn verify_oracle_equivalence(
    ctx: &ScalarContext,
    pairs: usize,
    seed: u64,
    max_exp: u32,
    max_terms: usize,
) -> Result<Report> {
    let parameters = json!({"p": ctx.order(), "pairs": pairs, "seed": seed,
                            "max_exp": max_exp, "max_terms": max_terms});
    timed("oracle-equivalence", parameters, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inputs: Vec<(Element, Element)> = (0..pairs)
            .map(|_| {
                let x = random_element(ctx, &mut rng, max_exp, max_terms);
                let y = random_element(ctx, &mut rng, max_exp, max_terms);
                (x, y)
            })
            .collect();
        let found: Vec<Option<Json>> = inputs
            .par_iter()
            .map(|(x, y)| {
                let fast = x.multiply(y)?;
                let slow = oracle_product(x, y)?;
                Ok((fast != slow).then(|| {
                    json!({"x": x.to_string(), "y": y.to_string(),
                           "multiply": fast.to_string(), "rewriting": slow.to_string()})
                }))
            })
            .collect::<Result<_>>()?;
        Ok((pairs as u64, found.into_iter().flatten().collect()))
    })
}

/// Whether `m` would be flagged by [`verify_no_n_leakage`].
pub fn is_n_monomial(ctx: &ScalarContext, m: Monomial) -> bool {
    ctx.order().is_some_and(|p| in_n(p, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids_pass() {
        let t = ScalarContext::torsion(3).unwrap();
        let w = Window::new(4, 4);
        assert!(verify_no_n_leakage(&t, w).unwrap().passed());
        assert!(verify_gradation(&t, w).unwrap().passed());
        assert!(verify_fastpath(&t, w).unwrap().passed());
        assert!(verify_mixed_support(&t, 3, 3).unwrap().passed());
        assert!(verify_power_products(&t, 7).unwrap().passed());
    }

    #[test]
    fn constructor_identities_that_hold() {
        let t = ScalarContext::torsion(3).unwrap();
        let reports = verify_constructor_identities(&t, 4).unwrap();
        assert_eq!(reports.len(), constructor_identity_names().len());
        for r in &reports {
            assert!(r.pairs_checked > 0, "{}", r.claim);
            let expect_hold = !matches!(
                r.claim.as_str(),
                "base-g-closed-form"
                    | "base-g-sum"
                    | "normalized-c-power"
                    | "construct-c-power-sum"
            );
            assert_eq!(r.passed(), expect_hold, "{}", r.summary());
        }
    }

    #[test]
    fn oracle_equivalence_small() {
        for ctx in [ScalarContext::generic(), ScalarContext::torsion(4).unwrap()] {
            let r = verify_oracle_equivalence(&ctx, 10, 7, 3, 3).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn report_json_shape() {
        let t = ScalarContext::torsion(2).unwrap();
        let r = verify_gradation(&t, Window::new(1, 1)).unwrap();
        let j = r.to_json();
        for key in [
            "claim",
            "parameters",
            "pairs_checked",
            "violations",
            "elapsed",
        ] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(r.pairs_checked, 36);
    }
}
