use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value as Json};

use super::Monomial;
use crate::error::{Error, Result};
use crate::qscalar::{Scalar, ScalarContext};

/// A finite linear combination of basis monomials.
///
/// Zero coefficients are never stored, and terms iterate in canonical
/// monomial order (grade, then `C`-exponent).
#[derive(Clone)]
pub struct Element {
    ctx: ScalarContext,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero(ctx: &ScalarContext) -> Self {
        Element {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &ScalarContext) -> Self {
        Self::monomial(ctx, Monomial::IDENTITY)
    }

    pub fn monomial(ctx: &ScalarContext, m: Monomial) -> Self {
        Self::term(ctx, m, ctx.one())
    }

    pub fn term(ctx: &ScalarContext, m: Monomial, coeff: Scalar) -> Self {
        let mut e = Self::zero(ctx);
        e.add_term(m, coeff);
        e
    }

    pub fn a(ctx: &ScalarContext) -> Self {
        Self::monomial(ctx, Monomial::A)
    }

    pub fn b(ctx: &ScalarContext) -> Self {
        Self::monomial(ctx, Monomial::B)
    }

    pub fn c(ctx: &ScalarContext) -> Self {
        Self::monomial(ctx, Monomial::C)
    }

    pub fn from_terms<I>(ctx: &ScalarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut e = Self::zero(ctx);
        for (m, s) in terms {
            e.add_term(m, s);
        }
        e
    }

    pub fn context(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    /// The single monomial with coefficient 1, if that is what `self` is.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(*m),
            _ => None,
        }
    }

    /// Lowest monomial in canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next()
    }

    /// Adds `coeff * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        debug_assert!(coeff.context() == &self.ctx);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Self::zero(&self.ctx);
        }
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.checked_add(&-other)
    }

    /// Splits into homogeneous components, keyed by grade.
    pub fn graded_components(&self) -> BTreeMap<i32, Element> {
        let mut out: BTreeMap<i32, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.grade())
                .or_insert_with(|| Element::zero(&self.ctx))
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// The grade when all terms share one; `None` for zero or mixed elements.
    pub fn homogeneous_grade(&self) -> Option<i32> {
        let mut grades = self.terms.keys().map(Monomial::grade);
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Element {
        Element {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `{"mode": ..., "p": ..., "terms": [{"k", "d", "coeff"}...]}` in
    /// canonical order.
    pub fn to_json(&self) -> Json {
        let terms: Vec<Json> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"k": m.k, "d": m.d, "coeff": c.to_json()}))
            .collect();
        match self.ctx.order() {
            None => json!({"mode": "generic", "terms": terms}),
            Some(p) => json!({"mode": "torsion", "p": p, "terms": terms}),
        }
    }

    /// Reads [`Element::to_json`] output, building a fresh context.
    pub fn from_json(json: &Json) -> Result<Element> {
        let bad = |what: &str| Error::Serialization(format!("element JSON: {what}"));
        let ctx = match json.get("mode").and_then(Json::as_str) {
            Some("generic") => ScalarContext::generic(),
            Some("torsion") => {
                let p = json
                    .get("p")
                    .and_then(Json::as_u64)
                    .ok_or_else(|| bad("missing p"))?;
                ScalarContext::torsion(p as usize)?
            }
            _ => return Err(bad("mode must be \"generic\" or \"torsion\"")),
        };
        Self::from_json_in(&ctx, json)
    }

    /// Reads [`Element::to_json`] output into an existing context.
    pub fn from_json_in(ctx: &ScalarContext, json: &Json) -> Result<Element> {
        let bad = |what: &str| Error::Serialization(format!("element JSON: {what}"));
        let terms = json
            .get("terms")
            .and_then(Json::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut e = Element::zero(ctx);
        for t in terms {
            let k = t
                .get("k")
                .and_then(Json::as_u64)
                .ok_or_else(|| bad("bad k"))?;
            let d = t
                .get("d")
                .and_then(Json::as_i64)
                .ok_or_else(|| bad("bad d"))?;
            let c = ctx.scalar_from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            let k = u32::try_from(k).map_err(|_| bad("k out of range"))?;
            let d = i32::try_from(d).map_err(|_| bad("d out of range"))?;
            e.add_term(Monomial::new(k, d), c);
        }
        Ok(e)
    }
}

fn format_term(m: &Monomial, c: &Scalar) -> String {
    let mono = m.to_string();
    if c.is_one() {
        return mono;
    }
    if (-c).is_one() {
        return format!("-{mono}");
    }
    let coeff = if c.is_compound() {
        format!("({c})")
    } else {
        c.to_string()
    };
    if *m == Monomial::IDENTITY && !c.is_compound() {
        format!("{coeff}*I")
    } else {
        format!("{coeff}*{mono}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let t = format_term(m, c);
            if i == 0 {
                f.write_str(&t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({self})", self.ctx)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for Element {}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    /// Panics on mismatched contexts; see [`Element::checked_add`].
    fn add(self, rhs: &'a Element) -> Element {
        self.checked_add(rhs).expect("element addition")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        self.checked_sub(rhs).expect("element subtraction")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::elements;

    proptest! {
        #[test]
        fn json_round_trip((_, xs) in elements(1, 6, 5)) {
            let x = &xs[0];
            prop_assert_eq!(&Element::from_json(&x.to_json()).unwrap(), x);
        }

        #[test]
        fn additive_group((ctx, xs) in elements(2, 4, 4)) {
            let (x, y) = (&xs[0], &xs[1]);
            prop_assert_eq!(&(x + y) - y, x.clone());
            prop_assert_eq!(x + &(-x), Element::zero(&ctx));
            prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
