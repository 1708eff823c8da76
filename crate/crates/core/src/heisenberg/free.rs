//! Free words in `A`, `B` and their reduction by `AB -> qBA + I`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qscalar::{Scalar, ScalarContext};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
}

/// A word over `{A, B}`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    /// Accepts `I` or a string over `A`, `B`.
    pub fn parse(text: &str) -> Result<FreeWord> {
        let t = text.trim();
        if t == "I" || t.is_empty() {
            return Ok(FreeWord::empty());
        }
        t.chars()
            .map(|c| match c {
                'A' => Ok(Letter::A),
                'B' => Ok(Letter::B),
                other => Err(Error::InvalidArgument(format!("letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(FreeWord)
    }

    /// Positions `i` with `A` at `i` and `B` at `i + 1`.
    fn redexes(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Letter::A && w[1] == Letter::B)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "A",
                Letter::B => "B",
            })?;
        }
        Ok(())
    }
}

/// A scalar combination of free words with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreePoly {
    ctx: ScalarContext,
    terms: BTreeMap<FreeWord, Scalar>,
}

impl FreePoly {
    pub fn zero(ctx: &ScalarContext) -> Self {
        FreePoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn word(ctx: &ScalarContext, w: FreeWord) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(w, ctx.one());
        p
    }

    pub fn letter(ctx: &ScalarContext, l: Letter) -> Self {
        Self::word(ctx, FreeWord(vec![l]))
    }

    /// `AB - BA`.
    pub fn c(ctx: &ScalarContext) -> Self {
        let mut p = Self::word(ctx, FreeWord(vec![Letter::A, Letter::B]));
        p.add_term(FreeWord(vec![Letter::B, Letter::A]), -ctx.one());
        p
    }

    pub fn context(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: FreeWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> FreePoly {
        let mut out = Self::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = Self::zero(&self.ctx);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.to_string()
                } else {
                    format!("({c})*{w}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Coefficients on the ordered words `B^a A^b`, keyed by `(a, b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaNormalForm {
    ctx: ScalarContext,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BaNormalForm {
    pub fn zero(ctx: &ScalarContext) -> Self {
        BaNormalForm {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &ScalarContext) -> Self {
        let mut f = Self::zero(ctx);
        f.add_term((0, 0), ctx.one());
        f
    }

    pub fn context(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn get(&self, a: u32, b: u32) -> Scalar {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    fn merge_scaled(&mut self, other: &BaNormalForm, s: &Scalar) {
        for (key, c) in &other.terms {
            self.add_term(*key, c * s);
        }
    }
}

/// Left-to-right reducer: appends letters to a normal form, caching the
/// expansion of `A^b B` per `b`.
pub struct Reducer {
    ctx: ScalarContext,
    a_pow_b: HashMap<u32, Vec<((u32, u32), Scalar)>>,
}

impl Reducer {
    pub fn new(ctx: &ScalarContext) -> Self {
        Reducer {
            ctx: ctx.clone(),
            a_pow_b: HashMap::new(),
        }
    }

    /// `A^b B` as `(da, b') -> coeff`, meaning `B^da A^b'`, obtained by
    /// rewriting the single redex one step at a time.
    fn expand_a_pow_b(&mut self, b: u32) -> &[((u32, u32), Scalar)] {
        let ctx = &self.ctx;
        self.a_pow_b.entry(b).or_insert_with(|| {
            let q = ctx.q();
            let mut done: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
            // A^j B A^s with coefficient c
            let (mut j, mut s, mut c) = (b, 0u32, ctx.one());
            while j > 0 {
                // A^{j-1} (AB) A^s = q A^{j-1} B A^{s+1} + A^{j-1+s}
                let key = (0, j - 1 + s);
                let v = match done.remove(&key) {
                    Some(old) => &old + &c,
                    None => c.clone(),
                };
                done.insert(key, v);
                c = &c * &q;
                j -= 1;
                s += 1;
            }
            done.insert((1, s), c);
            done.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
    }

    pub fn append_letter(&mut self, form: &BaNormalForm, l: Letter) -> BaNormalForm {
        let mut out = BaNormalForm::zero(&self.ctx);
        match l {
            Letter::A => {
                for (&(a, b), c) in &form.terms {
                    out.add_term((a, b + 1), c.clone());
                }
            }
            Letter::B => {
                for (&(a, b), c) in &form.terms {
                    let exp = self.expand_a_pow_b(b).to_vec();
                    for ((da, nb), s) in exp {
                        out.add_term((a + da, nb), c * &s);
                    }
                }
            }
        }
        out
    }

    pub fn append_word(&mut self, form: &BaNormalForm, w: &FreeWord) -> BaNormalForm {
        let mut cur = form.clone();
        for &l in w.letters() {
            cur = self.append_letter(&cur, l);
        }
        cur
    }

    /// `form * poly`, reduced.
    pub fn append_poly(&mut self, form: &BaNormalForm, poly: &FreePoly) -> BaNormalForm {
        let mut out = BaNormalForm::zero(&self.ctx);
        for (w, c) in poly.terms() {
            let part = self.append_word(form, w);
            out.merge_scaled(&part, c);
        }
        out
    }

    pub fn reduce(&mut self, poly: &FreePoly) -> BaNormalForm {
        let one = BaNormalForm::one(&self.ctx);
        self.append_poly(&one, poly)
    }
}

/// Normal form of `w` on the ordered words `B^a A^b`.
pub fn reduce_word(w: &FreePoly) -> BaNormalForm {
    Reducer::new(w.context()).reduce(w)
}

/// Rewrite order for [`reduce_word_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    /// Leftmost redex of the first reducible word.
    Leftmost,
    /// Rightmost redex of the last reducible word.
    Rightmost,
    /// Uniformly random word and redex, from a seeded generator.
    Random(u64),
}

/// Literal rewriting of `AB` to `qBA + I`, one redex at a time, in the
/// given order. Slower than [`reduce_word`]; used to test confluence.
pub fn reduce_word_with(w: &FreePoly, strategy: RewriteStrategy) -> BaNormalForm {
    let ctx = w.context().clone();
    let q = ctx.q();
    let mut rng = match strategy {
        RewriteStrategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut work = w.clone();
    loop {
        let reducible: Vec<&FreeWord> = work
            .terms
            .keys()
            .filter(|w| w.redexes().next().is_some())
            .collect();
        if reducible.is_empty() {
            break;
        }
        let (word, pos) = match strategy {
            RewriteStrategy::Leftmost => {
                let w = reducible[0];
                (w.clone(), w.redexes().next().unwrap())
            }
            RewriteStrategy::Rightmost => {
                let w = reducible[reducible.len() - 1];
                (w.clone(), w.redexes().last().unwrap())
            }
            RewriteStrategy::Random(_) => {
                let rng = rng.as_mut().unwrap();
                let w = reducible[rng.gen_range(0..reducible.len())];
                let rs: Vec<usize> = w.redexes().collect();
                (w.clone(), rs[rng.gen_range(0..rs.len())])
            }
        };
        let c = work.terms.remove(&word).unwrap();
        let mut swapped = word.0.clone();
        swapped.swap(pos, pos + 1);
        let mut dropped = word.0.clone();
        dropped.drain(pos..pos + 2);
        work.add_term(FreeWord(swapped), &c * &q);
        work.add_term(FreeWord(dropped), c);
    }
    let mut out = BaNormalForm::zero(&ctx);
    for (w, c) in work.terms {
        let a = w.0.iter().take_while(|&&l| l == Letter::B).count() as u32;
        let b = w.0.len() as u32 - a;
        out.add_term((a, b), c);
    }
    out
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::{context, word};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn confluent(ctx in context(), w in word(8), seed in any::<u64>()) {
            let p = FreePoly::word(&ctx, w);
            let fold = reduce_word(&p);
            for st in [RewriteStrategy::Leftmost, RewriteStrategy::Rightmost, RewriteStrategy::Random(seed)] {
                prop_assert_eq!(&reduce_word_with(&p, st), &fold);
            }
        }

        #[test]
        fn reduction_is_multiplicative(ctx in context(), u in word(5), v in word(5)) {
            let (pu, pv) = (FreePoly::word(&ctx, u), FreePoly::word(&ctx, v));
            let joint = reduce_word(&pu.mul(&pv));
            let mut red = Reducer::new(&ctx);
            let left = red.reduce(&pu);
            prop_assert_eq!(red.append_poly(&left, &pv), joint);
        }
    }
}
